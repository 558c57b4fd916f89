#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tcay/error.hpp"
#include "tcay/structure.hpp"

using namespace tcay;

namespace {

TranspositionSet path_set(int n) {
  std::vector<Transposition> ts;
  for (int i = 1; i < n; ++i) ts.emplace_back(i, i + 1);
  return {n, ts};
}

TranspositionSet star_set(int n) {
  std::vector<Transposition> ts;
  for (int k = 2; k <= n; ++k) ts.emplace_back(1, k);
  return {n, ts};
}

const TranspositionSet kFourCycle{4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}};

Permutation cyc(int n, const char* text) { return Permutation::parse_cycles(n, text); }

std::set<Permutation> extra_common_neighbors(const CayleyGraph& g, const Permutation& x, const Permutation& y,
                                             const Permutation& skip) {
  std::set<Permutation> out;
  const Vertex vx = g.vertex_of(x);
  const Vertex vy = g.vertex_of(y);
  for (Vertex w : g.neighbor_row(vx)) {
    if (g.adjacent(w, vy) && g.element(w) != skip) out.insert(g.element(w));
  }
  return out;
}

// Simple 6-cycles containing the path u - v - w in which consecutive edges
// carry non-commuting generator labels, wrap-around included.
std::vector<std::vector<Vertex>> six_cycles_through(const CayleyGraph& g, Vertex u, Vertex v, Vertex w) {
  auto linked = [&](Vertex a, Vertex b, Vertex c) {
    const auto& x = g.generator(g.edge_label(a, b));
    const auto& y = g.generator(g.edge_label(b, c));
    return x != y && !x.disjoint_from(y);
  };
  std::vector<std::vector<Vertex>> found;
  std::vector<Vertex> walk{u, v, w};
  auto extend = [&](auto&& self) -> void {
    const std::size_t len = walk.size();
    if (len == 6) {
      if (g.adjacent(walk[5], u) && linked(walk[4], walk[5], u) && linked(walk[5], u, v)) found.push_back(walk);
      return;
    }
    for (Vertex x : g.neighbor_row(walk.back())) {
      if (std::find(walk.begin(), walk.end(), x) != walk.end()) continue;
      if (!linked(walk[len - 2], walk[len - 1], x)) continue;
      walk.push_back(x);
      self(self);
      walk.pop_back();
    }
  };
  if (linked(u, v, w)) extend(extend);
  return found;
}

// Independent count of chain tuples: consecutive entries must share exactly
// one point.
std::size_t brute_force_chain_tuples(int n) {
  const auto pairs = all_transpositions(n);
  const auto target = cyc(n, "(1 2 3)");
  auto linked = [](const Transposition& a, const Transposition& b) { return a != b && !a.disjoint_from(b); };
  std::size_t count = 0;
  for (const auto& a : pairs) {
    if (!linked({1, 2}, a)) continue;
    for (const auto& b : pairs) {
      if (!linked(a, b)) continue;
      for (const auto& c : pairs) {
        if (!linked(b, c)) continue;
        for (const auto& d : pairs) {
          if (!linked(c, d) || !linked(d, {2, 3})) continue;
          std::vector<int> image(static_cast<std::size_t>(n) + 1);
          for (int x = 1; x <= n; ++x) {
            int y = x;
            for (const auto* t : {&d, &c, &b, &a}) y = t->contains(y) ? t->other(y) : y;
            image[x] = y;
          }
          bool match = true;
          for (int x = 1; x <= n; ++x) match = match && image[x] == target(x);
          count += match;
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("commuting transpositions are the disjoint ones") {
    const auto report = verify_commute_disjoint(TranspositionSet::complete(5));
    CHECK(report.passed());
    CHECK(report.instances_checked == 45);
    CHECK(verify_commute_disjoint(TranspositionSet(4, {{1, 2}, {3, 4}})).passed());
    CHECK(verify_commute_disjoint(TranspositionSet(3, {{1, 2}, {2, 3}})).passed());
    CHECK(to_string(Lemma::CommuteDisjoint) == "commute_disjoint");
  }

  TEST_CASE("four cycles and common neighbours") {
    const CayleyGraph path4(path_set(4));
    CHECK(verify_four_cycle(path4, Permutation(4)).passed());
    CHECK(extra_common_neighbors(path4, cyc(4, "(1 2)"), cyc(4, "(3 4)"), Permutation(4)) ==
          std::set<Permutation>{cyc(4, "(1 2)(3 4)")});

    const CayleyGraph path5(path_set(5));
    CHECK(verify_four_cycle(path5, Permutation(5)).passed());
    CHECK(extra_common_neighbors(path5, cyc(5, "(1 2)"), cyc(5, "(2 3)"), Permutation(5)).empty());

    const CayleyGraph k3(TranspositionSet::complete(3));
    CHECK(verify_four_cycle(k3, Permutation(3)).passed());
    CHECK(extra_common_neighbors(k3, cyc(3, "(1 2)"), cyc(3, "(2 3)"), Permutation(3)) ==
          std::set<Permutation>{cyc(3, "(1 2 3)"), cyc(3, "(1 3 2)")});
  }

  TEST_CASE("triangles and K33") {
    const CayleyGraph k3(TranspositionSet::complete(3));
    const auto report = verify_k33(k3, Permutation(3));
    CHECK(report.passed());
    CHECK(report.instances_checked > 0);

    // Brute force: three generator neighbours of id with two further common
    // neighbours exist exactly when G(T) has a triangle.
    for (const auto& t : {path_set(5), star_set(5), TranspositionSet::complete(4), kFourCycle}) {
      const CayleyGraph g(t);
      const auto id_row = g.neighbor_row(0);
      bool k33 = false;
      for (std::size_t i = 0; i < id_row.size(); ++i) {
        for (std::size_t j = i + 1; j < id_row.size(); ++j) {
          for (std::size_t k = j + 1; k < id_row.size(); ++k) {
            int common = 0;
            for (Vertex w = 1; w < g.vertex_count(); ++w) {
              common += g.adjacent(w, id_row[i]) && g.adjacent(w, id_row[j]) && g.adjacent(w, id_row[k]);
            }
            k33 = k33 || common >= 2;
          }
        }
      }
      CHECK(k33 == (girth(graph_of(t)) == 3));
      CHECK(verify_k33(g, Permutation(t.n())).passed());
    }
  }

  TEST_CASE("six cycles") {
    const CayleyGraph path5(path_set(5));
    const auto report = verify_six_cycle(path5, Permutation(5));
    CHECK(report.passed());
    CHECK(report.unjudged.empty());
    const auto s = cyc(5, "(2 3)");
    const auto t = cyc(5, "(1 2)");
    const auto cycles = six_cycles_through(path5, path5.vertex_of(t), 0, path5.vertex_of(s));
    REQUIRE(cycles.size() == 1);
    std::set<Permutation> on_cycle;
    for (Vertex v : cycles.front()) on_cycle.insert(path5.element(v));
    CHECK(on_cycle.count(cyc(5, "(1 2 3)")) == 1);
    CHECK(on_cycle.count(cyc(5, "(1 3)")) == 1);
    CHECK(on_cycle.count(cyc(5, "(1 3 2)")) == 1);

    const CayleyGraph star5(star_set(5));
    const auto sigma = cyc(5, "(4 5)");
    CHECK(verify_six_cycle(star5, sigma).passed());
    const auto star_cycles =
        six_cycles_through(star5, star5.vertex_of(compose(cyc(5, "(1 3)"), sigma)), star5.vertex_of(sigma),
                           star5.vertex_of(compose(cyc(5, "(1 2)"), sigma)));
    CHECK(star_cycles.size() == 1);

    const auto c4 = verify_six_cycle(CayleyGraph(kFourCycle), Permutation(4));
    CHECK(c4.passed());
    CHECK(c4.instances_checked == 0);
    CHECK(c4.unjudged.size() == 8);
  }

  TEST_CASE("tsts = st for transpositions sharing a point") {
    for (const auto& a : all_transpositions(5)) {
      for (const auto& b : all_transpositions(5)) {
        if (a == b || a.disjoint_from(b)) continue;
        const auto s = Permutation::transposition(5, a);
        const auto t = Permutation::transposition(5, b);
        REQUIRE(compose(t, compose(s, compose(t, s))) == compose(s, t));
      }
    }
  }

  TEST_CASE("lemma outcomes do not depend on the base point") {
    std::mt19937_64 rng(29);
    for (const auto& t : {path_set(5), star_set(5), TranspositionSet::complete(4), kFourCycle}) {
      const CayleyGraph g(t);
      const auto four_id = verify_four_cycle(g, Permutation(t.n()));
      const auto six_id = verify_six_cycle(g, Permutation(t.n()));
      for (int trial = 0; trial < 5; ++trial) {
        const auto sigma = g.element(static_cast<Vertex>(rng() % g.vertex_count()));
        const auto four = verify_four_cycle(g, sigma);
        const auto six = verify_six_cycle(g, sigma);
        CHECK(four.passed() == four_id.passed());
        CHECK(four.instances_checked == four_id.instances_checked);
        CHECK(six.instances_checked == six_id.instances_checked);
        CHECK(six.unjudged.size() == six_id.unjudged.size());
      }
    }
  }

  TEST_CASE("tuple families") {
    const auto& families = tuple_families();
    CHECK(families[0].str() == "(1 3),(2 3),(1 2),(1 3)");
    CHECK(families[2].str() == "(2 3),(1 2),(2 3),(1 2)");
    CHECK(families[1].str() == "(1 3),(1 k),(1 2),(2 k)");
    int non_parametric = 0;
    for (const auto& f : families) non_parametric += f.parametric ? 0 : 1;
    CHECK(non_parametric == 2);
    for (const auto& f : families) CHECK(is_chain_tuple(5, f.instantiate(5)));
  }

  TEST_CASE("chain tuple enumeration against brute force") {
    for (int n = 3; n <= 6; ++n) {
      const auto tuples = enumerate_chain_tuples(n);
      CHECK(tuples.size() == brute_force_chain_tuples(n));
      for (const auto& entry : tuples) {
        CHECK(entry.family != 0);
        std::set<int> points;
        for (const auto& t : entry.tuple) {
          points.insert(t.lo);
          points.insert(t.hi);
        }
        CHECK(points.size() <= 4);
      }
      CHECK(verify_chain_tuples(n).passed());
    }
    CHECK(enumerate_chain_tuples(4).size() == 8);
    CHECK(enumerate_chain_tuples(5).size() == 14);
    CHECK(enumerate_chain_tuples(6).size() == 20);
    CHECK(enumerate_chain_tuples(3).size() == 2);
    CHECK_THROWS_AS(enumerate_chain_tuples(2), DomainError);
  }

  TEST_CASE("all lemmas hold on every connected class at n = 5") {
    std::mt19937_64 rng(31);
    for (const auto& rep : enumerate_connected_classes(5)) {
      const CayleyGraph g(TranspositionSet::from_graph(rep));
      REQUIRE(verify_commute_disjoint(g.generators()).passed());
      for (int trial = 0; trial < 3; ++trial) {
        const auto sigma = g.element(static_cast<Vertex>(rng() % g.vertex_count()));
        REQUIRE(verify_four_cycle(g, sigma).passed());
        REQUIRE(verify_k33(g, sigma).passed());
        REQUIRE(verify_six_cycle(g, sigma).passed());
      }
    }
  }

  TEST_CASE("all lemmas hold on random connected sets at n = 6") {
    std::mt19937_64 rng(37);
    const auto classes = enumerate_connected_classes(6);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& rep = classes[rng() % classes.size()];
      const CayleyGraph g(TranspositionSet::from_graph(rep.relabeled(unrank(rng() % 720, 6))));
      const auto sigma = g.element(static_cast<Vertex>(rng() % g.vertex_count()));
      REQUIRE(verify_four_cycle(g, sigma).passed());
      REQUIRE(verify_k33(g, sigma).passed());
      REQUIRE(verify_six_cycle(g, sigma).passed());
    }
  }
}
