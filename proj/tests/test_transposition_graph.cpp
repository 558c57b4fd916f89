#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tcay/error.hpp"
#include "tcay/transposition_graph.hpp"

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

}  // namespace

TEST_SUITE("transposition_graph") {
  TEST_CASE("transposition sets") {
    const TranspositionSet t(4, {{3, 4}, {2, 1}});
    CHECK(t.members() == std::vector<Transposition>{{1, 2}, {3, 4}});
    CHECK(t.contains({2, 1}));
    CHECK_FALSE(t.contains({1, 3}));
    CHECK_THROWS_AS(TranspositionSet(3, {{1, 2}, {2, 1}}), DomainError);
    CHECK_THROWS_AS(TranspositionSet(3, {{1, 4}}), RangeError);
    CHECK_THROWS_AS(TranspositionSet(3, {}), DomainError);
    CHECK(TranspositionSet::complete(5).size() == 10);
    CHECK(TranspositionSet::from_graph(graph_of(kFourCycle)) == kFourCycle);
  }

  TEST_CASE("graph_of") {
    const auto c4 = graph_of(kFourCycle);
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);
    for (int v = 1; v <= 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(graph_of(TranspositionSet::complete(5)).size() == 10);
    CHECK(graph_of(TranspositionSet(2, {{1, 2}})).size() == 1);
  }

  TEST_CASE("generation matches connectivity and subgroup closure") {
    CHECK(generates_sn(path_set(5)));
    CHECK_FALSE(generates_sn(TranspositionSet(4, {{1, 2}, {3, 4}})));
    CHECK(generates_sn(star_set(6)));
    for (int n = 2; n <= 4; ++n) {
      const auto pairs = all_transpositions(n);
      for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
        std::vector<Transposition> ts;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          if ((mask >> k) & 1) ts.push_back(pairs[k]);
        }
        const TranspositionSet t(n, ts);
        REQUIRE(generates_sn(t) == (oracle::generated_order(n, ts) == factorial(n)));
      }
    }
  }

  TEST_CASE("classification") {
    CHECK(classify(kFourCycle).kind == GraphKind::FourCycle);
    CHECK(classify(TranspositionSet::complete(5)).kind == GraphKind::CompleteGraph);
    CHECK(classify(path_set(5)).kind == GraphKind::Tree);
    CHECK(classify(star_set(5)).kind == GraphKind::Tree);
    CHECK(classify(TranspositionSet(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})).kind == GraphKind::GirthAtLeast5);
    CHECK(classify(TranspositionSet(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}})).kind == GraphKind::Other);
    CHECK(classify(TranspositionSet(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}})).kind == GraphKind::Other);
    CHECK(classify(TranspositionSet(2, {{1, 2}})).kind == GraphKind::Tree);
    CHECK(classify(TranspositionSet::complete(3)).kind == GraphKind::CompleteGraph);
    CHECK(classify(path_set(4)).connected);
    CHECK_THROWS_AS(classify(TranspositionSet(4, {{1, 2}, {3, 4}})), PreconditionError);
    CHECK(to_string(GraphKind::FourCycle) == "FourCycle");
  }

  TEST_CASE("girth") {
    CHECK(girth(graph_of(path_set(6))) == 0);
    CHECK(girth(graph_of(kFourCycle)) == 4);
    CHECK(girth(graph_of(TranspositionSet::complete(4))) == 3);
    CHECK(girth(Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}})) == 6);
  }

  TEST_CASE("short cycles through adjacent edges") {
    CHECK(edges_share_short_cycle(kFourCycle, {1, 2}, {2, 3}));
    CHECK_FALSE(edges_share_short_cycle(path_set(5), {1, 2}, {2, 3}));
    CHECK(edges_share_short_cycle(TranspositionSet::complete(3), {1, 2}, {2, 3}));
    CHECK_THROWS_AS(edges_share_short_cycle(path_set(5), {1, 2}, {3, 4}), PreconditionError);
    CHECK_THROWS_AS(edges_share_short_cycle(path_set(5), {1, 2}, {1, 2}), PreconditionError);
    // A 5-cycle is not short.
    CHECK_FALSE(edges_share_short_cycle(TranspositionSet(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}), {1, 2}, {2, 3}));
  }

  TEST_CASE("trees never have short cycles") {
    for (const auto& g : enumerate_connected_classes(6)) {
      const auto t = TranspositionSet::from_graph(g);
      if (classify(t).kind != GraphKind::Tree) continue;
      for (const auto& a : t.members()) {
        for (const auto& b : t.members()) {
          if (a != b && !a.disjoint_from(b)) REQUIRE_FALSE(edges_share_short_cycle(t, a, b));
        }
      }
    }
  }

  TEST_CASE("inducing line-graph automorphisms") {
    const auto p3 = graph_of(path_set(3));
    CHECK(induce_line_automorphism(p3, Permutation(3)).is_identity());
    CHECK(induce_line_automorphism(p3, Permutation::parse_cycles(3, "(1 3)")) == Permutation::parse_cycles(2, "(1 2)"));
    // Line-graph vertices of C4 are (1 2), (1 4), (2 3), (3 4) in that order.
    const auto rotation = induce_line_automorphism(graph_of(kFourCycle), Permutation::parse_cycles(4, "(1 2 3 4)"));
    CHECK(rotation == Permutation::parse_cycles(4, "(1 3 4 2)"));
    CHECK_THROWS_AS(induce_line_automorphism(p3, Permutation::parse_cycles(3, "(1 2)")), ContractViolation);
  }

  TEST_CASE("lifting line-graph automorphisms") {
    const auto star = graph_of(star_set(5));
    CHECK(lift_line_automorphism(star, Permutation(4)).is_identity());
    const auto line_aut = automorphisms(line_graph(star).graph);
    CHECK(line_aut.order == 24);
    for (const auto& psi : line_aut.elements) {
      const auto phi = lift_line_automorphism(star, psi);
      CHECK(phi(1) == 1);
      CHECK(induce_line_automorphism(star, phi) == psi);
    }
    CHECK_THROWS_AS(lift_line_automorphism(graph_of(kFourCycle), Permutation(4)), PreconditionError);
  }

  TEST_CASE("induce and lift are inverse group isomorphisms for n = 5") {
    for (const auto& g : enumerate_connected_classes(5)) {
      const auto graph_aut = automorphisms(g);
      for (const auto& phi : graph_aut.elements) REQUIRE(lift_line_automorphism(g, induce_line_automorphism(g, phi)) == phi);
      for (const auto& a : graph_aut.elements) {
        for (const auto& b : graph_aut.elements) {
          REQUIRE(induce_line_automorphism(g, compose(a, b)) ==
                  compose(induce_line_automorphism(g, a), induce_line_automorphism(g, b)));
        }
      }
    }
  }

  TEST_CASE("lifting rejects non-automorphisms") {
    // Path 1-2-3-4-5: line vertices (1 2), (2 3), (3 4), (4 5); swapping the
    // first two does not preserve adjacency in L(G).
    CHECK_THROWS_AS(lift_line_automorphism(graph_of(path_set(5)), Permutation::parse_cycles(4, "(1 2)")), NotLiftable);
  }
}
