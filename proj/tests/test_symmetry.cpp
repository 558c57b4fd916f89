#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tcay/error.hpp"
#include "tcay/symmetry.hpp"

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

// Conjugating every right translation, not just the generators.
bool normal_by_full_conjugation(const CayleyGraph& g, const AutSummary& summary) {
  for (const auto& pi : summary.stab_elements) {
    const auto pi_inv = inverse(pi);
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
      if (!is_right_translation(g, compose(pi, compose(right_translation(g, g.element(a)), pi_inv)))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("stabilizer sizes") {
    CHECK(stabilizer_of_identity(CayleyGraph(kFourCycle)).size() == 32);
    CHECK(stabilizer_of_identity(CayleyGraph(path_set(5))).size() == 2);
    CHECK(stabilizer_of_identity(CayleyGraph(TranspositionSet::complete(3))).size() == 12);
    CHECK_THROWS_AS(stabilizer_of_identity(CayleyGraph(path_set(8))), CapacityError);
  }

  TEST_CASE("automorphism group orders") {
    CHECK(aut_order(CayleyGraph(kFourCycle)).aut_order == 768);
    CHECK(aut_order(CayleyGraph(path_set(5))).aut_order == 240);
    CHECK(aut_order(CayleyGraph(TranspositionSet::complete(3))).aut_order == 72);
    CHECK(aut_order(CayleyGraph(TranspositionSet::complete(4))).aut_order == 1152);
    CHECK(aut_order(CayleyGraph(star_set(5))).aut_order == 2880);
  }

  TEST_CASE("orbit-stabilizer agrees with naive enumeration for every class up to n = 4") {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& rep : enumerate_connected_classes(n)) {
        const CayleyGraph g(TranspositionSet::from_graph(rep));
        REQUIRE(aut_order(g).aut_order == oracle::count_automorphisms(g));
      }
    }
  }

  TEST_CASE("stabilizer is a group fixing id and preserving commutation") {
    for (const auto& t : {kFourCycle, path_set(5), TranspositionSet::complete(4)}) {
      const CayleyGraph g(t);
      const auto summary = aut_order(g);
      const std::set<VertexPermutation> members(summary.stab_elements.begin(), summary.stab_elements.end());
      CHECK(summary.stab_elements.front().is_identity());
      CHECK(summary.stab_order == summary.stab_elements.size());
      CHECK(summary.aut_order == factorial(t.n()) * summary.stab_order);
      for (const auto& a : summary.stab_elements) {
        REQUIRE(a(0) == 0);
        REQUIRE(g.is_automorphism(a));
        for (const auto& b : summary.stab_elements) REQUIRE(members.count(compose(a, b)) == 1);
        // Read a on N(id) as a map on generators.
        std::vector<int> on_generators(static_cast<std::size_t>(g.degree()));
        for (int k = 0; k < g.degree(); ++k) on_generators[k] = g.edge_label(0, a(g.neighbor(0, k)));
        for (int i = 0; i < g.degree(); ++i) {
          for (int j = 0; j < g.degree(); ++j) {
            REQUIRE(g.generator(i).disjoint_from(g.generator(j)) ==
                    g.generator(on_generators[i]).disjoint_from(g.generator(on_generators[j])));
          }
        }
      }
    }
  }

  TEST_CASE("commuting-preserving maps") {
    const CayleyGraph path5(path_set(5));
    // Only the identity and the reversal of the path.
    CHECK(commuting_preserving_maps(path5).size() == 2);
    const CayleyGraph star5(star_set(5));
    CHECK(commuting_preserving_maps(star5).size() == 24);
  }

  TEST_CASE("fixers of the identity neighbourhood") {
    const auto path_fixer = fix_neighborhood_stabilizer(CayleyGraph(path_set(5)));
    REQUIRE(path_fixer.size() == 1);
    CHECK(path_fixer.front().is_identity());
    CHECK(fix_neighborhood_stabilizer(CayleyGraph(TranspositionSet::complete(5))).size() > 1);
    CHECK(fix_neighborhood_stabilizer(CayleyGraph(kFourCycle)).size() > 1);
  }

  TEST_CASE("normality verdicts") {
    const CayleyGraph path5(path_set(5));
    for (auto method : {NormalityMethod::FixNeighborhood, NormalityMethod::Conjugation, NormalityMethod::Both}) {
      const auto verdict = is_normal(path5, method);
      CHECK(verdict.is_normal);
      CHECK(verdict.actual_order == 240);
      CHECK(verdict.expected_normal_order == 240);
      CHECK_FALSE(verdict.witness.has_value());
    }

    const auto c4 = is_normal(CayleyGraph(kFourCycle), NormalityMethod::Conjugation);
    CHECK_FALSE(c4.is_normal);
    CHECK(c4.actual_order == 768);
    CHECK(c4.expected_normal_order == 192);
    REQUIRE(c4.witness.has_value());
    CHECK_FALSE(is_right_translation(CayleyGraph(kFourCycle), *c4.witness).has_value());

    const CayleyGraph k5(TranspositionSet::complete(5));
    const auto k5_verdict = is_normal(k5, NormalityMethod::FixNeighborhood);
    CHECK_FALSE(k5_verdict.is_normal);
    CHECK(k5_verdict.actual_order == 28800);
    CHECK(k5_verdict.expected_normal_order == 14400);
    REQUIRE(k5_verdict.witness.has_value());
    CHECK(k5.is_automorphism(*k5_verdict.witness));
    CHECK_FALSE(k5_verdict.witness->is_identity());

    CHECK_THROWS_AS(is_normal(CayleyGraph(kFourCycle), NormalityMethod::FixNeighborhood), PreconditionError);
    CHECK_THROWS_AS(is_normal(CayleyGraph(kFourCycle), NormalityMethod::Both), PreconditionError);
    CHECK(to_string(NormalityMethod::FixNeighborhood) == "fix-neighborhood");
  }

  TEST_CASE("generator conjugation agrees with full conjugation up to n = 4") {
    for (int n = 3; n <= 4; ++n) {
      for (const auto& rep : enumerate_connected_classes(n)) {
        const CayleyGraph g(TranspositionSet::from_graph(rep));
        const auto summary = aut_order(g);
        REQUIRE(is_normal(g, NormalityMethod::Conjugation, summary).is_normal ==
                normal_by_full_conjugation(g, summary));
      }
    }
  }

  TEST_CASE("normal classes have the predicted order, the exceptions exceed it") {
    for (int n = 3; n <= 5; ++n) {
      for (const auto& rep : enumerate_connected_classes(n)) {
        const auto t = TranspositionSet::from_graph(rep);
        const CayleyGraph g(t);
        const auto verdict = is_normal(g, NormalityMethod::Conjugation);
        const auto expected = factorial(n) * automorphisms(rep).order;
        CHECK(verdict.expected_normal_order == expected);
        if (verdict.is_normal) {
          CHECK(verdict.actual_order == expected);
        } else {
          CHECK(verdict.actual_order > expected);
        }
      }
    }
  }

  TEST_CASE("direct product structure") {
    CHECK(verify_direct_product(CayleyGraph(path_set(5))));
    CHECK(verify_direct_product(CayleyGraph(star_set(5))));
    CHECK(verify_direct_product(CayleyGraph(path_set(4))));
    CHECK_THROWS_AS(verify_direct_product(CayleyGraph(kFourCycle)), PreconditionError);
    CHECK_THROWS_AS(verify_direct_product(CayleyGraph(TranspositionSet(2, {{1, 2}}))), PreconditionError);
  }

  TEST_CASE("star on six points" * doctest::timeout(120)) {
    const CayleyGraph g(star_set(6));
    const auto summary = aut_order(g);
    CHECK(summary.aut_order == 86400);
    CHECK(verify_direct_product(g, summary));
  }
}
