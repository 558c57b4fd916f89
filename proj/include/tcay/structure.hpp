#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tcay/cayley_graph.hpp"
#include "tcay/permutation.hpp"
#include "tcay/transposition_graph.hpp"

namespace tcay {

/// The structural facts about transpositions and Cay(S_n, T) checked here.
enum class Lemma {
  CommuteDisjoint,  // transpositions commute iff their pairs are disjoint
  UniqueFourCycle,  // commuting a, b close a unique 4-cycle through sigma, at ab*sigma
  TriangleK33,      // a triangle in G(T) <-> a K_{3,3} through sigma
  ChainTuples,      // 4-tuples with product (1 2 3) fall into eight families
  UniqueSixCycle,   // non-commuting s, t off short cycles close a unique 6-cycle
};

std::string to_string(Lemma lemma);

struct LemmaViolation {
  Permutation sigma;
  std::vector<Transposition> transpositions;
  std::string found;
};

/// A six-cycle count for a pair where the uniqueness hypothesis fails.
struct UnjudgedPair {
  Permutation sigma;
  Transposition s;
  Transposition t;
  std::size_t cycles = 0;
};

struct LemmaReport {
  Lemma lemma = Lemma::CommuteDisjoint;
  std::size_t instances_checked = 0;
  std::vector<LemmaViolation> violations;
  /// Only for UniqueSixCycle.
  std::vector<UnjudgedPair> unjudged;

  bool passed() const noexcept { return violations.empty(); }
  /// Accumulates another report of the same lemma.
  void merge(LemmaReport other);
};

LemmaReport verify_commute_disjoint(const TranspositionSet& t);
LemmaReport verify_four_cycle(const CayleyGraph& g, const Permutation& sigma);
LemmaReport verify_k33(const CayleyGraph& g, const Permutation& sigma);
LemmaReport verify_six_cycle(const CayleyGraph& g, const Permutation& sigma);

/// One of the eight symbolic families of 4-tuples. Symbol 0 stands for the
/// free point k outside {1, 2, 3}.
struct TupleFamily {
  int id = 0;
  std::array<std::array<int, 2>, 4> pattern{};
  bool parametric = false;

  std::string str() const;
  /// Concrete tuple for the given k (ignored when not parametric).
  std::array<Transposition, 4> instantiate(int k) const;
};

/// Families in their listed order.
const std::array<TupleFamily, 8>& tuple_families();

using TranspositionTuple = std::array<Transposition, 4>;

struct ClassifiedTuple {
  TranspositionTuple tuple;
  /// 0 when the tuple matches no family.
  int family = 0;
  std::optional<int> k;
};

/// True when (a, b, c, d) multiply to (1 2 3) and no two consecutive entries
/// of ((1 2), a, b, c, d, (2 3)) commute.
bool is_chain_tuple(int n, const TranspositionTuple& tuple);

/// Brute force over all 4-tuples of transpositions of S_n, keeping chain
/// tuples, each tagged with its family. Lexicographic order. Throws
/// DomainError for n < 3 and ContractViolation if a tuple matches two
/// families.
std::vector<ClassifiedTuple> enumerate_chain_tuples(int n);

/// Survivors equal the union of the instantiated families, every survivor is
/// classified, and each uses at most four points.
LemmaReport verify_chain_tuples(int n);

}  // namespace tcay
