#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcay/cayley_graph.hpp"
#include "tcay/permutation.hpp"

namespace tcay {

enum class NormalityMethod { FixNeighborhood, Conjugation, Both };

std::string to_string(NormalityMethod method);

/// Order data for Aut(Cay(S_n, T)). R(S_n) acts regularly, so
/// |Aut| = n! * |Stab(id)|.
struct AutSummary {
  std::uint64_t stab_order = 0;
  std::uint64_t aut_order = 0;
  /// Sorted by image table; the identity comes first.
  std::vector<VertexPermutation> stab_elements;
};

struct NormalityVerdict {
  bool is_normal = false;
  NormalityMethod method = NormalityMethod::Both;
  /// For FixNeighborhood: a non-identity automorphism fixing id and N(id).
  /// For Conjugation: a conjugate pi * rho_t * pi^-1 outside R(S_n).
  std::optional<VertexPermutation> witness;
  /// n! * |Aut(G(T))|, the order a normal graph must have.
  std::uint64_t expected_normal_order = 0;
  std::uint64_t actual_order = 0;
  /// Only meaningful for Both: whether the two criteria agreed.
  bool methods_agree = true;
};

/// The maps T -> T (as generator-index permutations) that preserve which
/// pairs of generators commute. Any automorphism fixing id restricts to one.
std::vector<Permutation> commuting_preserving_maps(const CayleyGraph& g);

/// Every automorphism of the graph fixing the identity vertex.
/// Throws CapacityError for n > 7.
std::vector<VertexPermutation> stabilizer_of_identity(const CayleyGraph& g);

/// Every automorphism fixing id and each of its neighbors.
std::vector<VertexPermutation> fix_neighborhood_stabilizer(const CayleyGraph& g);

AutSummary aut_order(const CayleyGraph& g);

/// FixNeighborhood requires n >= 5 and throws PreconditionError otherwise.
NormalityVerdict is_normal(const CayleyGraph& g, NormalityMethod method);
NormalityVerdict is_normal(const CayleyGraph& g, NormalityMethod method, const AutSummary& summary);

/// Checks that Aut is the internal direct product of R(S_n) and the left
/// translations by Aut(G(T)). Throws PreconditionError unless the graph is
/// normal and n >= 3.
bool verify_direct_product(const CayleyGraph& g);
bool verify_direct_product(const CayleyGraph& g, const AutSummary& summary);

/// Largest n accepted by the stabilizer searches.
inline constexpr int kMaxSymmetryDegree = 7;

}  // namespace tcay
