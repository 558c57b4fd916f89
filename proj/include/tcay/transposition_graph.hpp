#pragma once

#include <string>
#include <vector>

#include "tcay/graph.hpp"
#include "tcay/permutation.hpp"

namespace tcay {

/// A non-empty set of transpositions over {1..n}; also the edge set of the
/// transposition graph. Members are kept sorted and distinct.
class TranspositionSet {
 public:
  /// Throws DomainError on empty or duplicate members, RangeError on points
  /// outside {1..n}.
  TranspositionSet(int n, std::vector<Transposition> members);

  static TranspositionSet complete(int n);
  static TranspositionSet from_graph(const Graph& g);

  int n() const noexcept { return n_; }
  const std::vector<Transposition>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const Transposition& t) const;

  bool operator==(const TranspositionSet&) const = default;

 private:
  int n_;
  std::vector<Transposition> members_;
};

Graph graph_of(const TranspositionSet& t);

/// T generates S_n exactly when its transposition graph is connected.
bool generates_sn(const TranspositionSet& t);

enum class GraphKind { Tree, FourCycle, CompleteGraph, GirthAtLeast5, Other };

std::string to_string(GraphKind kind);

struct Classification {
  GraphKind kind = GraphKind::Other;
  bool connected = false;
};

/// Exactly one kind, by precedence Tree, FourCycle, CompleteGraph,
/// GirthAtLeast5, Other. Throws PreconditionError if T does not generate.
Classification classify(const TranspositionSet& t);

/// Length of a shortest cycle, or 0 for a forest.
int girth(const Graph& g);

/// For adjacent members e1 = {i,j}, e2 = {i,k}: whether they lie on a common
/// cycle of length 3 or 4 in G(T). Throws PreconditionError unless e1 and e2
/// are distinct members sharing exactly one endpoint.
bool edges_share_short_cycle(const TranspositionSet& t, const Transposition& e1, const Transposition& e2);

/// phi' on L(g): line vertex of {i,j} goes to the line vertex of
/// {phi(i), phi(j)}. Throws ContractViolation if phi is not in Aut(g).
Permutation induce_line_automorphism(const Graph& g, const Permutation& phi);

/// The unique phi in Aut(g) inducing psi. Requires g connected with at least
/// five vertices; throws PreconditionError otherwise and NotLiftable when no
/// such phi exists.
Permutation lift_line_automorphism(const Graph& g, const Permutation& psi);

}  // namespace tcay
