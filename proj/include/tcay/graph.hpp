#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tcay/permutation.hpp"

namespace tcay {

using Edge = Transposition;

/// Simple undirected graph on vertices {1..n}, n <= 64, stored as adjacency
/// bit rows.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int n = 0);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const noexcept { return n_; }
  int size() const noexcept;  // edge count

  /// Throws RangeError on out-of-range endpoints. Adding an existing edge is
  /// a no-op.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const noexcept {
    return (rows_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1u;
  }
  int degree(int v) const noexcept { return std::popcount(rows_[static_cast<std::size_t>(v - 1)]); }

  /// Zero-based neighbor bitmask of v.
  std::uint64_t row(int v) const noexcept { return rows_[static_cast<std::size_t>(v - 1)]; }

  std::vector<int> neighbors(int v) const;

  /// Edges in lexicographic (lo, hi) order.
  std::vector<Edge> edges() const;

  /// Same graph with vertex v renamed to p(v).
  Graph relabeled(const Permutation& p) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

struct LineGraph {
  Graph graph;
  /// Line-graph vertex i (1-based) corresponds to edge_of[i - 1].
  std::vector<Edge> edge_of;

  /// 1-based line-graph vertex of edge e, or 0 if e is not an edge.
  int vertex_of(const Edge& e) const;
};

LineGraph line_graph(const Graph& g);

/// Components ordered by their smallest vertex; each sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// Vertex i (1-based) of the subgraph is original vertex original[i - 1].
  std::vector<int> original;
};

/// Vertices are taken in ascending order. Throws RangeError on bad vertices.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool is_automorphism(const Graph& g, const Permutation& p);

struct AutomorphismGroup {
  std::uint64_t order = 0;
  /// Sorted by one-line image table; the identity comes first.
  std::vector<Permutation> elements;
};

/// Largest vertex count accepted by automorphisms().
inline constexpr int kMaxAutomorphismVertices = 32;

/// Full enumeration of Aut(g) by image-assignment backtracking.
/// Throws CapacityError above kMaxAutomorphismVertices.
AutomorphismGroup automorphisms(const Graph& g);

/// Lexicographically least upper-triangular adjacency string over all
/// relabelings. Bits are ordered column by column: (1,2), (1,3), (2,3),
/// (1,4), ... so that a relabeling prefix fixes a prefix of the string.
struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;  // bit for pair k sits at position (pairs - 1 - k)

  std::string str() const;
  auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int kMaxCanonicalVertices = 8;

/// Throws CapacityError above kMaxCanonicalVertices.
CanonicalForm canonical_form(const Graph& g);

/// The graph whose adjacency string is cf.
Graph graph_from_canonical(const CanonicalForm& cf);

/// One representative per isomorphism class of connected graphs on n
/// vertices, sorted by canonical form. Each representative is the canonical
/// graph itself. Requires 2 <= n <= 7.
std::vector<Graph> enumerate_connected_classes(int n);

/// Graphviz rendering with vertices labeled 1..n.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace tcay
