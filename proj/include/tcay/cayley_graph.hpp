#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tcay/permutation.hpp"
#include "tcay/transposition_graph.hpp"

namespace tcay {

using Vertex = std::uint32_t;

/// A bijection on Cayley-graph vertex ranks {0 .. n! - 1}.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  /// Throws DomainError unless images is a bijection on {0 .. size-1}.
  explicit VertexPermutation(std::vector<Vertex> images);

  static VertexPermutation identity(std::size_t count);

  std::size_t size() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
  friend auto operator<=>(const VertexPermutation& a, const VertexPermutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  VertexPermutation(std::vector<Vertex> images, Unchecked) : images_(std::move(images)) {}

  friend VertexPermutation compose(const VertexPermutation& f, const VertexPermutation& g);
  friend VertexPermutation inverse(const VertexPermutation& f);

  std::vector<Vertex> images_;
};

/// compose(f, g)(v) = f(g(v)).
VertexPermutation compose(const VertexPermutation& f, const VertexPermutation& g);
VertexPermutation inverse(const VertexPermutation& f);

/// Cay(S_n, T): vertices are permutations indexed by lexicographic rank, and
/// vertex v is joined to t * v for every generator t (left multiplication).
/// Edges carry the index of the generator that produces them.
class CayleyGraph {
 public:
  static constexpr int kMaxDegree = 8;

  /// Throws PreconditionError if T does not generate S_n and CapacityError
  /// for n > kMaxDegree.
  explicit CayleyGraph(const TranspositionSet& t);

  int n() const noexcept { return n_; }
  const TranspositionSet& generators() const noexcept { return t_; }
  int degree() const noexcept { return degree_; }
  Vertex vertex_count() const noexcept { return static_cast<Vertex>(elements_.size()); }
  std::uint64_t edge_count() const noexcept {
    return static_cast<std::uint64_t>(vertex_count()) * static_cast<std::uint64_t>(degree_) / 2;
  }

  static constexpr Vertex identity_vertex() noexcept { return 0; }

  const Permutation& element(Vertex v) const { return elements_.at(v); }
  Vertex vertex_of(const Permutation& p) const;

  const Transposition& generator(int index) const { return t_.members()[static_cast<std::size_t>(index)]; }
  const Permutation& generator_permutation(int index) const {
    return generator_perms_[static_cast<std::size_t>(index)];
  }

  /// Vertex reached from v along generator index g.
  Vertex neighbor(Vertex v, int g) const noexcept {
    return adjacency_[static_cast<std::size_t>(v) * static_cast<std::size_t>(degree_) + static_cast<std::size_t>(g)];
  }
  std::span<const Vertex> neighbor_row(Vertex v) const noexcept {
    return {adjacency_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(degree_),
            static_cast<std::size_t>(degree_)};
  }

  /// (generator index, neighbor) in generator order. Throws RangeError on a
  /// bad vertex.
  std::vector<std::pair<int, Vertex>> neighbors(Vertex v) const;

  /// Generator index labelling edge {u, v}, or -1 when not adjacent.
  int edge_label(Vertex u, Vertex v) const noexcept;
  bool adjacent(Vertex u, Vertex v) const noexcept { return edge_label(u, v) >= 0; }

  bool is_automorphism(const VertexPermutation& pi) const;

 private:
  int n_;
  TranspositionSet t_;
  int degree_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generator_perms_;
  std::vector<Vertex> adjacency_;
};

/// rho_a: v -> v * a. Always an automorphism.
VertexPermutation right_translation(const CayleyGraph& g, const Permutation& a);

/// v -> f * v. An automorphism when conjugation by f preserves T.
VertexPermutation left_translation(const CayleyGraph& g, const Permutation& f);

/// The a with pi == rho_a, if pi is a right translation.
std::optional<Permutation> is_right_translation(const CayleyGraph& g, const VertexPermutation& pi);

/// Graphviz rendering with cycle-notation labels and edge labels; n <= 4.
std::string to_dot(const CayleyGraph& g);

}  // namespace tcay
