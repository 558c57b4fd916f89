#include "tcay/cayley_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tcay/error.hpp"

namespace tcay {

VertexPermutation::VertexPermutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v >= images_.size() || seen[v]) throw DomainError("vertex map is not a bijection");
    seen[v] = true;
  }
}

VertexPermutation VertexPermutation::identity(std::size_t count) {
  std::vector<Vertex> images(count);
  std::iota(images.begin(), images.end(), Vertex{0});
  return VertexPermutation(std::move(images), Unchecked{});
}

bool VertexPermutation::is_identity() const noexcept {
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

VertexPermutation compose(const VertexPermutation& f, const VertexPermutation& g) {
  if (f.size() != g.size()) throw SizeMismatchError("cannot compose vertex maps of different sizes");
  std::vector<Vertex> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out[v] = f.images_[g.images_[v]];
  return VertexPermutation(std::move(out), VertexPermutation::Unchecked{});
}

VertexPermutation inverse(const VertexPermutation& f) {
  std::vector<Vertex> out(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) out[f.images_[v]] = static_cast<Vertex>(v);
  return VertexPermutation(std::move(out), VertexPermutation::Unchecked{});
}

CayleyGraph::CayleyGraph(const TranspositionSet& t) : n_(t.n()), t_(t), degree_(static_cast<int>(t.size())) {
  if (n_ > kMaxDegree) {
    throw CapacityError("Cayley graphs are supported for n <= " + std::to_string(kMaxDegree) + ", got " +
                        std::to_string(n_));
  }
  if (!generates_sn(t)) throw PreconditionError("transposition set does not generate S_" + std::to_string(n_));

  const auto count = factorial(n_);
  elements_.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) elements_.push_back(unrank(r, n_));
  for (const auto& tr : t_.members()) generator_perms_.push_back(Permutation::transposition(n_, tr));

  adjacency_.resize(count * static_cast<std::size_t>(degree_));
  for (std::uint64_t r = 0; r < count; ++r) {
    for (int g = 0; g < degree_; ++g) {
      adjacency_[r * static_cast<std::size_t>(degree_) + static_cast<std::size_t>(g)] =
          static_cast<Vertex>(rank(compose(generator_perms_[static_cast<std::size_t>(g)], elements_[r])));
    }
  }
}

Vertex CayleyGraph::vertex_of(const Permutation& p) const {
  if (p.size() != n_) throw SizeMismatchError("permutation degree does not match the Cayley graph");
  return static_cast<Vertex>(rank(p));
}

std::vector<std::pair<int, Vertex>> CayleyGraph::neighbors(Vertex v) const {
  if (v >= vertex_count()) {
    throw RangeError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(vertex_count()) + ")");
  }
  std::vector<std::pair<int, Vertex>> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (int g = 0; g < degree_; ++g) out.emplace_back(g, neighbor(v, g));
  return out;
}

int CayleyGraph::edge_label(Vertex u, Vertex v) const noexcept {
  const auto row = neighbor_row(u);
  for (std::size_t g = 0; g < row.size(); ++g) {
    if (row[g] == v) return static_cast<int>(g);
  }
  return -1;
}

bool CayleyGraph::is_automorphism(const VertexPermutation& pi) const {
  if (pi.size() != vertex_count()) return false;
  // Regular graph: mapping every edge onto an edge suffices.
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (Vertex w : neighbor_row(v)) {
      if (!adjacent(pi(v), pi(w))) return false;
    }
  }
  return true;
}

VertexPermutation right_translation(const CayleyGraph& g, const Permutation& a) {
  std::vector<Vertex> images(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) images[v] = g.vertex_of(compose(g.element(v), a));
  return VertexPermutation(std::move(images));
}

VertexPermutation left_translation(const CayleyGraph& g, const Permutation& f) {
  std::vector<Vertex> images(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) images[v] = g.vertex_of(compose(f, g.element(v)));
  return VertexPermutation(std::move(images));
}

std::optional<Permutation> is_right_translation(const CayleyGraph& g, const VertexPermutation& pi) {
  if (pi.size() != g.vertex_count()) return std::nullopt;
  const Permutation a = g.element(pi(CayleyGraph::identity_vertex()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (pi(v) != g.vertex_of(compose(g.element(v), a))) return std::nullopt;
  }
  return a;
}

std::string to_dot(const CayleyGraph& g) {
  if (g.n() > 4) throw CapacityError("Cayley graph DOT export is limited to n <= 4");
  std::ostringstream os;
  os << "graph Cay {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << to_cycle_string(g.element(v)) << "\"];\n";
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const auto& [label, w] : g.neighbors(v)) {
      if (v < w) os << "  v" << v << " -- v" << w << " [label=\"" << to_string(g.generator(label)) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tcay
