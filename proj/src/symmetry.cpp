#include "tcay/symmetry.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "tcay/error.hpp"
#include "tcay/graph.hpp"

namespace tcay {

std::string to_string(NormalityMethod method) {
  switch (method) {
    case NormalityMethod::FixNeighborhood:
      return "fix-neighborhood";
    case NormalityMethod::Conjugation:
      return "conjugation";
    case NormalityMethod::Both:
      return "both";
  }
  return "both";
}

namespace {

void check_capacity(const CayleyGraph& g) {
  if (g.n() > kMaxSymmetryDegree) {
    throw CapacityError("automorphism search supports n <= " + std::to_string(kMaxSymmetryDegree) + ", got " +
                        std::to_string(g.n()));
  }
}

struct Coloring {
  std::vector<std::int32_t> color;
  std::int32_t count = 0;
};

// Sorted per-vertex keys of every refinement round, flattened.
using Trace = std::vector<std::vector<std::int32_t>>;

// Colour refinement on the Cayley graph. A vertex's key is its colour followed
// by the sorted colours of its neighbours; new colours are the ranks of the
// keys, so two colourings related by an isomorphism stay related.
class Refiner {
 public:
  explicit Refiner(const CayleyGraph& g)
      : g_(g),
        vertices_(g.vertex_count()),
        stride_(static_cast<std::size_t>(g.degree()) + 1),
        keys_(vertices_ * stride_),
        order_(vertices_) {}

  Trace refine(Coloring& c) {
    Trace trace;
    while (true) {
      std::vector<std::int32_t> sorted(vertices_ * stride_);
      const Coloring next = round(c, [&](std::size_t slot, const std::int32_t* key) {
        std::memcpy(sorted.data() + slot * stride_, key, stride_ * sizeof(std::int32_t));
        return true;
      });
      trace.push_back(std::move(sorted));
      const bool stable = next.count == c.count;
      c = next;
      if (stable) return trace;
    }
  }

  // Refines c in lockstep with a recorded trace; false as soon as a round's
  // sorted keys differ.
  bool refine_against(Coloring& c, const Trace& trace) {
    for (const auto& expected : trace) {
      bool ok = true;
      Coloring next = round(c, [&](std::size_t slot, const std::int32_t* key) {
        ok = std::memcmp(expected.data() + slot * stride_, key, stride_ * sizeof(std::int32_t)) == 0;
        return ok;
      });
      if (!ok) return false;
      c = std::move(next);
    }
    return true;
  }

 private:
  template <typename Visit>
  Coloring round(const Coloring& c, Visit&& visit) {
    for (Vertex v = 0; v < vertices_; ++v) {
      std::int32_t* key = keys_.data() + v * stride_;
      key[0] = c.color[v];
      const auto row = g_.neighbor_row(v);
      for (std::size_t j = 0; j < row.size(); ++j) key[j + 1] = c.color[row[j]];
      std::sort(key + 1, key + stride_);
    }
    std::iota(order_.begin(), order_.end(), Vertex{0});
    const std::size_t bytes = stride_ * sizeof(std::int32_t);
    // Any fixed total order on keys works; byte order is the cheapest.
    std::sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return std::memcmp(keys_.data() + a * stride_, keys_.data() + b * stride_, bytes) < 0;
    });
    Coloring next;
    next.color.resize(vertices_);
    const std::int32_t* previous = nullptr;
    for (std::size_t slot = 0; slot < vertices_; ++slot) {
      const std::int32_t* key = keys_.data() + order_[slot] * stride_;
      if (!visit(slot, key)) return next;
      if (previous == nullptr || std::memcmp(previous, key, bytes) != 0) ++next.count;
      next.color[order_[slot]] = next.count - 1;
      previous = key;
    }
    return next;
  }

  const CayleyGraph& g_;
  std::size_t vertices_;
  std::size_t stride_;
  std::vector<std::int32_t> keys_;
  std::vector<Vertex> order_;
};

// Individualization-refinement enumeration of the automorphisms that fix id
// and send the neighbour along generator i to the neighbour along map(i).
class StabilizerSearch {
 public:
  explicit StabilizerSearch(const CayleyGraph& g) : g_(g), refiner_(g) {}

  std::vector<VertexPermutation> run(const std::vector<Permutation>& neighborhood_maps) {
    Coloring source = root_coloring(Permutation(g_.degree()));
    const Trace trace = refiner_.refine(source);
    for (const auto& map : neighborhood_maps) {
      Coloring target = root_coloring(map);
      if (refiner_.refine_against(target, trace)) descend(source, target);
    }
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  Coloring root_coloring(const Permutation& map) const {
    Coloring c;
    const auto d = static_cast<std::int32_t>(g_.degree());
    c.color.assign(g_.vertex_count(), d + 1);
    c.color[CayleyGraph::identity_vertex()] = 0;
    for (int i = 0; i < g_.degree(); ++i) {
      c.color[g_.neighbor(CayleyGraph::identity_vertex(), map(i + 1) - 1)] = i + 1;
    }
    c.count = g_.vertex_count() > static_cast<Vertex>(d) + 1 ? d + 2 : d + 1;
    return c;
  }

  static Coloring individualize(const Coloring& c, Vertex v) {
    Coloring out = c;
    out.color[v] = out.count++;
    return out;
  }

  void descend(const Coloring& source, const Coloring& target) {
    const Vertex count = g_.vertex_count();
    if (static_cast<Vertex>(source.count) == count) {
      std::vector<Vertex> by_color(count);
      for (Vertex w = 0; w < count; ++w) by_color[static_cast<std::size_t>(target.color[w])] = w;
      std::vector<Vertex> images(count);
      for (Vertex v = 0; v < count; ++v) images[v] = by_color[static_cast<std::size_t>(source.color[v])];
      VertexPermutation pi(std::move(images));
      if (g_.is_automorphism(pi)) found_.push_back(std::move(pi));
      return;
    }
    // Branch on the smallest vertex of the first non-singleton cell.
    std::vector<Vertex> cell_size(static_cast<std::size_t>(source.count), 0);
    for (Vertex v = 0; v < count; ++v) ++cell_size[static_cast<std::size_t>(source.color[v])];
    std::int32_t cell = 0;
    while (cell_size[static_cast<std::size_t>(cell)] < 2) ++cell;
    Vertex pivot = 0;
    while (source.color[pivot] != cell) ++pivot;

    Coloring next_source = individualize(source, pivot);
    const Trace trace = refiner_.refine(next_source);
    for (Vertex w = 0; w < count; ++w) {
      if (target.color[w] != cell) continue;
      Coloring next_target = individualize(target, w);
      if (refiner_.refine_against(next_target, trace)) descend(next_source, next_target);
    }
  }

  const CayleyGraph& g_;
  Refiner refiner_;
  std::vector<VertexPermutation> found_;
};

std::size_t common_neighbor_count(const CayleyGraph& g, Vertex a, Vertex b) {
  std::size_t count = 0;
  for (Vertex x : g.neighbor_row(a)) {
    if (g.adjacent(x, b)) ++count;
  }
  return count;
}

}  // namespace

std::vector<Permutation> commuting_preserving_maps(const CayleyGraph& g) {
  // Generator neighbours t, u of id have 2 common neighbours when t and u
  // commute, and 1 or 3 otherwise; every automorphism fixing id preserves
  // these counts.
  const int d = g.degree();
  std::vector<std::vector<std::size_t>> shared(static_cast<std::size_t>(d), std::vector<std::size_t>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      shared[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          i == j ? 0 : common_neighbor_count(g, g.neighbor(0, i), g.neighbor(0, j));
    }
  }
  std::vector<Permutation> out;
  std::vector<int> image(static_cast<std::size_t>(d), -1);
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  auto extend = [&](auto&& self, int i) -> void {
    if (i == d) {
      std::vector<int> table(static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k) table[static_cast<std::size_t>(k)] = image[static_cast<std::size_t>(k)] + 1;
      out.push_back(Permutation::from_images(table));
      return;
    }
    for (int c = 0; c < d; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        ok = shared[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] ==
             shared[static_cast<std::size_t>(c)][static_cast<std::size_t>(image[static_cast<std::size_t>(k)])];
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(i)] = c;
      used[static_cast<std::size_t>(c)] = true;
      self(self, i + 1);
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<VertexPermutation> stabilizer_of_identity(const CayleyGraph& g) {
  check_capacity(g);
  return StabilizerSearch(g).run(commuting_preserving_maps(g));
}

std::vector<VertexPermutation> fix_neighborhood_stabilizer(const CayleyGraph& g) {
  check_capacity(g);
  return StabilizerSearch(g).run({Permutation(g.degree())});
}

AutSummary aut_order(const CayleyGraph& g) {
  AutSummary s;
  s.stab_elements = stabilizer_of_identity(g);
  s.stab_order = s.stab_elements.size();
  s.aut_order = factorial(g.n()) * s.stab_order;
  return s;
}

NormalityVerdict is_normal(const CayleyGraph& g, NormalityMethod method) {
  return is_normal(g, method, aut_order(g));
}

NormalityVerdict is_normal(const CayleyGraph& g, NormalityMethod method, const AutSummary& summary) {
  if (method != NormalityMethod::Conjugation && g.n() < 5) {
    throw PreconditionError("the fixed-neighbourhood criterion needs n >= 5, got n = " + std::to_string(g.n()));
  }
  NormalityVerdict verdict;
  verdict.method = method;
  verdict.actual_order = summary.aut_order;
  verdict.expected_normal_order = factorial(g.n()) * automorphisms(graph_of(g.generators())).order;

  std::optional<bool> by_fix;
  std::optional<bool> by_conjugation;
  std::optional<VertexPermutation> fix_witness;
  std::optional<VertexPermutation> conjugation_witness;

  if (method != NormalityMethod::Conjugation) {
    for (auto& pi : fix_neighborhood_stabilizer(g)) {
      if (!pi.is_identity()) {
        fix_witness = std::move(pi);
        break;
      }
    }
    by_fix = !fix_witness.has_value();
  }
  if (method != NormalityMethod::FixNeighborhood) {
    // Aut = R(S_n) Stab(id) and R(S_n) = <rho_t : t in T>, so R(S_n) is normal
    // iff every stabilizer element conjugates each rho_t into R(S_n).
    std::vector<VertexPermutation> generator_translations;
    for (int i = 0; i < g.degree(); ++i) {
      generator_translations.push_back(right_translation(g, g.generator_permutation(i)));
    }
    for (const auto& pi : summary.stab_elements) {
      if (pi.is_identity()) continue;
      const VertexPermutation pi_inv = inverse(pi);
      for (const auto& rho : generator_translations) {
        VertexPermutation conjugate = compose(compose(pi, rho), pi_inv);
        if (!is_right_translation(g, conjugate)) {
          conjugation_witness = std::move(conjugate);
          break;
        }
      }
      if (conjugation_witness) break;
    }
    by_conjugation = !conjugation_witness.has_value();
  }

  switch (method) {
    case NormalityMethod::FixNeighborhood:
      verdict.is_normal = *by_fix;
      verdict.witness = std::move(fix_witness);
      break;
    case NormalityMethod::Conjugation:
      verdict.is_normal = *by_conjugation;
      verdict.witness = std::move(conjugation_witness);
      break;
    case NormalityMethod::Both:
      verdict.methods_agree = *by_fix == *by_conjugation;
      verdict.is_normal = *by_fix && *by_conjugation;
      verdict.witness = fix_witness ? std::move(fix_witness) : std::move(conjugation_witness);
      break;
  }
  return verdict;
}

bool verify_direct_product(const CayleyGraph& g) { return verify_direct_product(g, aut_order(g)); }

bool verify_direct_product(const CayleyGraph& g, const AutSummary& summary) {
  if (g.n() < 3) throw PreconditionError("direct-product check needs n >= 3");
  if (!is_normal(g, NormalityMethod::Conjugation, summary).is_normal) {
    throw PreconditionError("direct-product check needs a normal Cayley graph");
  }
  const AutomorphismGroup graph_aut = automorphisms(graph_of(g.generators()));
  std::vector<VertexPermutation> generator_translations;
  for (int i = 0; i < g.degree(); ++i) {
    generator_translations.push_back(right_translation(g, g.generator_permutation(i)));
  }
  for (const auto& phi : graph_aut.elements) {
    const VertexPermutation left = left_translation(g, phi);
    if (!g.is_automorphism(left)) return false;
    for (const auto& rho : generator_translations) {
      if (compose(left, rho) != compose(rho, left)) return false;
    }
    if (!phi.is_identity() && is_right_translation(g, left)) return false;
  }
  return factorial(g.n()) * graph_aut.order == summary.aut_order;
}

}  // namespace tcay
