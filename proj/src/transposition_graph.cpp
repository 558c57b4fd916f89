#include "tcay/transposition_graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "tcay/error.hpp"

namespace tcay {

TranspositionSet::TranspositionSet(int n, std::vector<Transposition> members) : n_(n), members_(std::move(members)) {
  if (n < 2) throw DomainError("transposition sets need n >= 2, got " + std::to_string(n));
  if (members_.empty()) throw DomainError("transposition set is empty");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].hi > n) {
      throw RangeError("transposition " + to_string(members_[i]) + " outside {1.." + std::to_string(n) + "}");
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw DomainError("duplicate transposition " + to_string(members_[i]));
    }
  }
}

TranspositionSet TranspositionSet::complete(int n) { return {n, all_transpositions(n)}; }

TranspositionSet TranspositionSet::from_graph(const Graph& g) { return {g.order(), g.edges()}; }

bool TranspositionSet::contains(const Transposition& t) const {
  return std::binary_search(members_.begin(), members_.end(), t);
}

Graph graph_of(const TranspositionSet& t) { return Graph(t.n(), t.members()); }

bool generates_sn(const TranspositionSet& t) { return is_connected(graph_of(t)); }

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Tree:
      return "Tree";
    case GraphKind::FourCycle:
      return "FourCycle";
    case GraphKind::CompleteGraph:
      return "CompleteGraph";
    case GraphKind::GirthAtLeast5:
      return "GirthAtLeast5";
    case GraphKind::Other:
      return "Other";
  }
  return "Other";
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n + 1));
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  for (int root = 1; root <= n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push(w);
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

Classification classify(const TranspositionSet& t) {
  const Graph g = graph_of(t);
  if (!is_connected(g)) throw PreconditionError("transposition set does not generate S_" + std::to_string(t.n()));
  const int n = t.n();
  const int m = g.size();
  Classification out{GraphKind::Other, true};
  if (m == n - 1) {
    out.kind = GraphKind::Tree;
  } else if (n == 4 && canonical_form(g) == canonical_form(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}))) {
    out.kind = GraphKind::FourCycle;
  } else if (m == n * (n - 1) / 2) {
    out.kind = GraphKind::CompleteGraph;
  } else if (girth(g) >= 5) {
    out.kind = GraphKind::GirthAtLeast5;
  }
  return out;
}

bool edges_share_short_cycle(const TranspositionSet& t, const Transposition& e1, const Transposition& e2) {
  if (!t.contains(e1) || !t.contains(e2)) {
    throw PreconditionError("edges " + to_string(e1) + " and " + to_string(e2) + " must both be members");
  }
  if (e1 == e2 || e1.disjoint_from(e2)) {
    throw PreconditionError("edges " + to_string(e1) + " and " + to_string(e2) +
                            " must share exactly one endpoint");
  }
  const int i = e1.contains(e2.lo) ? e2.lo : e2.hi;
  const int j = e1.other(i);
  const int k = e2.other(i);
  if (t.contains({j, k})) return true;
  for (int l = 1; l <= t.n(); ++l) {
    if (l == i || l == j || l == k) continue;
    if (t.contains({j, l}) && t.contains({k, l})) return true;
  }
  return false;
}

Permutation induce_line_automorphism(const Graph& g, const Permutation& phi) {
  if (!is_automorphism(g, phi)) {
    throw ContractViolation(to_cycle_string(phi) + " is not an automorphism of the graph");
  }
  const LineGraph lg = line_graph(g);
  if (lg.edge_of.empty()) throw DomainError("graph has no edges, so its line graph is empty");
  std::vector<int> images;
  images.reserve(lg.edge_of.size());
  for (const auto& e : lg.edge_of) images.push_back(lg.vertex_of({phi(e.lo), phi(e.hi)}));
  return Permutation::from_images(images);
}

Permutation lift_line_automorphism(const Graph& g, const Permutation& psi) {
  const int n = g.order();
  if (n < 5 || !is_connected(g)) {
    throw PreconditionError("line-graph lifting needs a connected graph on at least 5 vertices");
  }
  const LineGraph lg = line_graph(g);
  if (psi.size() != lg.graph.order() || !is_automorphism(lg.graph, psi)) {
    throw NotLiftable(to_cycle_string(psi) + " is not an automorphism of the line graph");
  }
  auto image_edge = [&](const Edge& e) { return lg.edge_of[static_cast<std::size_t>(psi(lg.vertex_of(e)) - 1)]; };

  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (int u = 1; u <= n; ++u) {
    const auto nbrs = g.neighbors(u);
    if (nbrs.size() < 2) continue;
    // The images of u's edge star must all pass through one common endpoint.
    Edge first = image_edge({u, nbrs[0]});
    std::vector<int> common{first.lo, first.hi};
    for (std::size_t k = 1; k < nbrs.size(); ++k) {
      const Edge e = image_edge({u, nbrs[k]});
      std::erase_if(common, [&](int x) { return !e.contains(x); });
    }
    if (common.size() != 1) {
      throw NotLiftable("edge star of vertex " + std::to_string(u) + " has no unique common image endpoint");
    }
    images[static_cast<std::size_t>(u - 1)] = common.front();
  }
  for (int u = 1; u <= n; ++u) {
    if (g.degree(u) != 1) continue;
    const int w = g.neighbors(u).front();
    const int w_image = images[static_cast<std::size_t>(w - 1)];
    const Edge e = image_edge({u, w});
    if (w_image == 0 || !e.contains(w_image)) {
      throw NotLiftable("pendant vertex " + std::to_string(u) + " has no consistent image");
    }
    images[static_cast<std::size_t>(u - 1)] = e.other(w_image);
  }
  Permutation phi(n);
  try {
    phi = Permutation::from_images(images);
  } catch (const DomainError&) {
    throw NotLiftable("vertex images do not form a bijection");
  }
  if (!is_automorphism(g, phi) || induce_line_automorphism(g, phi) != psi) {
    throw NotLiftable("vertex map does not induce the given line-graph automorphism");
  }
  return phi;
}

}  // namespace tcay
