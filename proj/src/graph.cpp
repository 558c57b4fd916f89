#include "tcay/graph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "tcay/error.hpp"

namespace tcay {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& e : edges) add_edge(e.lo, e.hi);
}

int Graph::size() const noexcept {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) {
    throw RangeError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside {1.." +
                     std::to_string(n_) + "}");
  }
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  rows_[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
  rows_[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto bits = row(v); bits != 0; bits &= bits - 1) out.push_back(std::countr_zero(bits) + 1);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n_; ++u) {
    for (auto bits = row(u) >> u; bits != 0; bits &= bits - 1) {
      out.emplace_back(u, u + 1 + std::countr_zero(bits));
    }
  }
  return out;
}

Graph Graph::relabeled(const Permutation& p) const {
  if (p.size() != n_) throw SizeMismatchError("relabeling degree does not match graph order");
  Graph out(n_);
  for (const auto& e : edges()) out.add_edge(p(e.lo), p(e.hi));
  return out;
}

int LineGraph::vertex_of(const Edge& e) const {
  const auto it = std::lower_bound(edge_of.begin(), edge_of.end(), e);
  if (it == edge_of.end() || *it != e) return 0;
  return static_cast<int>(it - edge_of.begin()) + 1;
}

LineGraph line_graph(const Graph& g) {
  LineGraph lg{Graph(0), g.edges()};
  const int m = static_cast<int>(lg.edge_of.size());
  lg.graph = Graph(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const auto& ea = lg.edge_of[static_cast<std::size_t>(a)];
      const auto& eb = lg.edge_of[static_cast<std::size_t>(b)];
      if (!ea.disjoint_from(eb)) lg.graph.add_edge(a + 1, b + 1);
    }
  }
  return lg;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::uint64_t unseen = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  while (unseen != 0) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (auto bits = frontier; bits != 0; bits &= bits - 1) next |= g.row(std::countr_zero(bits) + 1);
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    std::vector<int> members;
    for (auto bits = comp; bits != 0; bits &= bits - 1) members.push_back(std::countr_zero(bits) + 1);
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted) {
    if (v < 1 || v > g.order()) {
      throw RangeError("vertex " + std::to_string(v) + " outside {1.." + std::to_string(g.order()) + "}");
    }
  }
  InducedSubgraph out{Graph(static_cast<int>(sorted.size())), sorted};
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (g.has_edge(sorted[a], sorted[b])) out.graph.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    }
  }
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) return false;
  for (int u = 1; u <= g.order(); ++u) {
    for (int v = u + 1; v <= g.order(); ++v) {
      if (g.has_edge(u, v) != g.has_edge(p(u), p(v))) return false;
    }
  }
  return true;
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : g_(g), n_(g.order()) {
    order_ = search_order();
    image_.assign(static_cast<std::size_t>(n_), -1);
  }

  std::vector<Permutation> run() {
    extend(0, 0, 0);
    return std::move(found_);
  }

 private:
  // Next vertex = most already-ordered neighbors, ties to the smaller label.
  std::vector<int> search_order() const {
    std::vector<int> order;
    std::vector<int> weight(static_cast<std::size_t>(n_), 0);
    std::vector<bool> taken(static_cast<std::size_t>(n_), false);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (taken[static_cast<std::size_t>(v)]) continue;
        if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
      }
      taken[static_cast<std::size_t>(best)] = true;
      order.push_back(best);
      for (int u : g_.neighbors(best + 1)) ++weight[static_cast<std::size_t>(u - 1)];
    }
    return order;
  }

  std::uint64_t map_mask(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (; mask != 0; mask &= mask - 1) {
      out |= std::uint64_t{1} << image_[static_cast<std::size_t>(std::countr_zero(mask))];
    }
    return out;
  }

  void extend(std::size_t depth, std::uint64_t domain, std::uint64_t range) {
    if (depth == order_.size()) {
      std::vector<int> table(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) table[static_cast<std::size_t>(v)] = image_[static_cast<std::size_t>(v)] + 1;
      found_.push_back(Permutation::from_images(table));
      return;
    }
    const int v = order_[depth];
    const std::uint64_t v_row = g_.row(v + 1);
    const std::uint64_t wanted = map_mask(v_row & domain);
    const int deg = std::popcount(v_row);
    for (int c = 0; c < n_; ++c) {
      if ((range >> c) & 1u) continue;
      const std::uint64_t c_row = g_.row(c + 1);
      if (std::popcount(c_row) != deg || (c_row & range) != wanted) continue;
      image_[static_cast<std::size_t>(v)] = c;
      extend(depth + 1, domain | (std::uint64_t{1} << v), range | (std::uint64_t{1} << c));
    }
    image_[static_cast<std::size_t>(v)] = -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<Permutation> found_;
};

int pair_count(int n) { return n * (n - 1) / 2; }

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_(pair_count(n_)) {
    best_ = total_ == 0 ? 0 : (std::uint64_t{1} << total_) - 1;
  }

  std::uint64_t run() {
    if (n_ > 0) place(0, 0, 0);
    return best_;
  }

 private:
  // Position p receives an unused original vertex; column p of the string is
  // its adjacency to positions 0..p-1. Prefixes above the best so far are cut.
  void place(int p, std::uint64_t used, std::uint64_t code) {
    if (p == n_) {
      best_ = std::min(best_, code);
      return;
    }
    const int base = pair_count(p);
    const int shift = total_ - pair_count(p + 1);
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1u) continue;
      std::uint64_t next = code;
      for (int i = 0; i < p; ++i) {
        if (g_.has_edge(chosen_[static_cast<std::size_t>(i)] + 1, v + 1)) {
          next |= std::uint64_t{1} << (total_ - 1 - (base + i));
        }
      }
      if ((next >> shift) > (best_ >> shift)) continue;
      chosen_[static_cast<std::size_t>(p)] = v;
      place(p + 1, used | (std::uint64_t{1} << v), next);
    }
  }

  const Graph& g_;
  int n_;
  int total_;
  std::uint64_t best_;
  std::array<int, kMaxCanonicalVertices> chosen_{};
};

}  // namespace

AutomorphismGroup automorphisms(const Graph& g) {
  if (g.order() > kMaxAutomorphismVertices) {
    throw CapacityError("automorphism enumeration supports at most " + std::to_string(kMaxAutomorphismVertices) +
                        " vertices, got " + std::to_string(g.order()));
  }
  if (g.order() == 0) return {1, {}};
  AutomorphismGroup out;
  out.elements = AutomorphismSearch(g).run();
  std::sort(out.elements.begin(), out.elements.end());
  out.order = out.elements.size();
  return out;
}

std::string CanonicalForm::str() const {
  const int total = pair_count(n);
  std::string s(static_cast<std::size_t>(total), '0');
  for (int k = 0; k < total; ++k) {
    if ((code >> (total - 1 - k)) & 1u) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices) {
    throw CapacityError("canonical form supports at most " + std::to_string(kMaxCanonicalVertices) +
                        " vertices, got " + std::to_string(g.order()));
  }
  return {g.order(), CanonicalSearch(g).run()};
}

Graph graph_from_canonical(const CanonicalForm& cf) {
  Graph g(cf.n);
  const int total = pair_count(cf.n);
  int k = 0;
  for (int j = 1; j < cf.n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((cf.code >> (total - 1 - k)) & 1u) g.add_edge(i + 1, j + 1);
    }
  }
  return g;
}

std::vector<Graph> enumerate_connected_classes(int n) {
  if (n < 2 || n > 7) {
    throw CapacityError("connected-class enumeration supports 2 <= n <= 7, got " + std::to_string(n));
  }
  // Every class with e + 1 edges arises from a class with e edges plus one edge.
  std::set<CanonicalForm> level{canonical_form(Graph(n))};
  std::set<CanonicalForm> connected;
  while (!level.empty()) {
    std::set<CanonicalForm> next;
    for (const auto& cf : level) {
      const Graph g = graph_from_canonical(cf);
      if (is_connected(g)) connected.insert(cf);
      for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          next.insert(canonical_form(h));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(connected.size());
  for (const auto& cf : connected) out.push_back(graph_from_canonical(cf));
  return out;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 1; v <= g.order(); ++v) os << "  " << v << ";\n";
  for (const auto& e : g.edges()) os << "  " << e.lo << " -- " << e.hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tcay
