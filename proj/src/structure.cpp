#include "tcay/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tcay/error.hpp"

namespace tcay {

std::string to_string(Lemma lemma) {
  switch (lemma) {
    case Lemma::CommuteDisjoint:
      return "commute_disjoint";
    case Lemma::UniqueFourCycle:
      return "unique_four_cycle";
    case Lemma::TriangleK33:
      return "triangle_k33";
    case Lemma::ChainTuples:
      return "chain_tuples";
    case Lemma::UniqueSixCycle:
      return "unique_six_cycle";
  }
  return "unknown";
}

void LemmaReport::merge(LemmaReport other) {
  instances_checked += other.instances_checked;
  std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
  std::move(other.unjudged.begin(), other.unjudged.end(), std::back_inserter(unjudged));
}

namespace {

bool commute(const Permutation& a, const Permutation& b) { return compose(a, b) == compose(b, a); }

std::string vertex_list(const CayleyGraph& g, const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_cycle_string(g.element(vs[i]));
  }
  return out + "}";
}

std::vector<Vertex> common_neighbors(const CayleyGraph& g, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  for (Vertex x : g.neighbor_row(a)) {
    if (g.adjacent(x, b)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertex tau * sigma.
Vertex times(const CayleyGraph& g, const Permutation& tau, const Permutation& sigma) {
  return g.vertex_of(compose(tau, sigma));
}

}  // namespace

LemmaReport verify_commute_disjoint(const TranspositionSet& t) {
  LemmaReport report{Lemma::CommuteDisjoint, 0, {}, {}};
  const auto& members = t.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      ++report.instances_checked;
      const bool commuting = commute(Permutation::transposition(t.n(), members[i]),
                                     Permutation::transposition(t.n(), members[j]));
      if (commuting != members[i].disjoint_from(members[j])) {
        report.violations.push_back({Permutation(t.n()), {members[i], members[j]},
                                     commuting ? "commute but share a point" : "disjoint but do not commute"});
      }
    }
  }
  return report;
}

LemmaReport verify_four_cycle(const CayleyGraph& g, const Permutation& sigma) {
  LemmaReport report{Lemma::UniqueFourCycle, 0, {}, {}};
  const int n = g.n();
  const Vertex base = g.vertex_of(sigma);
  const TranspositionSet& t = g.generators();
  for (int i = 0; i < g.degree(); ++i) {
    for (int j = i + 1; j < g.degree(); ++j) {
      ++report.instances_checked;
      const Transposition& ta = g.generator(i);
      const Transposition& tb = g.generator(j);
      const Permutation& a = g.generator_permutation(i);
      const Permutation& b = g.generator_permutation(j);
      std::vector<Vertex> extra = common_neighbors(g, g.neighbor(base, i), g.neighbor(base, j));
      std::erase(extra, base);

      std::vector<Vertex> expected;
      if (ta.disjoint_from(tb)) {
        expected.push_back(times(g, compose(a, b), sigma));
      } else {
        const int shared = ta.contains(tb.lo) ? tb.lo : tb.hi;
        const Transposition third(ta.other(shared), tb.other(shared));
        if (t.contains(third)) {
          // The two 3-cycles ba and ca, with c the third side of the triangle.
          const Permutation c = Permutation::transposition(n, third);
          expected.push_back(times(g, compose(b, a), sigma));
          expected.push_back(times(g, compose(c, a), sigma));
          std::sort(expected.begin(), expected.end());
        }
      }
      if (extra != expected) {
        report.violations.push_back(
            {sigma, {ta, tb}, "other common neighbours " + vertex_list(g, extra) + ", expected " + vertex_list(g, expected)});
      }
    }
  }
  return report;
}

LemmaReport verify_k33(const CayleyGraph& g, const Permutation& sigma) {
  LemmaReport report{Lemma::TriangleK33, 0, {}, {}};
  const Vertex base = g.vertex_of(sigma);
  const TranspositionSet& t = g.generators();
  const int d = g.degree();

  auto in_triangle = [&](const Transposition& x, const Transposition& y) {
    if (x.disjoint_from(y)) return false;
    const int shared = x.contains(y.lo) ? y.lo : y.hi;
    return t.contains({x.other(shared), y.other(shared)});
  };

  // Forward: each triangle {a, b, c} spans a K_{3,3} with parts
  // {sigma, ab sigma, ba sigma} and {a sigma, b sigma, c sigma}.
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        const Transposition &ta = g.generator(i), &tb = g.generator(j), &tc = g.generator(k);
        std::set<int> points{ta.lo, ta.hi, tb.lo, tb.hi, tc.lo, tc.hi};
        if (points.size() != 3) continue;
        ++report.instances_checked;
        const Permutation &a = g.generator_permutation(i), &b = g.generator_permutation(j),
                          &c = g.generator_permutation(k);
        const Permutation ab = compose(a, b);
        const Permutation ba = compose(b, a);
        if (ab != compose(c, a) || ab != compose(b, c) || ba != compose(a, c) || ba != compose(c, b)) {
          report.violations.push_back({sigma, {ta, tb, tc}, "products ab=ca=bc, ba=ac=cb fail"});
          continue;
        }
        const std::vector<Vertex> left{base, times(g, ab, sigma), times(g, ba, sigma)};
        const std::vector<Vertex> right{g.neighbor(base, i), g.neighbor(base, j), g.neighbor(base, k)};
        bool complete = std::set<Vertex>{left[0], left[1], left[2], right[0], right[1], right[2]}.size() == 6;
        for (Vertex x : left) {
          for (Vertex y : right) complete = complete && g.adjacent(x, y);
        }
        for (std::size_t p = 0; p < 3; ++p) {
          for (std::size_t q = p + 1; q < 3; ++q) {
            complete = complete && !g.adjacent(left[p], left[q]) && !g.adjacent(right[p], right[q]);
          }
        }
        if (!complete) {
          report.violations.push_back({sigma, {ta, tb, tc}, "vertices " + vertex_list(g, left) + " / " +
                                                                vertex_list(g, right) + " do not induce K_{3,3}"});
        }
      }
    }
  }

  // Converse: a K_{3,3} through sigma, a sigma, b sigma forces a triangle.
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      ++report.instances_checked;
      const Vertex va = g.neighbor(base, i);
      const Vertex vb = g.neighbor(base, j);
      std::vector<Vertex> others = common_neighbors(g, va, vb);
      std::erase(others, base);
      std::optional<std::vector<Vertex>> found;
      for (std::size_t p = 0; p < others.size() && !found; ++p) {
        for (std::size_t q = p + 1; q < others.size() && !found; ++q) {
          for (Vertex y : g.neighbor_row(base)) {
            if (y == va || y == vb) continue;
            if (g.adjacent(y, others[p]) && g.adjacent(y, others[q])) {
              found = std::vector<Vertex>{base, others[p], others[q], va, vb, y};
              break;
            }
          }
        }
      }
      if (found && !in_triangle(g.generator(i), g.generator(j))) {
        report.violations.push_back(
            {sigma, {g.generator(i), g.generator(j)}, "K_{3,3} on " + vertex_list(g, *found) + " without a triangle"});
      }
    }
  }
  return report;
}

LemmaReport verify_six_cycle(const CayleyGraph& g, const Permutation& sigma) {
  LemmaReport report{Lemma::UniqueSixCycle, 0, {}, {}};
  const Vertex base = g.vertex_of(sigma);
  const int d = g.degree();
  auto noncommuting = [&](int x, int y) { return !g.generator(x).disjoint_from(g.generator(y)) && x != y; };

  for (int si = 0; si < d; ++si) {
    for (int ti = 0; ti < d; ++ti) {
      if (!noncommuting(si, ti)) continue;
      const Vertex v1 = g.neighbor(base, si);
      const Vertex v5 = g.neighbor(base, ti);
      std::vector<std::array<Vertex, 6>> cycles;
      for (int x1 = 0; x1 < d; ++x1) {
        if (!noncommuting(si, x1)) continue;
        const Vertex v2 = g.neighbor(v1, x1);
        for (int x2 = 0; x2 < d; ++x2) {
          if (!noncommuting(x1, x2)) continue;
          const Vertex v3 = g.neighbor(v2, x2);
          for (int x3 = 0; x3 < d; ++x3) {
            if (!noncommuting(x2, x3)) continue;
            const Vertex v4 = g.neighbor(v3, x3);
            const int x4 = g.edge_label(v4, v5);
            if (x4 < 0 || !noncommuting(x3, x4) || !noncommuting(x4, ti)) continue;
            const std::array<Vertex, 6> cycle{base, v1, v2, v3, v4, v5};
            if (std::set<Vertex>(cycle.begin(), cycle.end()).size() == 6) cycles.push_back(cycle);
          }
        }
      }
      const Transposition& s = g.generator(si);
      const Transposition& t = g.generator(ti);
      if (edges_share_short_cycle(g.generators(), s, t)) {
        report.unjudged.push_back({sigma, s, t, cycles.size()});
        continue;
      }
      ++report.instances_checked;
      const Permutation& sp = g.generator_permutation(si);
      const Permutation& tp = g.generator_permutation(ti);
      const std::array<Vertex, 6> expected{base, v1, times(g, compose(tp, sp), sigma),
                                           times(g, compose(sp, compose(tp, sp)), sigma),
                                           times(g, compose(sp, tp), sigma), v5};
      if (cycles.size() != 1 || cycles.front() != expected) {
        std::ostringstream os;
        os << cycles.size() << " labelled 6-cycles";
        if (!cycles.empty()) os << ", first " << vertex_list(g, {cycles[0].begin(), cycles[0].end()});
        report.violations.push_back({sigma, {s, t}, os.str()});
      }
    }
  }
  return report;
}

std::string TupleFamily::str() const {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i > 0) out += ",";
    out += "(";
    out += pattern[i][0] == 0 ? "k" : std::to_string(pattern[i][0]);
    out += " ";
    out += pattern[i][1] == 0 ? "k" : std::to_string(pattern[i][1]);
    out += ")";
  }
  return out;
}

std::array<Transposition, 4> TupleFamily::instantiate(int k) const {
  std::array<Transposition, 4> out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const int x = pattern[i][0] == 0 ? k : pattern[i][0];
    const int y = pattern[i][1] == 0 ? k : pattern[i][1];
    out[i] = Transposition(x, y);
  }
  return out;
}

const std::array<TupleFamily, 8>& tuple_families() {
  constexpr int k = 0;
  static const std::array<TupleFamily, 8> families{{
      {1, {{{1, 3}, {2, 3}, {1, 2}, {1, 3}}}, false},
      {2, {{{1, 3}, {1, k}, {1, 2}, {2, k}}}, true},
      {3, {{{2, 3}, {1, 2}, {2, 3}, {1, 2}}}, false},
      {4, {{{2, 3}, {3, k}, {1, k}, {3, k}}}, true},
      {5, {{{2, k}, {2, 3}, {3, k}, {1, 3}}}, true},
      {6, {{{2, k}, {1, k}, {3, k}, {2, k}}}, true},
      {7, {{{1, k}, {3, k}, {1, k}, {1, 2}}}, true},
      {8, {{{1, k}, {1, 2}, {2, 3}, {3, k}}}, true},
  }};
  return families;
}

bool is_chain_tuple(int n, const TranspositionTuple& tuple) {
  const Permutation target = Permutation::from_cycles(n, {{1, 2, 3}});
  std::array<Permutation, 6> chain{Permutation::transposition(n, {1, 2}),
                                   Permutation::transposition(n, tuple[0]),
                                   Permutation::transposition(n, tuple[1]),
                                   Permutation::transposition(n, tuple[2]),
                                   Permutation::transposition(n, tuple[3]),
                                   Permutation::transposition(n, {2, 3})};
  const Permutation product = compose(chain[1], compose(chain[2], compose(chain[3], chain[4])));
  if (product != target) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (commute(chain[i], chain[i + 1])) return false;
  }
  return true;
}

namespace {

std::set<int> points_of(const TranspositionTuple& tuple) {
  std::set<int> points;
  for (const auto& t : tuple) {
    points.insert(t.lo);
    points.insert(t.hi);
  }
  return points;
}

}  // namespace

std::vector<ClassifiedTuple> enumerate_chain_tuples(int n) {
  if (n < 3) throw DomainError("chain tuples need n >= 3, got " + std::to_string(n));
  const auto all = all_transpositions(n);
  std::vector<ClassifiedTuple> out;
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (const auto& c : all) {
        for (const auto& d : all) {
          const TranspositionTuple tuple{a, b, c, d};
          if (!is_chain_tuple(n, tuple)) continue;
          ClassifiedTuple entry{tuple, 0, std::nullopt};
          std::optional<int> free_point;
          for (int x : points_of(tuple)) {
            if (x > 3) free_point = x;
          }
          for (const auto& family : tuple_families()) {
            if (family.parametric != free_point.has_value()) continue;
            if (family.instantiate(free_point.value_or(4)) != tuple) continue;
            if (entry.family != 0) {
              throw ContractViolation("tuple matches families " + std::to_string(entry.family) + " and " +
                                      std::to_string(family.id));
            }
            entry.family = family.id;
            entry.k = free_point;
          }
          out.push_back(entry);
        }
      }
    }
  }
  return out;
}

LemmaReport verify_chain_tuples(int n) {
  LemmaReport report{Lemma::ChainTuples, 0, {}, {}};
  const auto survivors = enumerate_chain_tuples(n);
  std::set<TranspositionTuple> found;
  for (const auto& entry : survivors) {
    ++report.instances_checked;
    found.insert(entry.tuple);
    std::vector<Transposition> listed(entry.tuple.begin(), entry.tuple.end());
    if (entry.family == 0) report.violations.push_back({Permutation(n), listed, "matches no family"});
    if (points_of(entry.tuple).size() > 4) report.violations.push_back({Permutation(n), listed, "uses more than four points"});
  }
  for (const auto& family : tuple_families()) {
    const int last_k = family.parametric ? n : 4;
    for (int k = 4; k <= last_k; ++k) {
      const auto tuple = family.instantiate(k);
      if (!found.contains(tuple)) {
        report.violations.push_back(
            {Permutation(n), {tuple.begin(), tuple.end()}, "family " + std::to_string(family.id) + " member missing"});
      }
    }
  }
  return report;
}

}  // namespace tcay
