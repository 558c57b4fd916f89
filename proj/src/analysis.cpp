#include "tcay/analysis.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "tcay/error.hpp"

namespace tcay {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.lo, e.hi});
  return out;
}

json witness_json(const CayleyGraph& g, const std::optional<VertexPermutation>& witness) {
  if (!witness) return nullptr;
  constexpr std::size_t kSample = 8;
  json sample = json::array();
  std::size_t moved = 0;
  for (Vertex v = 0; v < witness->size(); ++v) {
    if ((*witness)(v) == v) continue;
    if (moved++ < kSample) {
      sample.push_back({to_cycle_string(g.element(v)), to_cycle_string(g.element((*witness)(v)))});
    }
  }
  return {{"moved_vertices", moved}, {"sample", sample}};
}

std::string kind_name(GraphKind kind) { return to_string(kind); }

}  // namespace

TranspositionSet parse_edge_list(std::string_view text) {
  std::optional<int> n;
  std::vector<Transposition> edges;
  std::vector<int> edge_lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::istringstream fields{std::string(line)};
    std::vector<long long> values;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected integers, got '" + token + "'");
      }
      if (used != token.size()) throw ParseError(line_no, "expected integers, got '" + token + "'");
      values.push_back(value);
    }
    if (!n) {
      if (values.size() != 1) throw ParseError(line_no, "first line must hold the vertex count n");
      if (values[0] < 2 || values[0] > kMaxDegree) {
        throw ParseError(line_no, "vertex count " + std::to_string(values[0]) + " outside [2, " +
                                      std::to_string(kMaxDegree) + "]");
      }
      n = static_cast<int>(values[0]);
    } else {
      if (values.size() != 2) throw ParseError(line_no, "edge lines must be \"i j\"");
      const long long i = values[0];
      const long long j = values[1];
      if (i < 1 || j < 1 || i > *n || j > *n) {
        throw ParseError(line_no, "vertex outside {1.." + std::to_string(*n) + "}");
      }
      if (i == j) throw ParseError(line_no, "self-loop " + std::to_string(i) + " " + std::to_string(j));
      const Transposition t(static_cast<int>(i), static_cast<int>(j));
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edges[k] == t) {
          throw ParseError(line_no, "duplicate edge " + to_string(t) + " (first on line " +
                                        std::to_string(edge_lines[k]) + ")");
        }
      }
      if (i > j) throw ParseError(line_no, "edges must be written with i < j");
      edges.push_back(t);
      edge_lines.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError(line_no, "missing vertex count");
  if (edges.empty()) throw ParseError(line_no, "no edges given");
  return {*n, std::move(edges)};
}

TranspositionSet read_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::vector<LemmaReport> run_lemma_suite(const CayleyGraph& g, int random_sigmas, std::uint64_t seed) {
  std::vector<Permutation> sigmas{Permutation(g.n())};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, g.vertex_count() - 1);
  for (int i = 0; i < random_sigmas; ++i) sigmas.push_back(g.element(pick(rng)));

  std::vector<LemmaReport> reports;
  reports.push_back(verify_commute_disjoint(g.generators()));
  LemmaReport four{Lemma::UniqueFourCycle, 0, {}, {}};
  LemmaReport k33{Lemma::TriangleK33, 0, {}, {}};
  LemmaReport six{Lemma::UniqueSixCycle, 0, {}, {}};
  for (const auto& sigma : sigmas) {
    four.merge(verify_four_cycle(g, sigma));
    k33.merge(verify_k33(g, sigma));
    six.merge(verify_six_cycle(g, sigma));
  }
  reports.push_back(std::move(four));
  reports.push_back(std::move(k33));
  if (g.n() >= 3) reports.push_back(verify_chain_tuples(g.n()));
  reports.push_back(std::move(six));
  return reports;
}

json to_json(const CayleyGraph& g, const LemmaReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json ts = json::array();
    for (const auto& t : v.transpositions) ts.push_back(to_string(t));
    violations.push_back({{"sigma", to_cycle_string(v.sigma)}, {"transpositions", ts}, {"found", v.found}});
  }
  json unjudged = json::array();
  for (const auto& u : report.unjudged) {
    unjudged.push_back(
        {{"sigma", to_cycle_string(u.sigma)}, {"s", to_string(u.s)}, {"t", to_string(u.t)}, {"cycles", u.cycles}});
  }
  (void)g;
  return {{"lemma", to_string(report.lemma)},
          {"passed", report.passed()},
          {"instances_checked", report.instances_checked},
          {"violations", violations},
          {"unjudged", unjudged}};
}

json AnalysisReport::to_json(bool include_timing) const {
  json lemmas = json::object();
  for (const auto& l : lemma_results) {
    lemmas[l.name] = {{"passed", l.passed},
                      {"instances_checked", l.instances_checked},
                      {"violations", l.violations},
                      {"unjudged", l.unjudged}};
  }
  json normality = json::object();
  normality["fix_neighborhood"] = normal_by_fix_neighborhood ? json(*normal_by_fix_neighborhood) : json(nullptr);
  normality["conjugation"] = normal_by_conjugation ? json(*normal_by_conjugation) : json(nullptr);
  json out = {{"n", n},
              {"edges", edges_json(edges)},
              {"classification", {{"kind", kind_name(classification.kind)}, {"connected", classification.connected}}},
              {"generates_sn", generates_sn},
              {"aut_g_order", aut_g_order},
              {"cayley_vertices", cayley_vertices},
              {"cayley_edges", cayley_edges},
              {"stab_order", stab_order},
              {"aut_order", aut_order},
              {"expected_normal_order", expected_normal_order},
              {"is_normal", is_normal},
              {"criterion_used", to_string(criterion_used)},
              {"normality", normality},
              {"witness", witness},
              {"lemma_results", lemmas}};
  if (include_timing) out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string AnalysisReport::to_table() const {
  std::ostringstream os;
  auto row = [&](const std::string& key, const std::string& value) {
    os << std::left << std::setw(24) << key << value << '\n';
  };
  std::string edge_text;
  for (const auto& e : edges) edge_text += (edge_text.empty() ? "" : " ") + std::to_string(e.lo) + "-" + std::to_string(e.hi);
  row("n", std::to_string(n));
  row("edges", edge_text);
  row("classification", kind_name(classification.kind));
  row("|Aut(G(T))|", std::to_string(aut_g_order));
  row("Cayley vertices", std::to_string(cayley_vertices));
  row("Cayley edges", std::to_string(cayley_edges));
  row("|Stab(id)|", std::to_string(stab_order));
  row("|Aut(Cay)|", std::to_string(aut_order));
  row("n! * |Aut(G(T))|", std::to_string(expected_normal_order));
  row("normal", std::string(is_normal ? "yes" : "no") + " (" + to_string(criterion_used) + ")");
  for (const auto& l : lemma_results) {
    row("lemma " + l.name, std::string(l.passed ? "pass" : "FAIL") + " (" + std::to_string(l.instances_checked) +
                               " checked, " + std::to_string(l.violations) + " violations)");
  }
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(1) << elapsed_ms;
  row("elapsed ms", ms.str());
  return os.str();
}

AnalysisReport analyze(const TranspositionSet& t, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport report;
  report.n = t.n();
  report.edges = t.members();
  report.generates_sn = generates_sn(t);
  if (!report.generates_sn) {
    throw PreconditionError("transposition set does not generate S_" + std::to_string(t.n()));
  }
  if (t.n() > kMaxSymmetryDegree) {
    throw CapacityError("analysis supports n <= " + std::to_string(kMaxSymmetryDegree) + ", got " +
                        std::to_string(t.n()));
  }
  report.classification = classify(t);
  report.aut_g_order = automorphisms(graph_of(t)).order;

  const CayleyGraph g(t);
  report.cayley_vertices = g.vertex_count();
  report.cayley_edges = g.edge_count();

  const AutSummary summary = aut_order(g);
  report.stab_order = summary.stab_order;
  report.aut_order = summary.aut_order;

  NormalityMethod method = options.method.value_or(t.n() >= 5 ? NormalityMethod::Both : NormalityMethod::Conjugation);
  if (method != NormalityMethod::Conjugation && t.n() < 5) method = NormalityMethod::Conjugation;
  report.criterion_used = method;

  std::optional<VertexPermutation> witness;
  if (method != NormalityMethod::Conjugation) {
    auto verdict = is_normal(g, NormalityMethod::FixNeighborhood, summary);
    report.normal_by_fix_neighborhood = verdict.is_normal;
    report.expected_normal_order = verdict.expected_normal_order;
    witness = std::move(verdict.witness);
  }
  if (method != NormalityMethod::FixNeighborhood) {
    auto verdict = is_normal(g, NormalityMethod::Conjugation, summary);
    report.normal_by_conjugation = verdict.is_normal;
    report.expected_normal_order = verdict.expected_normal_order;
    if (!witness) witness = std::move(verdict.witness);
  }
  report.is_normal = report.normal_by_fix_neighborhood.value_or(true) && report.normal_by_conjugation.value_or(true);
  report.witness = witness_json(g, witness);

  if (!options.skip_lemmas) {
    for (const auto& l : run_lemma_suite(g, options.random_sigmas, options.seed)) {
      report.lemma_results.push_back(
          {to_string(l.lemma), l.passed(), l.instances_checked, l.violations.size(), l.unjudged.size()});
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

SweepClass sweep_one(const Graph& rep) {
  const TranspositionSet t = TranspositionSet::from_graph(rep);
  SweepClass row;
  row.form = canonical_form(rep);
  row.edges = t.members();
  row.kind = classify(t).kind;
  const CayleyGraph g(t);
  const AutSummary summary = aut_order(g);
  row.aut_order = summary.aut_order;
  const auto conjugation = is_normal(g, NormalityMethod::Conjugation, summary);
  row.aut_g_order = conjugation.expected_normal_order / factorial(g.n());
  row.expected_normal_order = conjugation.expected_normal_order;
  row.is_normal = conjugation.is_normal;
  if (g.n() >= 5) {
    const auto fix = is_normal(g, NormalityMethod::FixNeighborhood, summary);
    row.methods_agree = fix.is_normal == conjugation.is_normal;
  }
  if (row.is_normal) row.direct_product = verify_direct_product(g, summary);
  return row;
}

}  // namespace

SweepSummary sweep(int n, int jobs) {
  if (n < 3 || n > 6) throw CapacityError("sweep supports 3 <= n <= 6, got " + std::to_string(n));
  const std::vector<Graph> reps = enumerate_connected_classes(n);
  std::vector<SweepClass> rows(reps.size());
  std::vector<std::exception_ptr> errors(reps.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < reps.size(); i = next++) {
      try {
        rows[i] = sweep_one(reps[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(reps.size())));
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepSummary summary;
  summary.n = n;
  summary.classes_total = rows.size();
  for (const auto& row : rows) {
    const std::string form = row.form.str();
    const bool exceptional = row.kind == GraphKind::FourCycle || row.kind == GraphKind::CompleteGraph;
    if (row.is_normal) ++summary.classes_normal;
    if (!row.is_normal) {
      summary.exceptions.push_back({form, row.kind});
      if (!exceptional) summary.corollary_violations.push_back(form + ": non-normal but neither C4 nor K_n");
    } else {
      if (exceptional) summary.corollary_violations.push_back(form + ": " + kind_name(row.kind) + " class is normal");
      if (row.aut_order != row.expected_normal_order) {
        summary.corollary_violations.push_back(form + ": |Aut| = " + std::to_string(row.aut_order) +
                                               " but n! * |Aut(G(T))| = " + std::to_string(row.expected_normal_order));
      }
      if (!row.direct_product.value_or(false)) {
        summary.corollary_violations.push_back(form + ": direct-product structure fails");
      }
    }
    if (!row.methods_agree) summary.corollary_violations.push_back(form + ": normality criteria disagree");
  }
  summary.classes = std::move(rows);
  return summary;
}

json SweepSummary::to_json() const {
  json exceptions_json = json::array();
  for (const auto& e : exceptions) {
    exceptions_json.push_back({{"canonical_form", e.canonical_form}, {"reason", kind_name(e.reason)}});
  }
  json classes_json = json::array();
  for (const auto& c : classes) {
    classes_json.push_back({{"canonical_form", c.form.str()},
                            {"edges", edges_json(c.edges)},
                            {"kind", kind_name(c.kind)},
                            {"aut_g_order", c.aut_g_order},
                            {"aut_order", c.aut_order},
                            {"expected_normal_order", c.expected_normal_order},
                            {"is_normal", c.is_normal},
                            {"methods_agree", c.methods_agree},
                            {"direct_product", c.direct_product ? json(*c.direct_product) : json(nullptr)}});
  }
  return {{"n", n},
          {"classes_total", classes_total},
          {"classes_normal", classes_normal},
          {"exceptions", exceptions_json},
          {"corollary_violations", corollary_violations},
          {"classes", classes_json}};
}

std::string SweepSummary::to_table() const {
  std::ostringstream os;
  os << std::left << std::setw(18) << "canonical form" << std::setw(15) << "kind" << std::right << std::setw(8)
     << "|AutG|" << std::setw(12) << "|Aut(Cay)|" << std::setw(12) << "expected" << std::setw(8) << "normal"
     << '\n';
  for (const auto& c : classes) {
    os << std::left << std::setw(18) << c.form.str() << std::setw(15) << kind_name(c.kind) << std::right
       << std::setw(8) << c.aut_g_order << std::setw(12) << c.aut_order << std::setw(12) << c.expected_normal_order
       << std::setw(8) << (c.is_normal ? "yes" : "no") << '\n';
  }
  os << classes_normal << " of " << classes_total << " classes normal; " << corollary_violations.size()
     << " violations\n";
  return os.str();
}

LiftReport lift_correspondence(const Graph& g) {
  LiftReport report;
  report.n = g.order();
  const AutomorphismGroup graph_aut = automorphisms(g);
  const LineGraph lg = line_graph(g);
  const AutomorphismGroup line_aut = automorphisms(lg.graph);
  report.graph_aut_order = graph_aut.order;
  report.line_aut_order = line_aut.order;
  std::vector<Permutation> lifted;
  bool all_round_trip = true;
  for (const auto& psi : line_aut.elements) {
    const Permutation phi = lift_line_automorphism(g, psi);
    const bool round_trip = induce_line_automorphism(g, phi) == psi;
    all_round_trip = all_round_trip && round_trip;
    lifted.push_back(phi);
    report.entries.push_back({psi, phi, round_trip});
  }
  std::sort(lifted.begin(), lifted.end());
  const bool distinct = std::adjacent_find(lifted.begin(), lifted.end()) == lifted.end();
  report.bijective = all_round_trip && distinct && lifted == graph_aut.elements;
  return report;
}

json LiftReport::to_json() const {
  json entries_json = json::array();
  for (const auto& e : entries) {
    entries_json.push_back({{"line_automorphism", to_cycle_string(e.line_automorphism)},
                            {"lifted", to_cycle_string(e.lifted)},
                            {"round_trip", e.round_trip}});
  }
  return {{"n", n},
          {"graph_aut_order", graph_aut_order},
          {"line_aut_order", line_aut_order},
          {"bijective", bijective},
          {"entries", entries_json}};
}

}  // namespace tcay
