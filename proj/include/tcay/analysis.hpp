#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tcay/cayley_graph.hpp"
#include "tcay/graph.hpp"
#include "tcay/structure.hpp"
#include "tcay/symmetry.hpp"
#include "tcay/transposition_graph.hpp"

namespace tcay {

/// Edge-list input: '#' comment lines and blank lines are skipped, the first
/// remaining line is n, and every later line is "i j" with 1 <= i < j <= n.
/// LF and CRLF are both accepted. Throws ParseError with the line number.
TranspositionSet parse_edge_list(std::string_view text);

/// Reads and parses a file; an unreadable file is a ParseError on line 0.
TranspositionSet read_edge_list(const std::string& path);

/// Runs every lemma verifier at sigma = id plus `random_sigmas` random
/// elements drawn from a generator seeded with `seed`.
std::vector<LemmaReport> run_lemma_suite(const CayleyGraph& g, int random_sigmas, std::uint64_t seed);

nlohmann::json to_json(const CayleyGraph& g, const LemmaReport& report);

struct AnalyzeOptions {
  /// Defaults to Both for n >= 5 and Conjugation otherwise.
  std::optional<NormalityMethod> method;
  bool skip_lemmas = false;
  int random_sigmas = 5;
  std::uint64_t seed = 1;
};

struct LemmaOutcome {
  std::string name;
  bool passed = true;
  std::size_t instances_checked = 0;
  std::size_t violations = 0;
  std::size_t unjudged = 0;
};

struct AnalysisReport {
  int n = 0;
  std::vector<Edge> edges;
  Classification classification;
  bool generates_sn = false;
  std::uint64_t aut_g_order = 0;
  std::uint64_t cayley_vertices = 0;
  std::uint64_t cayley_edges = 0;
  std::uint64_t stab_order = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t expected_normal_order = 0;
  bool is_normal = false;
  NormalityMethod criterion_used = NormalityMethod::Both;
  std::optional<bool> normal_by_fix_neighborhood;
  std::optional<bool> normal_by_conjugation;
  /// Rendered witness: moved-vertex count plus a few "from -> to" pairs.
  nlohmann::json witness;
  std::vector<LemmaOutcome> lemma_results;
  double elapsed_ms = 0.0;

  /// Sorted keys; elapsed_ms is left out unless include_timing is set.
  nlohmann::json to_json(bool include_timing = true) const;
  std::string to_table() const;
};

/// Throws PreconditionError if T does not generate S_n.
AnalysisReport analyze(const TranspositionSet& t, const AnalyzeOptions& options = {});

struct SweepClass {
  CanonicalForm form;
  std::vector<Edge> edges;
  GraphKind kind = GraphKind::Other;
  std::uint64_t aut_g_order = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t expected_normal_order = 0;
  bool is_normal = false;
  bool methods_agree = true;
  std::optional<bool> direct_product;
};

struct SweepException {
  std::string canonical_form;
  GraphKind reason = GraphKind::Other;
};

struct SweepSummary {
  int n = 0;
  std::size_t classes_total = 0;
  std::size_t classes_normal = 0;
  std::vector<SweepException> exceptions;
  std::vector<std::string> corollary_violations;
  std::vector<SweepClass> classes;

  bool ok() const noexcept { return corollary_violations.empty(); }
  nlohmann::json to_json() const;
  std::string to_table() const;
};

/// Analyzes every connected class on n vertices (3 <= n <= 6) and checks
/// that exactly the four-cycle and complete classes are non-normal, and
/// that every normal class has order n! * |Aut(G(T))| and the direct-product
/// structure. Classes run on `jobs` threads; output order is by canonical
/// form regardless.
SweepSummary sweep(int n, int jobs = 1);

struct LiftEntry {
  Permutation line_automorphism;
  Permutation lifted;
  bool round_trip = false;
};

struct LiftReport {
  int n = 0;
  std::uint64_t graph_aut_order = 0;
  std::uint64_t line_aut_order = 0;
  std::vector<LiftEntry> entries;
  bool bijective = false;

  nlohmann::json to_json() const;
};

/// Lifts every automorphism of L(g) back to g. Throws NotLiftable when one
/// has no preimage.
LiftReport lift_correspondence(const Graph& g);

}  // namespace tcay
