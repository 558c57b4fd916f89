// tcay: analyze Cayley graphs of S_n generated by transpositions.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "tcay/analysis.hpp"
#include "tcay/error.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kPrecondition = 2,
  kCapacity = 3,
  kNotLiftable = 4,
  kVerificationFailed = 5,
};

int default_jobs() {
  if (const char* env = std::getenv("CAYLEY_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring CAYLEY_JOBS=" << env << '\n';
    }
  }
  return 1;
}

void write_dot(const std::string& path, const tcay::TranspositionSet& t) {
  std::ofstream out(path);
  if (!out) throw tcay::ParseError(0, "cannot write " + path);
  out << tcay::to_dot(tcay::graph_of(t), "G");
  if (t.n() <= 4) out << tcay::to_dot(tcay::CayleyGraph(t));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs of symmetric groups generated by transpositions"};
  app.require_subcommand(1);

  std::string path;
  std::string method_name;
  bool skip_lemmas = false;
  bool human = false;
  int sigmas = 5;
  std::uint64_t seed = 1;
  std::string dot_path;
  int sweep_n = 0;
  int jobs = default_jobs();

  const std::map<std::string, tcay::NormalityMethod> methods{
      {"fix-neighborhood", tcay::NormalityMethod::FixNeighborhood},
      {"conjugation", tcay::NormalityMethod::Conjugation},
      {"both", tcay::NormalityMethod::Both},
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one transposition graph");
  analyze_cmd->add_option("path", path, "edge-list file")->required();
  analyze_cmd->add_option("--method", method_name, "normality criterion")
      ->check(CLI::IsMember({"fix-neighborhood", "conjugation", "both"}));
  analyze_cmd->add_flag("--skip-lemmas", skip_lemmas, "omit the lemma suites");
  analyze_cmd->add_option("--sigmas", sigmas, "random base points per lemma")->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--seed", seed, "seed for random base points");
  analyze_cmd->add_flag("--human", human, "aligned table instead of JSON");
  analyze_cmd->add_option("--dot", dot_path, "write G(T), and the Cayley graph for n <= 4, as DOT");

  auto* sweep_cmd = app.add_subcommand("sweep", "check every connected class on n vertices");
  sweep_cmd->add_option("--n", sweep_n, "number of points")->required();
  sweep_cmd->add_option("--jobs", jobs, "worker threads (default $CAYLEY_JOBS or 1)")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--human", human, "aligned table instead of JSON");

  auto* lemmas_cmd = app.add_subcommand("lemmas", "run the structural verifiers");
  lemmas_cmd->add_option("path", path, "edge-list file")->required();
  lemmas_cmd->add_option("--sigmas", sigmas, "random base points")->check(CLI::NonNegativeNumber);
  lemmas_cmd->add_option("--seed", seed, "seed for random base points");

  auto* lift_cmd = app.add_subcommand("lift", "lift line-graph automorphisms back to G");
  lift_cmd->add_option("path", path, "edge-list file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      const auto t = tcay::read_edge_list(path);
      if (!dot_path.empty()) write_dot(dot_path, t);
      tcay::AnalyzeOptions options;
      if (!method_name.empty()) options.method = methods.at(method_name);
      options.skip_lemmas = skip_lemmas;
      options.random_sigmas = sigmas;
      options.seed = seed;
      const auto report = tcay::analyze(t, options);
      if (human) {
        std::cout << report.to_table();
      } else {
        std::cout << report.to_json().dump(2) << '\n';
      }
      return kOk;
    }
    if (sweep_cmd->parsed()) {
      const auto summary = tcay::sweep(sweep_n, jobs);
      if (human) {
        std::cout << summary.to_table();
      } else {
        std::cout << summary.to_json().dump(2) << '\n';
      }
      return summary.ok() ? kOk : kVerificationFailed;
    }
    if (lemmas_cmd->parsed()) {
      const auto t = tcay::read_edge_list(path);
      if (!tcay::generates_sn(t)) throw tcay::PreconditionError("transposition set does not generate S_n");
      const tcay::CayleyGraph g(t);
      nlohmann::json out = nlohmann::json::object();
      bool ok = true;
      for (const auto& report : tcay::run_lemma_suite(g, sigmas, seed)) {
        ok = ok && report.passed();
        out[tcay::to_string(report.lemma)] = tcay::to_json(g, report);
      }
      std::cout << out.dump(2) << '\n';
      return ok ? kOk : kVerificationFailed;
    }
    if (lift_cmd->parsed()) {
      const auto t = tcay::read_edge_list(path);
      const auto report = tcay::lift_correspondence(tcay::graph_of(t));
      std::cout << report.to_json().dump(2) << '\n';
      return report.bijective ? kOk : kVerificationFailed;
    }
  } catch (const tcay::ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << '\n';
    return kInputError;
  } catch (const tcay::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const tcay::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const tcay::NotLiftable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotLiftable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
