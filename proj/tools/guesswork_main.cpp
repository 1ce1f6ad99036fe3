#include <CLI11.hpp>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "guesswork/harness.hpp"
#include "guesswork/serialize.hpp"
#include "guesswork/simulate.hpp"

namespace {

using namespace guesswork;

constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitVerification = 4;

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(15) << v;
  return out.str();
}

std::string format_ranking(const Permutation& p) {
  std::string out = "[";
  for (int t = 0; t < p.size(); ++t) {
    if (t > 0) out += ", ";
    out += std::to_string(p(t) + 1);
  }
  return out + "]";
}

void print_result_text(const GuessworkResult& r) {
  if (r.value) {
    std::cout << "value: " << format_double(*r.value) << "\n";
  } else {
    std::cout << "value: undetermined (no dominant ranking)\n";
  }
  std::cout << "method: " << (r.method == Method::closed_form ? "closed_form" : "bracket_only")
            << "\n";
  if (r.sigma_star) std::cout << "sigma_star: " << format_ranking(*r.sigma_star) << "\n";
  std::cout << "bracket: [" << format_double(r.bracket.lower) << ", "
            << format_double(r.bracket.upper) << "]";
  if (!r.bracket.witness.empty()) std::cout << " (upper from " << r.bracket.witness << ")";
  std::cout << "\n";
}

void print_reports_text(const std::vector<TrialReport>& reports) {
  for (const TrialReport& r : reports) {
    std::cout << std::left << std::setw(38) << r.property << " trials=" << std::setw(6) << r.trials
              << " passes=" << std::setw(6) << r.passes << " failures=" << std::setw(4)
              << r.failures << " skips=" << std::setw(4) << r.skips
              << " worst_violation=" << format_double(r.worst_violation) << "\n";
  }
}

struct CommonOptions {
  std::uint64_t seed = 1;
  std::string format = "text";
  double tol = 1e-8;
  int n_max = 8;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--seed", opts.seed, "Base seed for every derived random stream")
      ->envname("GUESSWORK_SEED");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--tol", opts.tol, "Comparison tolerance (dominance slack scale for compute)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--n-max", opts.n_max, "Largest ensemble size the ranking sweep accepts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

EngineConfig engine_config(const CommonOptions& opts) {
  EngineConfig config;
  config.n_max = opts.n_max;
  config.dominance_tol_scale = opts.tol;
  config.bracket_seed = opts.seed;
  return config;
}

int run_compute(const std::string& path, const CommonOptions& opts) {
  Ensemble ensemble = load_ensemble(path);
  GuessworkResult result = closed_form_guesswork(ensemble, engine_config(opts));
  if (opts.format == "json")
    std::cout << to_json(result).dump(2) << "\n";
  else
    print_result_text(result);
  return 0;
}

int run_bounds(const std::string& path, int trials, const CommonOptions& opts) {
  Ensemble ensemble = load_ensemble(path);
  Bracket bracket = guesswork_bracket(ensemble, trials, opts.seed, engine_config(opts));
  if (opts.format == "json") {
    json out{{"lower", bracket.lower}, {"upper", bracket.upper}, {"witness", bracket.witness}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "lower: " << format_double(bracket.lower) << "\n"
              << "upper: " << format_double(bracket.upper) << " (from " << bracket.witness
              << ")\n";
  }
  return 0;
}

int run_verify(int trials, const std::vector<int>& dims, const std::vector<int>& n_values,
               const CommonOptions& opts) {
  SuiteConfig config;
  config.seed = opts.seed;
  config.trials = trials;
  if (!dims.empty()) config.dims = dims;
  if (!n_values.empty()) config.n_values = n_values;
  config.equality_tol = opts.tol;
  config.inequality_tol = opts.tol;
  config.engine = engine_config(opts);
  std::vector<TrialReport> reports = run_suite(config);
  if (opts.format == "json") {
    // One report per line so streams stay grep-friendly.
    for (const TrialReport& r : reports) std::cout << to_json(r).dump() << "\n";
  } else {
    print_reports_text(reports);
  }
  if (!all_passed(reports)) {
    std::cerr << "verification failed\n";
    return kExitVerification;
  }
  return 0;
}

int run_simulate(const std::string& path, const std::string& povm_path, std::int64_t shots,
                 const CommonOptions& opts) {
  Ensemble ensemble = load_ensemble(path);
  std::optional<RankingPovm> povm;
  if (!povm_path.empty()) {
    povm = load_ranking_povm(povm_path);
  } else {
    GuessworkResult result = closed_form_guesswork(ensemble, engine_config(opts));
    if (!result.povm) {
      std::cerr << "no dominant ranking for this ensemble; pass --povm with a measurement\n";
      return 1;
    }
    povm = std::move(result.povm);
  }
  GameStats stats = simulate_game(ensemble, *povm, shots, opts.seed);
  if (opts.format == "json") {
    std::cout << to_json(stats).dump(2) << "\n";
  } else {
    std::cout << "shots: " << stats.shots << "\n"
              << "mean_guesses: " << format_double(stats.mean_guesses) << "\n"
              << "std_error: " << format_double(stats.std_error) << "\n"
              << "histogram:";
    for (std::int64_t c : stats.histogram) std::cout << " " << c;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guesswork of finite quantum ensembles"};
  app.require_subcommand(1);

  CommonOptions opts;

  std::string ensemble_path;
  auto* compute = app.add_subcommand(
      "compute", "Closed-form guesswork of an ensemble, or a bracket when no ranking dominates");
  compute->add_option("ensemble", ensemble_path, "Ensemble JSON file")->required();
  add_common(compute, opts);

  int bound_trials = 16;
  auto* bounds = app.add_subcommand("bounds", "Entropy lower bound and measured upper bound");
  bounds->add_option("ensemble", ensemble_path, "Ensemble JSON file")->required();
  bounds->add_option("--trials", bound_trials, "Random candidate measurements for the upper bound")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_common(bounds, opts);

  int verify_trials = 1000;
  std::vector<int> dims;
  std::vector<int> n_values;
  auto* verify = app.add_subcommand("verify", "Randomized property checks over every campaign");
  verify->add_option("--trials", verify_trials, "Trials per campaign")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--dims", dims, "State dimensions to draw from")->delimiter(',');
  verify->add_option("--n-values", n_values, "Ensemble sizes to draw from")->delimiter(',');
  add_common(verify, opts);

  std::string povm_path;
  std::int64_t shots = 100000;
  bool use_optimal = false;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo guessing game");
  simulate->add_option("ensemble", ensemble_path, "Ensemble JSON file")->required();
  simulate->add_option("--shots", shots, "Number of game rounds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* povm_opt =
      simulate->add_option("--povm", povm_path, "Ranking measurement JSON file to play");
  simulate->add_flag("--optimal", use_optimal, "Play the closed-form optimal measurement (default)")
      ->excludes(povm_opt);
  add_common(simulate, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(ensemble_path, opts);
    if (bounds->parsed()) return run_bounds(ensemble_path, bound_trials, opts);
    if (verify->parsed()) return run_verify(verify_trials, dims, n_values, opts);
    if (simulate->parsed()) return run_simulate(ensemble_path, povm_path, shots, opts);
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& err) {
    std::cerr << "invariant violation: " << err.what() << "\n";
    return kExitInvariant;
  } catch (const SizeError& err) {
    std::cerr << "invariant violation: " << err.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}
