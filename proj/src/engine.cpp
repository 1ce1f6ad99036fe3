#include "guesswork/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

#include "guesswork/random.hpp"

namespace guesswork {

ScoreMatrix score_matrix(const Ensemble& ensemble, const Permutation& sigma) {
  const int n = ensemble.size();
  if (sigma.size() != n)
    throw ValidationError("score_matrix: ranking over " + std::to_string(sigma.size()) +
                          " items, ensemble has " + std::to_string(n));
  Matrix m = Matrix::Zero(ensemble.dim(), ensemble.dim());
  for (int t = 0; t < n; ++t) {
    const int x = sigma(t);
    m += static_cast<double>(2 * t + 1 - n) * ensemble.prob(x) * ensemble.state(x).matrix();
  }
  return {sigma, std::move(m)};
}

std::optional<Permutation> find_dominant_permutation(const Ensemble& ensemble,
                                                     const EngineConfig& config) {
  SweepOutcome sweep = score_sweep(ensemble, config);
  if (!sweep.dominant) return std::nullopt;
  return sweep.best;
}

RankingPovm optimal_povm(const Ensemble& ensemble, const Permutation& sigma_star,
                         const EngineConfig& config) {
  const int n = ensemble.size();
  if (sigma_star.size() != n)
    throw ValidationError("optimal_povm: ranking over " + std::to_string(sigma_star.size()) +
                          " items, ensemble has " + std::to_string(n));
  const int dim = ensemble.dim();
  if (n == 1)
    return RankingPovm(1, {{Permutation::identity(1), Matrix::Identity(dim, dim)}});
  Matrix score = score_matrix(ensemble, sigma_star).matrix;
  const double eps = config.zero_tol_scale * std::max(1.0, trace_norm(score));
  ProjectorParts parts = projector_parts(score, eps);
  // The reversal's score matrix is the negation, so its negative part is
  // this one's positive part; both elements come from one decomposition and
  // sum to the identity.
  std::vector<std::pair<Permutation, Matrix>> entries;
  entries.emplace_back(sigma_star, parts.negative + 0.5 * parts.null);
  entries.emplace_back(sigma_star.reversal(), parts.positive + 0.5 * parts.null);
  return RankingPovm(n, std::move(entries));
}

Eigen::MatrixXd born_conditional(const Ensemble& ensemble, const Povm& povm) {
  if (povm.dim() != ensemble.dim())
    throw ValidationError("born_conditional: POVM dimension " + std::to_string(povm.dim()) +
                          " does not match ensemble dimension " + std::to_string(ensemble.dim()));
  Eigen::MatrixXd rows(ensemble.size(), povm.size());
  for (int x = 0; x < ensemble.size(); ++x)
    for (int y = 0; y < povm.size(); ++y)
      rows(x, y) = (povm.element(y) * ensemble.state(x).matrix()).trace().real();
  return rows;
}

double povm_guesswork(const Ensemble& ensemble, const Povm& povm) {
  const Eigen::MatrixXd rows = born_conditional(ensemble, povm);
  const int n = ensemble.size();
  // Joint columns sorted descending; the posterior normalization cancels, so
  // zero-probability outcomes need no special case. Born round-off below
  // zero is clamped.
  double total = 0.0;
  std::vector<double> column(static_cast<std::size_t>(n));
  for (int y = 0; y < povm.size(); ++y) {
    for (int x = 0; x < n; ++x)
      column[static_cast<std::size_t>(x)] = std::max(0.0, ensemble.prob(x) * rows(x, y));
    std::sort(column.begin(), column.end(), std::greater<>());
    for (int i = 0; i < n; ++i)
      total += static_cast<double>(i + 1) * column[static_cast<std::size_t>(i)];
  }
  return total;
}

double ranking_guesswork(const Ensemble& ensemble, const RankingPovm& povm) {
  if (povm.n() != ensemble.size())
    throw ValidationError("ranking_guesswork: outcomes rank " + std::to_string(povm.n()) +
                          " items, ensemble has " + std::to_string(ensemble.size()));
  if (povm.dim() != ensemble.dim())
    throw ValidationError("ranking_guesswork: POVM dimension " + std::to_string(povm.dim()) +
                          " does not match ensemble dimension " + std::to_string(ensemble.dim()));
  double total = 0.0;
  for (int k = 0; k < povm.size(); ++k) {
    const Permutation& sigma = povm.outcome(k);
    for (int t = 0; t < ensemble.size(); ++t) {
      const int x = sigma(t);
      double joint =
          ensemble.prob(x) * (povm.element(k) * ensemble.state(x).matrix()).trace().real();
      total += static_cast<double>(t + 1) * std::max(0.0, joint);
    }
  }
  return total;
}

RankingPovm rankings_from_posteriors(const Ensemble& ensemble, const Povm& povm) {
  const Eigen::MatrixXd rows = born_conditional(ensemble, povm);
  const int n = ensemble.size();
  std::map<std::vector<int>, Matrix> merged;
  for (int y = 0; y < povm.size(); ++y) {
    std::vector<int> items(static_cast<std::size_t>(n));
    std::iota(items.begin(), items.end(), 0);
    std::stable_sort(items.begin(), items.end(), [&](int a, int b) {
      return ensemble.prob(a) * rows(a, y) > ensemble.prob(b) * rows(b, y);
    });
    auto [it, inserted] = merged.emplace(std::move(items), povm.element(y));
    if (!inserted) it->second += povm.element(y);
  }
  std::vector<std::pair<Permutation, Matrix>> entries;
  entries.reserve(merged.size());
  for (auto& [images, element] : merged)
    entries.emplace_back(Permutation(images), std::move(element));
  return RankingPovm(n, std::move(entries));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  EigenSystem es = spectral_decompose(rho.matrix());
  double h = 0.0;
  for (long i = 0; i < es.eigenvalues.size(); ++i) {
    double lambda = es.eigenvalues(i);
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

double holevo_chi(const Ensemble& ensemble) {
  double chi = von_neumann_entropy(ensemble.average_state());
  for (int x = 0; x < ensemble.size(); ++x)
    chi -= ensemble.prob(x) * von_neumann_entropy(ensemble.state(x));
  return chi;
}

double guesswork_lower_bound(const Ensemble& ensemble) {
  double exponent = shannon_entropy(ensemble.probs()) - holevo_chi(ensemble);
  return std::max(1.0, std::exp2(exponent) / std::numbers::e + 0.5);
}

namespace {

Povm average_eigenbasis_povm(const Ensemble& ensemble) {
  EigenSystem es = spectral_decompose(ensemble.average_state().matrix());
  std::vector<Matrix> projectors;
  projectors.reserve(static_cast<std::size_t>(ensemble.dim()));
  for (int i = 0; i < ensemble.dim(); ++i)
    projectors.push_back(es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint());
  return Povm(std::move(projectors));
}

}  // namespace

Bracket guesswork_bracket(const Ensemble& ensemble, int trial_povms, std::uint64_t seed,
                          const EngineConfig& config) {
  Bracket bracket;
  bracket.lower = guesswork_lower_bound(ensemble);
  // Expected guesses are at least one, so candidate values clamp up to 1;
  // that keeps lower <= upper when a bound is met with equality.
  auto consider = [&bracket](double value, const std::string& name) {
    value = std::max(1.0, value);
    if (bracket.witness.empty() || value < bracket.upper) {
      bracket.upper = value;
      bracket.witness = name;
    }
  };
  // Measuring nothing leaves the prior.
  consider(classical_guesswork(ensemble.probs()), "trivial");
  consider(povm_guesswork(ensemble, average_eigenbasis_povm(ensemble)), "average_eigenbasis");
  // The best sweep candidate's two-outcome measurement is achievable whether
  // or not it is dominant.
  SweepOutcome sweep = score_sweep(ensemble, config);
  consider(povm_guesswork(ensemble, as_plain_povm(optimal_povm(ensemble, sweep.best, config))),
           "score_ranking");
  // Candidate k draws from mix_seed(seed, k): a longer candidate list keeps
  // its prefix, so the upper bound is monotone in trial_povms.
  const int outcomes = std::max(ensemble.size(), ensemble.dim());
  for (int k = 0; k < trial_povms; ++k) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    consider(povm_guesswork(ensemble, random_povm(ensemble.dim(), outcomes, rng)),
             "random_" + std::to_string(k));
  }
  return bracket;
}

GuessworkResult closed_form_guesswork(const Ensemble& ensemble, const EngineConfig& config) {
  GuessworkResult result;
  SweepOutcome sweep = score_sweep(ensemble, config);
  if (sweep.dominant) {
    double value = 0.5 * (ensemble.size() + 1) - 0.5 * sweep.best_trace_norm;
    result.value = value;
    result.sigma_star = sweep.best;
    result.povm = optimal_povm(ensemble, sweep.best, config);
    result.method = Method::closed_form;
    // The entropy bound can graze the value; min keeps the bracket ordered.
    result.bracket = {std::min(guesswork_lower_bound(ensemble), value), value,
                      "optimal_ranking"};
  } else {
    result.method = Method::bracket_only;
    result.bracket = guesswork_bracket(ensemble, config.bracket_trials, config.bracket_seed, config);
  }
  return result;
}

}  // namespace guesswork
