#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "guesswork/config.hpp"
#include "guesswork/quantum.hpp"

namespace guesswork {

struct EngineConfig {
  // Largest ensemble size the n! ranking sweep will accept.
  int n_max = 8;
  // Loewner dominance slack, scaled by (1 + trace norm of the candidate).
  double dominance_tol_scale = 1e-8;
  // Threshold scale separating zero eigenvalues when splitting projectors.
  double zero_tol_scale = 1e-9;
  Exec exec = Exec::parallel;
  // Random measurements tried by guesswork_bracket.
  int bracket_trials = 16;
  std::uint64_t bracket_seed = 1;
};

// Score matrix of a ranking: sum_t (2t + 1 - n) p(sigma(t)) rho_sigma(t)
// with t the 0-based guess position. Early guesses weigh negative, late
// ones positive, so a small score matrix in trace norm is good.
struct ScoreMatrix {
  Permutation sigma;
  Matrix matrix;
};
ScoreMatrix score_matrix(const Ensemble& ensemble, const Permutation& sigma);

// Candidate from the full sweep: the ranking whose score matrix has maximal
// trace norm, ties broken by lexicographically smallest ranking. dominant is
// set when its |score| bounds every other |score| in the Loewner order.
struct SweepOutcome {
  Permutation best;
  double best_trace_norm = 0.0;
  bool dominant = false;
};
SweepOutcome score_sweep(const Ensemble& ensemble, const EngineConfig& config = {});
SweepOutcome score_sweep_serial(const Ensemble& ensemble, const EngineConfig& config = {});
SweepOutcome score_sweep_parallel(const Ensemble& ensemble, const EngineConfig& config = {});

std::optional<Permutation> find_dominant_permutation(const Ensemble& ensemble,
                                                     const EngineConfig& config = {});

// Two-outcome measurement {sigma*, reversal}: each element is the projector
// onto the negative part of that outcome's score matrix plus half the null
// projector. A single-item ensemble gets the identity measurement.
RankingPovm optimal_povm(const Ensemble& ensemble, const Permutation& sigma_star,
                         const EngineConfig& config = {});

// p_{Y|X}(y|x) = Tr[E_y rho_x], one row per ensemble label.
Eigen::MatrixXd born_conditional(const Ensemble& ensemble, const Povm& povm);

// Expected guesses when the guesser reorders by posterior after each outcome.
double povm_guesswork(const Ensemble& ensemble, const Povm& povm);

// Expected guesses when each outcome's ranking is followed as announced.
double ranking_guesswork(const Ensemble& ensemble, const RankingPovm& povm);

// Merge outcomes by their posterior descending order; povm_guesswork of the
// input equals ranking_guesswork of the result.
RankingPovm rankings_from_posteriors(const Ensemble& ensemble, const Povm& povm);

double von_neumann_entropy(const DensityMatrix& rho);
// S(average) - sum_x p(x) S(rho_x).
double holevo_chi(const Ensemble& ensemble);
// max(1, 2^(H(X) - chi) / e + 1/2).
double guesswork_lower_bound(const Ensemble& ensemble);

struct Bracket {
  double lower = 1.0;
  double upper = 0.0;
  // Candidate measurement that produced the upper bound.
  std::string witness;
};

// Lower bound from entropies, upper bound as the best expected guesses over
// a fixed candidate set: the trivial measurement, the average-state
// eigenbasis, trial_povms seeded random measurements, and the two-outcome
// measurement of the best sweep candidate when it validates. Candidate k
// draws from mix_seed(seed, k), so growing trial_povms never raises the
// upper bound for a fixed seed.
Bracket guesswork_bracket(const Ensemble& ensemble, int trial_povms, std::uint64_t seed,
                          const EngineConfig& config = {});

enum class Method { closed_form, bracket_only };

struct GuessworkResult {
  std::optional<double> value;
  std::optional<Permutation> sigma_star;
  std::optional<RankingPovm> povm;
  Method method = Method::bracket_only;
  Bracket bracket;
};

// (n+1)/2 - |score(sigma*)|/2 when a dominant ranking exists, else a bracket.
GuessworkResult closed_form_guesswork(const Ensemble& ensemble, const EngineConfig& config = {});

}  // namespace guesswork
