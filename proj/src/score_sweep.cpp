#include <atomic>
#include <cstdint>

#include "guesswork/engine.hpp"

namespace guesswork {

namespace {

struct Candidate {
  double tn = -1.0;
  std::uint64_t index = 0;
};

// Total order on candidates: larger trace norm wins, ties go to the smaller
// lexicographic index. Reducing with it is associative and commutative, so
// serial and parallel sweeps pick the same winner.
inline bool better(const Candidate& a, const Candidate& b) {
  if (a.tn != b.tn) return a.tn > b.tn;
  return a.index < b.index;
}

void check_size(const Ensemble& ensemble, const EngineConfig& config) {
  if (ensemble.size() > config.n_max)
    throw SizeError("score_sweep: ensemble size " + std::to_string(ensemble.size()) +
                    " exceeds n_max = " + std::to_string(config.n_max));
}

Candidate evaluate(const Ensemble& ensemble, std::uint64_t index) {
  Matrix score = score_matrix(ensemble, nth_permutation(ensemble.size(), index)).matrix;
  return {trace_norm(score), index};
}

// |score(best)| >= |score(index)| in the Loewner order, within slack.
bool dominates(const Ensemble& ensemble, const Matrix& best_abs, std::uint64_t index,
               double slack) {
  Matrix other = score_matrix(ensemble, nth_permutation(ensemble.size(), index)).matrix;
  return is_psd(best_abs - matrix_abs(other), slack);
}

SweepOutcome finish(const Ensemble& ensemble, const Candidate& best, bool dominant) {
  return {nth_permutation(ensemble.size(), best.index), best.tn, dominant};
}

}  // namespace

SweepOutcome score_sweep_serial(const Ensemble& ensemble, const EngineConfig& config) {
  check_size(ensemble, config);
  const std::uint64_t count = factorial(ensemble.size());
  Candidate best;
  for (std::uint64_t index = 0; index < count; ++index) {
    Candidate c = evaluate(ensemble, index);
    if (best.tn < 0.0 || better(c, best)) best = c;
  }
  Matrix best_abs =
      matrix_abs(score_matrix(ensemble, nth_permutation(ensemble.size(), best.index)).matrix);
  const double slack = config.dominance_tol_scale * (1.0 + best.tn);
  bool dominant = true;
  for (std::uint64_t index = 0; index < count && dominant; ++index)
    dominant = dominates(ensemble, best_abs, index, slack);
  return finish(ensemble, best, dominant);
}

SweepOutcome score_sweep_parallel(const Ensemble& ensemble, const EngineConfig& config) {
  check_size(ensemble, config);
  const std::int64_t count = static_cast<std::int64_t>(factorial(ensemble.size()));
  Candidate best;
#pragma omp parallel
  {
    Candidate local;
#pragma omp for schedule(static) nowait
    for (std::int64_t index = 0; index < count; ++index) {
      Candidate c = evaluate(ensemble, static_cast<std::uint64_t>(index));
      if (local.tn < 0.0 || better(c, local)) local = c;
    }
#pragma omp critical(score_sweep_best)
    if (local.tn >= 0.0 && (best.tn < 0.0 || better(local, best))) best = local;
  }
  Matrix best_abs =
      matrix_abs(score_matrix(ensemble, nth_permutation(ensemble.size(), best.index)).matrix);
  const double slack = config.dominance_tol_scale * (1.0 + best.tn);
  std::atomic<bool> dominant{true};
#pragma omp parallel for schedule(static)
  for (std::int64_t index = 0; index < count; ++index) {
    if (!dominant.load(std::memory_order_relaxed)) continue;
    if (!dominates(ensemble, best_abs, static_cast<std::uint64_t>(index), slack))
      dominant.store(false, std::memory_order_relaxed);
  }
  return finish(ensemble, best, dominant.load());
}

SweepOutcome score_sweep(const Ensemble& ensemble, const EngineConfig& config) {
  return config.exec == Exec::serial ? score_sweep_serial(ensemble, config)
                                     : score_sweep_parallel(ensemble, config);
}

}  // namespace guesswork
