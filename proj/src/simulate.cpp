#include "guesswork/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "guesswork/random.hpp"

namespace guesswork {

namespace {

// First index whose cumulative weight exceeds u; the final slot absorbs
// rounding at the top.
int pick(const std::vector<double>& cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) return static_cast<int>(cdf.size()) - 1;
  return static_cast<int>(it - cdf.begin());
}

}  // namespace

GameStats simulate_game(const Ensemble& ensemble, const RankingPovm& povm, std::int64_t shots,
                        std::uint64_t seed, Exec exec) {
  if (shots <= 0) throw ValidationError("simulate_game: shots must be positive");
  if (povm.n() != ensemble.size())
    throw ValidationError("simulate_game: outcomes rank " + std::to_string(povm.n()) +
                          " items, ensemble has " + std::to_string(ensemble.size()));
  if (povm.dim() != ensemble.dim())
    throw ValidationError("simulate_game: POVM dimension " + std::to_string(povm.dim()) +
                          " does not match ensemble dimension " + std::to_string(ensemble.dim()));
  const int n = ensemble.size();
  const int m = povm.size();

  std::vector<double> prior_cdf(static_cast<std::size_t>(n));
  double acc = 0.0;
  for (int x = 0; x < n; ++x) {
    acc += ensemble.prob(x);
    prior_cdf[static_cast<std::size_t>(x)] = acc;
  }

  // guesses[x][k]: position of x in outcome k's ranking, 1-based.
  std::vector<std::vector<int>> guesses(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(m)));
  for (int k = 0; k < m; ++k) {
    Permutation rank = povm.outcome(k).inverse();
    for (int x = 0; x < n; ++x)
      guesses[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] = rank(x) + 1;
  }

  // Born row per label, clamped and renormalized; drift is at the POVM
  // validation scale and renormalizing keeps every row a sampler.
  std::vector<std::vector<double>> outcome_cdf(
      static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(m)));
  for (int x = 0; x < n; ++x) {
    double row_sum = 0.0;
    for (int k = 0; k < m; ++k) {
      double p = (povm.element(k) * ensemble.state(x).matrix()).trace().real();
      outcome_cdf[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] = std::max(0.0, p);
      row_sum += outcome_cdf[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)];
    }
    if (row_sum <= 0.0)
      throw ValidationError("simulate_game: outcome probabilities vanish for label " +
                            std::to_string(x));
    double cum = 0.0;
    for (int k = 0; k < m; ++k) {
      cum += outcome_cdf[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] / row_sum;
      outcome_cdf[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] = cum;
    }
  }

  // Integer accumulators and a per-shot derived stream make the totals exact
  // and independent of partitioning.
  std::int64_t sum_t = 0;
  std::int64_t sum_t2 = 0;
  std::vector<std::int64_t> hist(static_cast<std::size_t>(n), 0);

  auto play = [&](std::int64_t shot) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(shot)));
    int x = pick(prior_cdf, rng.uniform());
    int k = pick(outcome_cdf[static_cast<std::size_t>(x)], rng.uniform());
    return guesses[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)];
  };

  if (exec == Exec::serial) {
    for (std::int64_t shot = 0; shot < shots; ++shot) {
      int t = play(shot);
      sum_t += t;
      sum_t2 += static_cast<std::int64_t>(t) * t;
      ++hist[static_cast<std::size_t>(t - 1)];
    }
  } else {
#pragma omp parallel
    {
      std::vector<std::int64_t> local_hist(static_cast<std::size_t>(n), 0);
#pragma omp for schedule(static) reduction(+ : sum_t, sum_t2) nowait
      for (std::int64_t shot = 0; shot < shots; ++shot) {
        int t = play(shot);
        sum_t += t;
        sum_t2 += static_cast<std::int64_t>(t) * t;
        ++local_hist[static_cast<std::size_t>(t - 1)];
      }
#pragma omp critical(simulate_game_hist)
      for (int t = 0; t < n; ++t) hist[static_cast<std::size_t>(t)] += local_hist[static_cast<std::size_t>(t)];
    }
  }

  GameStats stats;
  stats.shots = shots;
  stats.histogram = std::move(hist);
  stats.mean_guesses = static_cast<double>(sum_t) / static_cast<double>(shots);
  if (shots > 1) {
    double variance = (static_cast<double>(sum_t2) -
                       static_cast<double>(sum_t) * static_cast<double>(sum_t) / static_cast<double>(shots)) /
                      static_cast<double>(shots - 1);
    stats.std_error = std::sqrt(std::max(0.0, variance) / static_cast<double>(shots));
  }
  return stats;
}

}  // namespace guesswork
