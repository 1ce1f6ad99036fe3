#pragma once

#include <cstdint>
#include <vector>

#include "guesswork/config.hpp"
#include "guesswork/quantum.hpp"

namespace guesswork {

struct GameStats {
  std::int64_t shots = 0;
  double mean_guesses = 0.0;
  double std_error = 0.0;
  // histogram[t] counts shots resolved at guess position t (0-based).
  std::vector<std::int64_t> histogram;
};

// Plays the guessing game: each shot draws a label from the prior, samples a
// measurement outcome by the Born rule, and walks that outcome's ranking
// until the label is hit. Shot i draws from mix_seed(seed, i) and the
// accumulators are integers, so the statistics are independent of Exec and
// of how shots are partitioned.
GameStats simulate_game(const Ensemble& ensemble, const RankingPovm& povm, std::int64_t shots,
                        std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace guesswork
