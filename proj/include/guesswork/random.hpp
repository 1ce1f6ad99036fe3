#pragma once

#include <cstdint>
#include <random>

#include "guesswork/quantum.hpp"

namespace guesswork {

// Deterministic seeded generator. Gaussians come from a hand-rolled
// Box-Muller pair so streams are bit-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  // Uniform on {0..n-1}.
  int uniform_int(int n);
  double gaussian();
  // Real and imaginary parts independent N(0, 1).
  Complex complex_gaussian();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stateless sub-seed derivation. Trials and shots use mix_seed(seed, index)
// so results are independent of how work is partitioned.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Ginibre matrix with independent complex gaussian entries.
Matrix random_ginibre(int rows, int cols, Rng& rng);
Matrix random_hermitian(int dim, Rng& rng);

// QR-based Haar unitary with the phase convention fixed by a positive
// diagonal of R.
UnitaryMatrix random_haar_unitary(int dim, Rng& rng);

// Normalized G G^dagger with G of shape dim x rank; rank = dim gives a
// generic full-rank state, rank = 1 a pure state.
DensityMatrix random_density(int dim, int rank, Rng& rng);

// Uniform on the simplex (normalized exponentials).
Distribution random_distribution(int n, Rng& rng);

Ensemble random_ensemble(int dim, int n, Rng& rng);
// Uniform priors, generic qubit states.
Ensemble random_uniform_qubit_ensemble(int n, Rng& rng);

// Isometry-based random channel with the given Kraus rank.
KrausChannel random_channel(int dim, int kraus_rank, Rng& rng);
// Mixture of Haar unitaries; unital by construction.
KrausChannel random_mixed_unitary_channel(int dim, int count, Rng& rng);

// count elements A_y^dagger A_y normalized by the inverse square root of
// their sum.
Povm random_povm(int dim, int count, Rng& rng);

// Seed-taking conveniences.
UnitaryMatrix random_haar_unitary(int dim, std::uint64_t seed);
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);
KrausChannel random_channel(int dim, int kraus_rank, std::uint64_t seed);
Povm random_povm(int dim, int count, std::uint64_t seed);

// One reverse transfer per step moves mass from a poorer entry to a richer
// one, so the result majorizes p.
Distribution make_majorizing(const Distribution& p, int transfers, Rng& rng);

}  // namespace guesswork
