#include "guesswork/random.hpp"

#include <cmath>
#include <numbers>

namespace guesswork {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int n) {
  if (n <= 0) throw ValidationError("Rng::uniform_int: n must be positive");
  // Rejection keeps the draw unbiased.
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return static_cast<int>(v % un);
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; avoids std::normal_distribution so streams match everywhere.
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  double re = gaussian();
  double im = gaussian();
  return Complex(re, im);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step on the index-advanced state.
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix random_ginibre(int rows, int cols, Rng& rng) {
  if (rows <= 0 || cols <= 0) throw ValidationError("random_ginibre: empty shape");
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

Matrix random_hermitian(int dim, Rng& rng) {
  return hermitize(random_ginibre(dim, dim, rng));
}

UnitaryMatrix random_haar_unitary(int dim, Rng& rng) {
  Matrix g = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the phases by R's diagonal makes the distribution Haar.
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return UnitaryMatrix(q);
}

DensityMatrix random_density(int dim, int rank, Rng& rng) {
  if (rank <= 0 || rank > dim)
    throw ValidationError("random_density: rank " + std::to_string(rank) +
                          " outside 1.." + std::to_string(dim));
  Matrix g = random_ginibre(dim, rank, rng);
  Matrix m = g * g.adjoint();
  return DensityMatrix(m / m.trace().real());
}

Distribution random_distribution(int n, Rng& rng) {
  if (n <= 0) throw ValidationError("random_distribution: n must be positive");
  std::vector<double> w(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - rng.uniform());
    sum += v;
  }
  for (double& v : w) v /= sum;
  return Distribution(std::move(w));
}

Ensemble random_ensemble(int dim, int n, Rng& rng) {
  Distribution probs = random_distribution(n, rng);
  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) states.push_back(random_density(dim, 1 + rng.uniform_int(dim), rng));
  return Ensemble(std::move(states), std::move(probs));
}

Ensemble random_uniform_qubit_ensemble(int n, Rng& rng) {
  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) states.push_back(random_density(2, 1 + rng.uniform_int(2), rng));
  return Ensemble(std::move(states), Distribution(std::vector<double>(n, 1.0 / n)));
}

KrausChannel random_channel(int dim, int kraus_rank, Rng& rng) {
  if (kraus_rank <= 0) throw ValidationError("random_channel: rank must be positive");
  // Stack a Haar isometry column: V_l = blocks of a dim*rank x dim isometry.
  UnitaryMatrix u = random_haar_unitary(dim * kraus_rank, rng);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(kraus_rank));
  for (int l = 0; l < kraus_rank; ++l)
    kraus.push_back(u.matrix().block(l * dim, 0, dim, dim));
  return KrausChannel(std::move(kraus));
}

KrausChannel random_mixed_unitary_channel(int dim, int count, Rng& rng) {
  Distribution weights = random_distribution(count, rng);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    kraus.push_back(std::sqrt(weights(k)) * random_haar_unitary(dim, rng).matrix());
  return KrausChannel(std::move(kraus));
}

Povm random_povm(int dim, int count, Rng& rng) {
  if (count <= 0) throw ValidationError("random_povm: count must be positive");
  std::vector<Matrix> raw;
  raw.reserve(static_cast<std::size_t>(count));
  Matrix sum = Matrix::Zero(dim, dim);
  for (int y = 0; y < count; ++y) {
    Matrix g = random_ginibre(dim, dim, rng);
    raw.push_back(g * g.adjoint());
    sum += raw.back();
  }
  // Conjugating by sum^(-1/2) restores the identity resolution.
  EigenSystem es = spectral_decompose(sum);
  Matrix inv_sqrt = es.eigenvectors *
                    es.eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() *
                    es.eigenvectors.adjoint();
  std::vector<Matrix> elements;
  elements.reserve(raw.size());
  for (Matrix& e : raw) elements.push_back(hermitize(inv_sqrt * e * inv_sqrt));
  return Povm(std::move(elements));
}

UnitaryMatrix random_haar_unitary(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_haar_unitary(dim, rng);
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

KrausChannel random_channel(int dim, int kraus_rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_channel(dim, kraus_rank, rng);
}

Povm random_povm(int dim, int count, std::uint64_t seed) {
  Rng rng(seed);
  return random_povm(dim, count, rng);
}

Distribution make_majorizing(const Distribution& p, int transfers, Rng& rng) {
  std::vector<double> q = p.probs();
  const int n = static_cast<int>(q.size());
  if (n == 1) return Distribution(q);
  for (int step = 0; step < transfers; ++step) {
    int i = rng.uniform_int(n);
    int j = rng.uniform_int(n);
    if (q[static_cast<std::size_t>(i)] < q[static_cast<std::size_t>(j)]) std::swap(i, j);
    if (i == j) continue;
    // Move mass toward the larger entry; each such transfer majorizes.
    double delta = rng.uniform() * q[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i)] += delta;
    q[static_cast<std::size_t>(j)] -= delta;
  }
  return Distribution(std::move(q));
}

}  // namespace guesswork
