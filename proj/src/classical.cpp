#include "guesswork/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "guesswork/config.hpp"

namespace guesswork {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) throw ValidationError("Permutation: empty image list");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw ValidationError("Permutation: images are not a bijection on {0.." +
                            std::to_string(n - 1) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int t = 0; t < size(); ++t) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(t)])] = t;
  return Permutation(std::move(inv));
}

Permutation Permutation::reversal() const {
  std::vector<int> rev(images_.rbegin(), images_.rend());
  return Permutation(std::move(rev));
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw SizeError("factorial: n out of range: " + std::to_string(n));
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation nth_permutation(int n, std::uint64_t index) {
  if (index >= factorial(n))
    throw ValidationError("nth_permutation: index " + std::to_string(index) + " >= " +
                          std::to_string(n) + "!");
  // Factorial-number-system decode of the lexicographic index.
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  std::uint64_t rem = index;
  for (int t = n - 1; t >= 0; --t) {
    std::uint64_t block = factorial(t);
    std::size_t pick = static_cast<std::size_t>(rem / block);
    rem %= block;
    images.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(std::move(images));
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("Distribution: empty probability list");
  double sum = 0.0;
  for (double& p : probs_) {
    if (p < -tol::prob_negative)
      throw ValidationError("Distribution: negative probability " + std::to_string(p));
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::prob_sum)
    throw ValidationError("Distribution: probabilities sum to " + std::to_string(sum) +
                          ", expected 1 within 1e-9");
}

namespace {

// Item indices sorted by descending probability, ties by index.
std::vector<int> descending_items(const std::vector<double>& probs) {
  std::vector<int> items(probs.size());
  std::iota(items.begin(), items.end(), 0);
  std::stable_sort(items.begin(), items.end(), [&](int a, int b) {
    return probs[static_cast<std::size_t>(a)] > probs[static_cast<std::size_t>(b)];
  });
  return items;
}

}  // namespace

double classical_guesswork(const Distribution& p) {
  std::vector<double> sorted = p.probs();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double total = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) total += static_cast<double>(i + 1) * sorted[i];
  return total;
}

Permutation guessing_order(const Distribution& p) {
  std::vector<int> items = descending_items(p.probs());
  std::vector<int> rank(items.size());
  for (int t = 0; t < static_cast<int>(items.size()); ++t)
    rank[static_cast<std::size_t>(items[static_cast<std::size_t>(t)])] = t;
  return Permutation(std::move(rank));
}

double conditional_guesswork(const Distribution& px, const Eigen::MatrixXd& channel_rows) {
  const int n = px.size();
  if (channel_rows.rows() != n)
    throw ValidationError("conditional_guesswork: channel has " +
                          std::to_string(channel_rows.rows()) + " rows for " + std::to_string(n) +
                          " inputs");
  const int m = static_cast<int>(channel_rows.cols());
  for (int x = 0; x < n; ++x) {
    double row_sum = channel_rows.row(x).sum();
    if (std::abs(row_sum - 1.0) > tol::prob_sum)
      throw ValidationError("conditional_guesswork: row " + std::to_string(x) + " sums to " +
                            std::to_string(row_sum));
  }
  // Work on joint columns directly; posteriors are never materialized, so
  // zero-probability outcomes contribute zero without a special case.
  double total = 0.0;
  std::vector<double> column(static_cast<std::size_t>(n));
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < n; ++x)
      column[static_cast<std::size_t>(x)] = std::max(0.0, px(x) * channel_rows(x, y));
    std::sort(column.begin(), column.end(), std::greater<>());
    for (int i = 0; i < n; ++i) total += static_cast<double>(i + 1) * column[static_cast<std::size_t>(i)];
  }
  return total;
}

bool majorizes(const Distribution& q, const Distribution& p) {
  if (q.size() != p.size())
    throw ValidationError("majorizes: size mismatch " + std::to_string(q.size()) + " vs " +
                          std::to_string(p.size()));
  std::vector<double> qs = q.probs();
  std::vector<double> ps = p.probs();
  std::sort(qs.begin(), qs.end(), std::greater<>());
  std::sort(ps.begin(), ps.end(), std::greater<>());
  double qsum = 0.0, psum = 0.0;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    qsum += qs[k];
    psum += ps[k];
    if (qsum < psum - tol::majorize) return false;
  }
  return true;
}

double shannon_entropy(const Distribution& p) {
  double h = 0.0;
  for (double v : p.probs())
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

Distribution pushforward(const Distribution& p, const std::vector<int>& f, int image_size) {
  if (static_cast<int>(f.size()) != p.size())
    throw ValidationError("pushforward: map covers " + std::to_string(f.size()) + " of " +
                          std::to_string(p.size()) + " labels");
  std::vector<double> out(static_cast<std::size_t>(image_size), 0.0);
  for (int x = 0; x < p.size(); ++x) {
    int z = f[static_cast<std::size_t>(x)];
    if (z < 0 || z >= image_size)
      throw ValidationError("pushforward: image " + std::to_string(z) + " out of range");
    out[static_cast<std::size_t>(z)] += p(x);
  }
  return Distribution(std::move(out));
}

}  // namespace guesswork
