#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "guesswork/hermitian.hpp"

namespace guesswork {

// Ranking convention used throughout: a ranking sigma maps guess position t
// (0-based) to the item guessed at position t. The rank map tau = inverse()
// maps an item to its guess position. JSON carries 1-based images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int t) const { return images_[static_cast<std::size_t>(t)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // t -> images[n-1-t], the same guesses in reverse order.
  Permutation reversal() const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }
  bool operator!=(const Permutation& other) const { return images_ != other.images_; }
  // Lexicographic on images; gives the deterministic tie-break order.
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

 private:
  std::vector<int> images_;
};

std::uint64_t factorial(int n);
// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);
// The index-th permutation of {0..n-1} in lexicographic order, index < n!.
Permutation nth_permutation(int n, std::uint64_t index);

class Distribution {
 public:
  // Entries may dip to -1e-12 (clamped to zero); the sum must be 1 within 1e-9.
  explicit Distribution(std::vector<double> probs);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator()(int x) const { return probs_[static_cast<std::size_t>(x)]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// Expected number of guesses under the optimal (descending probability) order.
double classical_guesswork(const Distribution& p);

// Rank map for the optimal order: item -> 0-based guess position. Ties break
// by item index, so zero-probability items land at the worst ranks stably.
Permutation guessing_order(const Distribution& p);

// sum_y p_Y(y) * classical_guesswork(posterior at y) for the channel whose row
// p_{Y|X}(.|x). Rows must sum to 1 within 1e-9.
double conditional_guesswork(const Distribution& px, const Eigen::MatrixXd& channel_rows);

// q majorizes p: descending partial sums of q dominate those of p within 1e-12.
bool majorizes(const Distribution& q, const Distribution& p);

// Base-2 Shannon entropy.
double shannon_entropy(const Distribution& p);

// Distribution of f(X) for a total map f: {0..n-1} -> {0..m-1} given by image.
Distribution pushforward(const Distribution& p, const std::vector<int>& f, int image_size);

}  // namespace guesswork
