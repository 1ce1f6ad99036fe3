#pragma once

#include <utility>
#include <vector>

#include "guesswork/classical.hpp"
#include "guesswork/hermitian.hpp"

namespace guesswork {

// Hermitian, PSD within 1e-9, unit trace within 1e-9. Stored symmetrized.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

// Finite labelled ensemble {p(x), rho_x}. Zero-probability states are allowed.
class Ensemble {
 public:
  Ensemble(std::vector<DensityMatrix> states, Distribution probs);

  int size() const { return static_cast<int>(states_.size()); }
  int dim() const { return states_.front().dim(); }
  const DensityMatrix& state(int x) const { return states_[static_cast<std::size_t>(x)]; }
  double prob(int x) const { return probs_(x); }
  const Distribution& probs() const { return probs_; }

  // sum_x p(x) rho_x.
  DensityMatrix average_state() const;

 private:
  std::vector<DensityMatrix> states_;
  Distribution probs_;
};

// Elements PSD within 1e-8, summing to the identity within 1e-8.
class Povm {
 public:
  explicit Povm(std::vector<Matrix> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  int dim() const { return static_cast<int>(elements_.front().rows()); }
  const Matrix& element(int y) const { return elements_[static_cast<std::size_t>(y)]; }
  const std::vector<Matrix>& elements() const { return elements_; }

 private:
  std::vector<Matrix> elements_;
};

// POVM whose outcomes are rankings of {0..n-1}. Only the stored outcomes are
// nonzero; their elements must still sum to the identity.
class RankingPovm {
 public:
  RankingPovm(int n, std::vector<std::pair<Permutation, Matrix>> entries);

  int n() const { return n_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int dim() const { return static_cast<int>(entries_.front().second.rows()); }
  const Permutation& outcome(int k) const { return entries_[static_cast<std::size_t>(k)].first; }
  const Matrix& element(int k) const { return entries_[static_cast<std::size_t>(k)].second; }

 private:
  int n_;
  std::vector<std::pair<Permutation, Matrix>> entries_;
};

Povm as_plain_povm(const RankingPovm& e);

// U U^dagger = I within 1e-9.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix u);

  int dim() const { return static_cast<int>(u_.rows()); }
  const Matrix& matrix() const { return u_; }

 private:
  Matrix u_;
};

// Kraus operators V_l: dim_in -> dim_out with sum V^dagger V = I within 1e-8.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> kraus);
  static KrausChannel from_unitary(const UnitaryMatrix& u);

  int size() const { return static_cast<int>(kraus_.size()); }
  int dim_in() const { return static_cast<int>(kraus_.front().cols()); }
  int dim_out() const { return static_cast<int>(kraus_.front().rows()); }
  const Matrix& kraus(int l) const { return kraus_[static_cast<std::size_t>(l)]; }

 private:
  std::vector<Matrix> kraus_;
};

// sum_l V_l rho V_l^dagger.
DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);
Ensemble apply_channel(const KrausChannel& ch, const Ensemble& ensemble);
Ensemble conjugate(const UnitaryMatrix& u, const Ensemble& ensemble);

// Heisenberg-picture pullback sum_l V^dagger E_y V, a valid POVM on dim_in.
Povm pullback(const KrausChannel& ch, const Povm& povm);
RankingPovm pullback(const KrausChannel& ch, const RankingPovm& povm);

// first after second.
KrausChannel compose(const KrausChannel& first, const KrausChannel& second);

}  // namespace guesswork
