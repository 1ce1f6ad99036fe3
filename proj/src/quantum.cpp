#include "guesswork/quantum.hpp"

#include <cmath>

#include "guesswork/config.hpp"

namespace guesswork {

DensityMatrix::DensityMatrix(Matrix m) {
  require_hermitian(m, "DensityMatrix");
  m_ = hermitize(m);
  double trace = m_.trace().real();
  if (std::abs(trace - 1.0) > tol::density_trace)
    throw ValidationError("DensityMatrix: trace is " + std::to_string(trace) +
                          ", expected 1 within 1e-9");
  if (!is_psd(m_, tol::density_psd))
    throw ValidationError("DensityMatrix: smallest eigenvalue " +
                          std::to_string(min_eigenvalue(m_)) + " below -1e-9");
}

Ensemble::Ensemble(std::vector<DensityMatrix> states, Distribution probs)
    : states_(std::move(states)), probs_(std::move(probs)) {
  if (states_.empty()) throw ValidationError("Ensemble: no states");
  if (static_cast<int>(states_.size()) != probs_.size())
    throw ValidationError("Ensemble: " + std::to_string(states_.size()) + " states but " +
                          std::to_string(probs_.size()) + " probabilities");
  for (const DensityMatrix& s : states_)
    if (s.dim() != dim())
      throw ValidationError("Ensemble: states mix dimensions " + std::to_string(dim()) + " and " +
                            std::to_string(s.dim()));
}

DensityMatrix Ensemble::average_state() const {
  Matrix avg = Matrix::Zero(dim(), dim());
  for (int x = 0; x < size(); ++x) avg += prob(x) * state(x).matrix();
  return DensityMatrix(avg);
}

namespace {

void validate_povm_elements(const std::vector<Matrix>& elements, const char* what) {
  if (elements.empty()) throw ValidationError(std::string(what) + ": no elements");
  const long dim = elements.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& e : elements) {
    require_hermitian(e, what);
    if (e.rows() != dim)
      throw ValidationError(std::string(what) + ": elements mix dimensions");
    if (!is_psd(e, tol::povm_psd))
      throw ValidationError(std::string(what) + ": element has eigenvalue " +
                            std::to_string(min_eigenvalue(e)) + " below -1e-8");
    sum += e;
  }
  double defect = (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (defect > tol::povm_sum)
    throw ValidationError(std::string(what) + ": elements sum to identity with defect " +
                          std::to_string(defect));
}

}  // namespace

Povm::Povm(std::vector<Matrix> elements) : elements_(std::move(elements)) {
  validate_povm_elements(elements_, "Povm");
}

RankingPovm::RankingPovm(int n, std::vector<std::pair<Permutation, Matrix>> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("RankingPovm: no outcomes");
  std::vector<Matrix> elements;
  elements.reserve(entries_.size());
  for (const auto& [sigma, element] : entries_) {
    if (sigma.size() != n_)
      throw ValidationError("RankingPovm: outcome ranks " + std::to_string(sigma.size()) +
                            " items, ensemble has " + std::to_string(n_));
    elements.push_back(element);
  }
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i].first == entries_[j].first)
        throw ValidationError("RankingPovm: duplicate outcome ranking");
  validate_povm_elements(elements, "RankingPovm");
}

Povm as_plain_povm(const RankingPovm& e) {
  std::vector<Matrix> elements;
  elements.reserve(static_cast<std::size_t>(e.size()));
  for (int k = 0; k < e.size(); ++k) elements.push_back(e.element(k));
  return Povm(std::move(elements));
}

UnitaryMatrix::UnitaryMatrix(Matrix u) : u_(std::move(u)) {
  if (u_.rows() == 0 || u_.rows() != u_.cols())
    throw ValidationError("UnitaryMatrix: expected a nonempty square matrix");
  double defect =
      (u_ * u_.adjoint() - Matrix::Identity(u_.rows(), u_.rows())).cwiseAbs().maxCoeff();
  if (defect > tol::unitary)
    throw ValidationError("UnitaryMatrix: U U^dagger deviates from identity by " +
                          std::to_string(defect));
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ValidationError("KrausChannel: no Kraus operators");
  const long din = kraus_.front().cols();
  const long dout = kraus_.front().rows();
  if (din == 0 || dout == 0) throw ValidationError("KrausChannel: empty Kraus operator");
  Matrix sum = Matrix::Zero(din, din);
  for (const Matrix& v : kraus_) {
    if (v.cols() != din || v.rows() != dout)
      throw ValidationError("KrausChannel: Kraus operators mix shapes");
    sum += v.adjoint() * v;
  }
  double defect = (sum - Matrix::Identity(din, din)).cwiseAbs().maxCoeff();
  if (defect > tol::kraus_sum)
    throw ValidationError("KrausChannel: sum V^dagger V deviates from identity by " +
                          std::to_string(defect));
}

KrausChannel KrausChannel::from_unitary(const UnitaryMatrix& u) {
  return KrausChannel({u.matrix()});
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim_in() != rho.dim())
    throw ValidationError("apply_channel: channel expects dimension " +
                          std::to_string(ch.dim_in()) + ", state has " +
                          std::to_string(rho.dim()));
  Matrix out = Matrix::Zero(ch.dim_out(), ch.dim_out());
  for (int l = 0; l < ch.size(); ++l) out += ch.kraus(l) * rho.matrix() * ch.kraus(l).adjoint();
  return DensityMatrix(out);
}

Ensemble apply_channel(const KrausChannel& ch, const Ensemble& ensemble) {
  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(ensemble.size()));
  for (int x = 0; x < ensemble.size(); ++x) states.push_back(apply_channel(ch, ensemble.state(x)));
  return Ensemble(std::move(states), ensemble.probs());
}

Ensemble conjugate(const UnitaryMatrix& u, const Ensemble& ensemble) {
  return apply_channel(KrausChannel::from_unitary(u), ensemble);
}

namespace {

Matrix pullback_element(const KrausChannel& ch, const Matrix& element) {
  Matrix out = Matrix::Zero(ch.dim_in(), ch.dim_in());
  for (int l = 0; l < ch.size(); ++l) out += ch.kraus(l).adjoint() * element * ch.kraus(l);
  return hermitize(out);
}

}  // namespace

Povm pullback(const KrausChannel& ch, const Povm& povm) {
  if (ch.dim_out() != povm.dim())
    throw ValidationError("pullback: POVM lives on dimension " + std::to_string(povm.dim()) +
                          ", channel outputs " + std::to_string(ch.dim_out()));
  std::vector<Matrix> elements;
  elements.reserve(static_cast<std::size_t>(povm.size()));
  for (int y = 0; y < povm.size(); ++y) elements.push_back(pullback_element(ch, povm.element(y)));
  return Povm(std::move(elements));
}

RankingPovm pullback(const KrausChannel& ch, const RankingPovm& povm) {
  if (ch.dim_out() != povm.dim())
    throw ValidationError("pullback: POVM lives on dimension " + std::to_string(povm.dim()) +
                          ", channel outputs " + std::to_string(ch.dim_out()));
  std::vector<std::pair<Permutation, Matrix>> entries;
  entries.reserve(static_cast<std::size_t>(povm.size()));
  for (int k = 0; k < povm.size(); ++k)
    entries.emplace_back(povm.outcome(k), pullback_element(ch, povm.element(k)));
  return RankingPovm(povm.n(), std::move(entries));
}

KrausChannel compose(const KrausChannel& first, const KrausChannel& second) {
  if (first.dim_in() != second.dim_out())
    throw ValidationError("compose: inner dimensions disagree, " +
                          std::to_string(first.dim_in()) + " vs " +
                          std::to_string(second.dim_out()));
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(first.size() * second.size()));
  for (int i = 0; i < first.size(); ++i)
    for (int j = 0; j < second.size(); ++j) kraus.push_back(first.kraus(i) * second.kraus(j));
  return KrausChannel(std::move(kraus));
}

}  // namespace guesswork
