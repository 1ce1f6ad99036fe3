#include "guesswork/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace guesswork {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw ValidationError(std::string(what) + ": expected a nonempty square matrix, got " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

}  // namespace

double hermiticity_tolerance(const Matrix& a) {
  double largest = a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
  return 1e-10 * std::max(1.0, largest);
}

bool is_hermitian(const Matrix& a, double tolerance) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_hermitian(const Matrix& a) { return is_hermitian(a, hermiticity_tolerance(a)); }

void require_hermitian(const Matrix& a, const char* what) {
  require_square(a, what);
  if (!is_hermitian(a))
    throw ValidationError(std::string(what) + ": matrix is not Hermitian within tolerance " +
                          std::to_string(hermiticity_tolerance(a)));
}

Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

Matrix EigenSystem::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

EigenSystem spectral_decompose(const Matrix& a) {
  require_hermitian(a, "spectral_decompose");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(a));
  if (solver.info() != Eigen::Success)
    throw ValidationError("spectral_decompose: eigensolver failed to converge");
  const long dim = a.rows();
  EigenSystem out;
  out.eigenvalues = RealVector(dim);
  out.eigenvectors = Matrix(dim, dim);
  // Solver returns ascending order; flip to descending.
  for (long i = 0; i < dim; ++i) {
    out.eigenvalues(i) = solver.eigenvalues()(dim - 1 - i);
    out.eigenvectors.col(i) = solver.eigenvectors().col(dim - 1 - i);
  }
  return out;
}

Matrix matrix_abs(const Matrix& a) {
  EigenSystem es = spectral_decompose(a);
  return es.eigenvectors * es.eigenvalues.cwiseAbs().asDiagonal() * es.eigenvectors.adjoint();
}

double trace_norm(const Matrix& a) {
  return spectral_decompose(a).eigenvalues.cwiseAbs().sum();
}

double default_sign_tolerance(double trace_norm_value) {
  return 1e-9 * std::max(1.0, trace_norm_value);
}

ProjectorParts projector_parts(const Matrix& a, double eps_zero) {
  EigenSystem es = spectral_decompose(a);
  const long dim = a.rows();
  ProjectorParts parts{Matrix::Zero(dim, dim), Matrix::Zero(dim, dim), Matrix::Zero(dim, dim)};
  for (long i = 0; i < dim; ++i) {
    Matrix outer = es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
    if (es.eigenvalues(i) > eps_zero)
      parts.positive += outer;
    else if (es.eigenvalues(i) < -eps_zero)
      parts.negative += outer;
    else
      parts.null += outer;
  }
  return parts;
}

double min_eigenvalue(const Matrix& a) {
  EigenSystem es = spectral_decompose(a);
  return es.eigenvalues(a.rows() - 1);
}

bool is_psd(const Matrix& a, double tolerance) { return min_eigenvalue(a) >= -tolerance; }

bool loewner_geq(const Matrix& a, const Matrix& b, double tolerance) {
  require_square(a, "loewner_geq");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("loewner_geq: dimension mismatch " + std::to_string(a.rows()) + " vs " +
                          std::to_string(b.rows()));
  return is_psd(a - b, tolerance);
}

}  // namespace guesswork
