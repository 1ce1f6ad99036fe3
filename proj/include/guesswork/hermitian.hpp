#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace guesswork {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Thrown when a domain invariant fails (non-Hermitian input, bad trace, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a request exceeds a configured size limit.
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// Hermiticity is checked entrywise against 1e-10 scaled by the largest entry.
double hermiticity_tolerance(const Matrix& a);
bool is_hermitian(const Matrix& a, double tolerance);
bool is_hermitian(const Matrix& a);
void require_hermitian(const Matrix& a, const char* what);

// (A + A^dagger) / 2. Inputs are symmetrized before any decomposition so
// round-off drifts cannot leak into eigenvalues.
Matrix hermitize(const Matrix& a);

struct EigenSystem {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // column i pairs with eigenvalues[i], orthonormal
  Matrix reconstruct() const;
};

// Requires a Hermitian input (within hermiticity_tolerance) and symmetrizes
// it before decomposing.
EigenSystem spectral_decompose(const Matrix& a);

// |A| = V |diag| V^dagger from one decomposition of A.
Matrix matrix_abs(const Matrix& a);

// Sum of |eigenvalue_i|.
double trace_norm(const Matrix& a);

// Spectral projectors onto the eigenspaces with eigenvalue > eps_zero,
// < -eps_zero, and the remainder. The three parts sum to the identity.
struct ProjectorParts {
  Matrix positive, negative, null;
};
ProjectorParts projector_parts(const Matrix& a, double eps_zero);

// Default threshold separating zero eigenvalues from signed ones,
// 1e-9 scaled by the trace norm.
double default_sign_tolerance(double trace_norm_value);

double min_eigenvalue(const Matrix& a);
bool is_psd(const Matrix& a, double tolerance);

// A >= B in the Loewner order: A - B is positive semidefinite within tolerance.
bool loewner_geq(const Matrix& a, const Matrix& b, double tolerance);

}  // namespace guesswork
