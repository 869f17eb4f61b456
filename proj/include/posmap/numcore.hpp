#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "posmap/error.hpp"

namespace posmap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;
using Rng = std::mt19937_64;

// Conjugate transpose.
Matrix adjoint(const Matrix& M);

// Kronecker product with the first argument as the major (block-row) factor:
// (A (x) B)[(i,k),(j,l)] = A(i,j) * B(k,l).
Matrix kron(const Matrix& A, const Matrix& B);

// Matrix unit E_ij in M_{rows x cols}.
Matrix matrix_unit(Index i, Index j, Index rows, Index cols);
inline Matrix matrix_unit(Index i, Index j, Index dim) { return matrix_unit(i, j, dim, dim); }

struct EigResult {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // orthonormal columns, same order
};

// Spectral decomposition of a Hermitian matrix. The input is symmetrized to
// (H + H^dag)/2 before factorization; inputs farther than 1e-8 (relative
// Frobenius) from Hermitian are rejected.
EigResult hermitian_eig(const Matrix& H);

// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix& H);

// lambda_min(H) >= -tol * max(1, ||H||_F).
bool is_psd(const Matrix& H, double tol);

// Unit vector drawn from the rotation-invariant distribution (iid complex
// Gaussian components, then normalized).
Vector random_unit_vector(Index dim, Rng& rng);

// Haar-ish random unitary (QR of a Gaussian matrix); used by tests and the
// unitary-invariance checks.
Matrix random_unitary(Index dim, Rng& rng);

// Relative Frobenius distance from Hermitian.
double hermiticity_defect(const Matrix& M);

bool is_unitary(const Matrix& U, double tol);

}  // namespace posmap
