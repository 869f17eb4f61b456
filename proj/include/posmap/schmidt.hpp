#pragma once

#include "posmap/numcore.hpp"

namespace posmap {

// Schmidt form of a bipartite vector x in C^m (x) C^n:
// x = sum_i coefficients[i] * left_vectors.col(i) (x) right_vectors.col(i),
// coefficients positive and descending.
struct SchmidtForm {
  RealVector coefficients;
  Matrix left_vectors;   // m x rank, orthonormal columns
  Matrix right_vectors;  // n x rank, orthonormal columns
  Index rank;
};

// Coefficients below tol * (largest coefficient) are dropped from the rank.
SchmidtForm schmidt_decompose(const Vector& x, Index m, Index n, double tol);

// Canonical purification of a PSD matrix rho in M_m: the vector
// sum_i sqrt(mu_i) |psi_i>|psi_i> in C^m (x) C^m over eigenpairs with
// mu_i > tol * mu_max, so that tr_2 |x><x| = rho.
Vector purify(const Matrix& rho, double tol);

}  // namespace posmap
