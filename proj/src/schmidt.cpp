#include "posmap/schmidt.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace posmap {

SchmidtForm schmidt_decompose(const Vector& x, Index m, Index n, double tol) {
  if (x.size() != m * n)
    throw Error(Errc::DimensionMismatch, "vector length must be m * n");
  if (x.norm() == 0.0) throw Error(Errc::ZeroVector, "cannot decompose the zero vector");

  // x = sum_ik X(i,k) e_i (x) f_k; the SVD X = U S V^dag gives
  // x = sum_s s_s U.col(s) (x) conj(V.col(s)).
  Matrix X(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index k = 0; k < n; ++k) X(i, k) = x(i * n + k);

  Eigen::JacobiSVD<Matrix> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector s = svd.singularValues();
  Index r = 0;
  while (r < s.size() && s(r) > tol * s(0)) ++r;

  SchmidtForm out;
  out.rank = r;
  out.coefficients = s.head(r);
  out.left_vectors = svd.matrixU().leftCols(r);
  out.right_vectors = svd.matrixV().leftCols(r).conjugate();
  return out;
}

Vector purify(const Matrix& rho, double tol) {
  if (!is_psd(rho, tol)) throw Error(Errc::NotPsd, "input is not PSD");
  const Index m = rho.rows();
  const EigResult eig = hermitian_eig(rho);
  const double mu_max = eig.eigenvalues(0);
  if (mu_max <= 0.0) throw Error(Errc::ZeroMatrix, "cannot purify the zero matrix");

  Vector x = Vector::Zero(m * m);
  for (Index i = 0; i < m && eig.eigenvalues(i) > tol * mu_max; ++i) {
    const double w = std::sqrt(std::max(eig.eigenvalues(i), 0.0));
    const Vector psi = eig.eigenvectors.col(i);
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b) x(a * m + b) += w * psi(a) * psi(b);
  }
  return x;
}

}  // namespace posmap
