#include "posmap/block_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace posmap {

void BlockMatrix::check_first(Index i, Index j) const {
  if (i < 0 || i >= m_ || j < 0 || j >= m_)
    throw Error(Errc::IndexOutOfRange, "block index out of range");
}

Matrix BlockMatrix::block(Index i, Index j) const {
  check_first(i, j);
  return full_.block(i * n_, j * n_, n_, n_);
}

Matrix BlockMatrix::tilde_block(Index k, Index l) const {
  if (k < 0 || k >= n_ || l < 0 || l >= n_)
    throw Error(Errc::IndexOutOfRange, "tilde block index out of range");
  Matrix out(m_, m_);
  for (Index i = 0; i < m_; ++i)
    for (Index j = 0; j < m_; ++j) out(i, j) = full_(i * n_ + k, j * n_ + l);
  return out;
}

void BlockMatrix::set_block(Index i, Index j, const Matrix& B) {
  check_first(i, j);
  if (B.rows() != n_ || B.cols() != n_)
    throw Error(Errc::ShapeMismatch, "block must be n x n");
  full_.block(i * n_, j * n_, n_, n_) = B;
}

Matrix partial_trace(const BlockMatrix& A, int side) {
  const Index m = A.m(), n = A.n();
  if (side == 2) {
    Matrix out(m, m);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j) out(i, j) = A.block(i, j).trace();
    return out;
  }
  if (side == 1) {
    Matrix out = Matrix::Zero(n, n);
    for (Index i = 0; i < m; ++i) out += A.block(i, i);
    return out;
  }
  throw Error(Errc::IndexOutOfRange, "side must be 1 or 2");
}

BlockMatrix partial_transpose(const BlockMatrix& A, int side) {
  const Index m = A.m(), n = A.n();
  BlockMatrix out(m, n);
  if (side == 1) {
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j) out.set_block(j, i, A.block(i, j));
    return out;
  }
  if (side == 2) {
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j) out.set_block(i, j, A.block(i, j).transpose());
    return out;
  }
  throw Error(Errc::IndexOutOfRange, "side must be 1 or 2");
}

BlockMatrix rotate_first(const BlockMatrix& A, const Matrix& U) {
  if (U.rows() != A.m() || U.cols() != A.m())
    throw Error(Errc::ShapeMismatch, "U must be m x m");
  if (!is_unitary(U, 1e-8)) throw Error(Errc::NotUnitary, "U is not unitary within 1e-8");
  const Matrix W = kron(U, Matrix::Identity(A.n(), A.n()));
  return BlockMatrix(A.m(), A.n(), W * A.full() * W.adjoint());
}

const char* ppt_tag_name(PptTag tag) {
  switch (tag) {
    case PptTag::PositivePpt: return "POSITIVE_PPT";
    case PptTag::PositiveNppt: return "POSITIVE_NPPT";
    case PptTag::NotPositive: return "NOT_POSITIVE";
  }
  return "Unknown";
}

PptClass ppt_classify(const BlockMatrix& A, double tol) {
  PptClass out;
  out.min_eig = min_eigenvalue(A.full());
  out.min_eig_pt = min_eigenvalue(partial_transpose(A, 2).full());
  const double cut = -tol * std::max(1.0, A.full().norm());
  if (out.min_eig < cut)
    out.tag = PptTag::NotPositive;
  else if (out.min_eig_pt < cut)
    out.tag = PptTag::PositiveNppt;
  else
    out.tag = PptTag::PositivePpt;
  return out;
}

CompressResult compress_support(const BlockMatrix& A, double tol) {
  if (!is_psd(A.full(), tol)) throw Error(Errc::NotPsd, "input is not PSD");
  const Index m = A.m(), n = A.n();
  const EigResult eig = hermitian_eig(partial_trace(A, 2));
  const double lmax = eig.eigenvalues.size() > 0 ? eig.eigenvalues(0) : 0.0;
  Index r = 0;
  while (r < m && eig.eigenvalues(r) > tol * lmax) ++r;
  if (r == 0) throw Error(Errc::ZeroMatrix, "reduced matrix has no support");
  const Matrix V = eig.eigenvectors.leftCols(r);
  const Matrix W = kron(V, Matrix::Identity(n, n));
  return CompressResult{BlockMatrix(r, n, W.adjoint() * A.full() * W), V};
}

}  // namespace posmap
