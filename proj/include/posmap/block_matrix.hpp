#pragma once

#include <utility>

#include "posmap/numcore.hpp"

namespace posmap {

// Element of M_m (x) M_n: an m x m array of n x n blocks, stored as the full
// (m n) x (m n) matrix in the basis e_i (x) f_k with the first-factor index
// major. block(i,j) is the contiguous submatrix rows [i n,(i+1) n), cols
// [j n,(j+1) n), so A = sum_ij E_ij (x) block(i,j).
class BlockMatrix {
 public:
  BlockMatrix(Index m, Index n) : m_(m), n_(n), full_(Matrix::Zero(m * n, m * n)) {}

  BlockMatrix(Index m, Index n, Matrix full) : m_(m), n_(n), full_(std::move(full)) {
    if (full_.rows() != m_ * n_ || full_.cols() != m_ * n_)
      throw Error(Errc::ShapeMismatch, "full matrix must be (m n) x (m n)");
  }

  Index m() const { return m_; }
  Index n() const { return n_; }
  const Matrix& full() const { return full_; }
  Matrix& full() { return full_; }

  // A_ij, the (i,j) block in the E_ij (x) A_ij expansion.
  Matrix block(Index i, Index j) const;

  // The dual expansion A = sum_kl tilde(A)_kl (x) E_kl:
  // tilde_block(k,l)(i,j) == block(i,j)(k,l).
  Matrix tilde_block(Index k, Index l) const;

  void set_block(Index i, Index j, const Matrix& B);

 private:
  void check_first(Index i, Index j) const;

  Index m_, n_;
  Matrix full_;
};

// side = 2 traces out the second factor: m x m matrix [tr A_ij].
// side = 1 traces out the first factor:  n x n matrix sum_i A_ii.
Matrix partial_trace(const BlockMatrix& A, int side);

// side = 1: sum E_ij (x) A_ij -> sum E_ji (x) A_ij.
// side = 2: transposes every block. Composing both sides is the full transpose.
BlockMatrix partial_transpose(const BlockMatrix& A, int side);

// (U (x) I_n) A (U^dag (x) I_n); tilde blocks transform as U tilde(A)_kl U^dag.
BlockMatrix rotate_first(const BlockMatrix& A, const Matrix& U);

enum class PptTag { PositivePpt, PositiveNppt, NotPositive };

const char* ppt_tag_name(PptTag tag);

struct PptClass {
  PptTag tag;
  double min_eig;     // lambda_min(A)
  double min_eig_pt;  // lambda_min(A^{t2})
};

// Classifies a Hermitian block matrix against -tol * max(1, ||A||_F). Only
// the t2 transpose is examined: for Hermitian A the two partial transposes
// are mutual transposes and share their spectrum (asserted in tests).
PptClass ppt_classify(const BlockMatrix& A, double tol);

struct CompressResult {
  BlockMatrix compressed;  // A viewed in M_r (x) M_n
  Matrix isometry;         // V, m x r with V^dag V = I_r
};

// Restricts a PSD A to the support of its first reduced matrix:
// (V (x) I) compressed (V^dag (x) I) = A. Rank is counted above tol * lambda_max.
CompressResult compress_support(const BlockMatrix& A, double tol);

}  // namespace posmap
