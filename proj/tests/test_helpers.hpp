#pragma once

#include "posmap/block_matrix.hpp"

namespace posmap::test {

inline Matrix random_complex(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix M(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) M(i, j) = Complex(gauss(rng), gauss(rng));
  return M;
}

inline Matrix random_hermitian(Index dim, Rng& rng) {
  const Matrix G = random_complex(dim, dim, rng);
  return 0.5 * (G + G.adjoint());
}

// PSD matrix of the requested rank (full rank when rank <= 0).
inline Matrix random_psd(Index dim, Rng& rng, Index rank = 0) {
  if (rank <= 0) rank = dim;
  const Matrix G = random_complex(dim, rank, rng);
  return G * G.adjoint();
}

// random density matrix (unit trace)
inline Matrix random_density(Index dim, Rng& rng, Index rank = 0) {
  Matrix rho = random_psd(dim, rng, rank);
  return rho / rho.trace().real();
}

inline BlockMatrix random_psd_block(Index m, Index n, Rng& rng, Index rank = 0) {
  return BlockMatrix(m, n, random_psd(m * n, rng, rank));
}

}  // namespace posmap::test
