#pragma once

#include <map>
#include <string>
#include <vector>

#include "posmap/block_matrix.hpp"

namespace posmap {

// A linear map M_m -> M_n stored canonically by its Choi matrix
// C = sum_ij E_ij (x) Phi(E_ij) in M_m (x) M_n. The map and its Choi matrix
// determine each other uniquely; evaluation reads the Choi blocks back:
// Phi(X) = sum_ij X(i,j) * C.block(i,j).
class LinearMapRep {
 public:
  explicit LinearMapRep(BlockMatrix choi) : choi_(std::move(choi)) {}

  Index input_dim() const { return choi_.m(); }
  Index output_dim() const { return choi_.n(); }
  const BlockMatrix& choi() const { return choi_; }

  Matrix apply(const Matrix& X) const;

  LinearMapRep scaled(double c) const;

 private:
  BlockMatrix choi_;
};

// Phi(A) = sum_i K_i A K_i^dag from n x m Kraus operators. The Choi matrix is
// PSD by construction.
LinearMapRep from_kraus(const std::vector<Matrix>& ops);

// Choi matrix PSD within tol (Choi's criterion).
bool is_completely_positive(const LinearMapRep& map, double tol);

// [tr Phi(E_ij)] = partial_trace(choi, 2) equals I_m within tol (Frobenius).
bool is_trace_preserving(const LinearMapRep& map, double tol);

// Choi matrix Hermitian within tol (relative Frobenius).
bool is_hermiticity_preserving(const LinearMapRep& map, double tol);

// Phi o tau where tau is the transpose map; Choi(Phi o tau) = Choi(Phi)^{t1}.
LinearMapRep compose_with_transpose(const LinearMapRep& map);

// Rescales by m / tr Phi(I_m) so that maps with tr Phi(X) = c tr(X) become
// trace-preserving.
LinearMapRep normalize_tp(const LinearMapRep& map);

enum class MapFamily { Phi1, Phi2, Phi3, Phi4, Reduction, Transpose, TraceSigma };

struct MapFamilySpec {
  MapFamily family;
  Index dim = 3;  // input dimension m; Phi1/Phi2 are fixed at m = 3
  std::map<std::string, double> params;  // "a" | "x" | "y" per family
};

// The named map families, constructed unnormalized exactly as defined:
//   Phi1^a(X) = 2 X^t + diag((5-a)X22 + a X33, a X11 + (5-a)X33, (5-a)X11 + a X22)
//   Phi2^a(X) = 2 X^t + diag(a X22 + (5-a)X33, (5-a)X11 + a X33, a X11 + (5-a)X22)
//   Phi3^{m,x}(X) = (m x - 1) X + (m - x) tr(X) I
//   Phi4^{m,y}(X) = m y X^t + (1 - y) tr(X) I
//   Reduction(X) = tr(X) I - X
//   Transpose(X) = X^t
//   TraceSigma(X) = tr(X) I/m  (completely contractive onto the maximally mixed state)
// Parameters are not range-restricted: classification is the certifier's job.
LinearMapRep make_family(const MapFamilySpec& spec);

}  // namespace posmap
