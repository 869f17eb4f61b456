#pragma once

#include <optional>
#include <vector>

#include "posmap/certifier.hpp"
#include "posmap/linear_map.hpp"
#include "posmap/schmidt.hpp"

namespace posmap {

struct Lemma21Result {
  LinearMapRep map;                      // trace-preserving CP map M_m -> M_n
  Vector purification;                   // |x> in C^m (x) C^m with tr_2|x><x| = A_1
  double reconstruction_error;           // ||(id (x) map)|x><x| - A||_F
  std::vector<Index> completion_indices; // basis indices that received filler blocks
};

// Channel from a positive block matrix: builds the trace-preserving CP map
// with A = (id_m (x) map)|x><x|. When x is omitted the canonical purification
// of A_1 is used (each eigenvector paired with itself); a supplied x must
// satisfy tr_2|x><x| = A_1. Rank-deficient A_1 is completed with I_n/n
// filler blocks on the unused diagonal.
Lemma21Result lemma21_build(const BlockMatrix& A, const std::optional<Vector>& x, double tol);

struct Thm31Result {
  LinearMapRep map;
  double choi_min_eig;              // < 0: the map is not CP
  double cotranspose_choi_min_eig;  // lambda_min(choi^{t1}) >= 0: decomposability certificate
};

// Decomposable PNCP map from an NPPT matrix: runs the canonical construction
// and transposes each block before assembly. The result is trace-preserving,
// not CP (its Choi inherits the negative partial-transpose eigenvalue), and
// decomposable (choi^{t1} is PSD, i.e. map = CP-map o transpose).
Thm31Result thm31_build(const BlockMatrix& A, double tol);

struct Thm41Result {
  LinearMapRep map;                   // Choi matrix equals the input exactly
  PositivityVerdict condition_report; // block-positivity search outcome
  bool diag_blocks_psd;
};

// Thrown by thm41_build when the search finds a product vector violating the
// block-positivity condition; carries the witness and the value found.
class ConditionViolatedError : public Error {
 public:
  explicit ConditionViolatedError(PositivityVerdict verdict)
      : Error(Errc::ConditionViolated,
              "block-positivity fails at a product vector, value " +
                  std::to_string(verdict.min_value)),
        verdict_(std::move(verdict)) {}

  const PositivityVerdict& verdict() const { return verdict_; }

 private:
  PositivityVerdict verdict_;
};

// PNCP map from a Hermitian, non-PSD, block-positive matrix. The "A_11^U >= 0
// for every unitary U" condition is equivalent to block-positivity of A via
// A_11^U = [<u|tilde(A)_kl|u>] with u = U^dag e_1, and is certified by the
// see-saw search. Throws IsPsd when the map would be CP and ConditionViolated
// (with the witness) when the search finds a negative product vector.
Thm41Result thm41_build(const BlockMatrix& A, const CertifierConfig& cfg);

enum class SeparabilityVerdict { Separable, Entangled, Inconclusive };

const char* separability_name(SeparabilityVerdict v);

// Low-rank separability screen: compress to the support of rho_1; NPPT means
// entangled, PPT decides separability only when r * n <= 6.
SeparabilityVerdict cor23_separability(const BlockMatrix& rho, double tol);

enum class ChannelClass { Unitary, CompletelyContractive, Eb, NotEb, Inconclusive };

const char* channel_class_name(ChannelClass c);

// Classification of a channel (CP + TP required): Unitary when the Choi
// matrix has rank one and m = n; CompletelyContractive when Phi(X) = tr(X) sigma;
// entanglement-breaking status via the PPT criterion on the Choi matrix,
// decisive only for m * n <= 6.
ChannelClass classify_channel(const LinearMapRep& map, double tol);

namespace detail {

// Steps shared by lemma21_build and thm31_build: spectral data of A_1, the
// rotated blocks A'_ij = (<psi_i| (x) I) A (|psi_j> (x) I), the rescaled
// blocks A''_ij, and the Choi matrix assembled in the standard basis
// (blocks optionally transposed first). Requires A_1 >= 0 but not A >= 0;
// the sign equivalence lambda_min(choi) ~ lambda_min(A) that the CP claim
// rests on is tested directly against this hook.
struct CanonicalConstruction {
  Matrix psi;                   // m x m eigenbasis of A_1 (descending eigenvalues)
  RealVector lambda;            // sqrt of A_1 eigenvalues
  Index rank = 0;
  BlockMatrix choi{0, 0};       // assembled Choi matrix
  Vector purification;
  std::vector<Index> completion_indices;
};

CanonicalConstruction canonical_construction(const BlockMatrix& A, double tol,
                                             bool transpose_blocks);

}  // namespace detail

}  // namespace posmap
