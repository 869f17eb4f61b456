#include "posmap/builders.hpp"

#include <algorithm>
#include <cmath>

#include "posmap/detector.hpp"

namespace posmap {

namespace detail {

CanonicalConstruction canonical_construction(const BlockMatrix& A, double tol,
                                             bool transpose_blocks) {
  const Index m = A.m(), n = A.n();
  const Matrix A1 = partial_trace(A, 2);
  const EigResult eig = hermitian_eig(A1);
  const double lmax = eig.eigenvalues(0);
  if (lmax <= 0.0) throw Error(Errc::ZeroMatrix, "reduced matrix has no support");
  if (eig.eigenvalues(m - 1) < -tol * std::max(1.0, lmax))
    throw Error(Errc::NotPsd, "reduced matrix is not PSD");

  CanonicalConstruction out;
  out.psi = eig.eigenvectors;
  out.rank = 0;
  while (out.rank < m && eig.eigenvalues(out.rank) > tol * lmax) ++out.rank;
  out.lambda.resize(m);
  for (Index i = 0; i < m; ++i) out.lambda(i) = std::sqrt(std::max(eig.eigenvalues(i), 0.0));

  // A'_ij = (<psi_i| (x) I) A (|psi_j> (x) I)
  const Matrix In = Matrix::Identity(n, n);
  const Matrix W = kron(out.psi, In);
  const Matrix Ap = W.adjoint() * A.full() * W;

  // A''_ij = A'_ij / (lambda_i lambda_j) on the support, I_n/n filler on the
  // remaining diagonal, zero elsewhere.
  BlockMatrix App(m, n);
  const BlockMatrix ApB(m, n, Ap);
  for (Index i = 0; i < out.rank; ++i)
    for (Index j = 0; j < out.rank; ++j)
      App.set_block(i, j, ApB.block(i, j) / (out.lambda(i) * out.lambda(j)));
  for (Index i = out.rank; i < m; ++i) {
    App.set_block(i, i, In / static_cast<double>(n));
    out.completion_indices.push_back(i);
  }
  if (transpose_blocks) App = partial_transpose(App, 2);

  // Rotate to the standard basis. The Choi matrix of the map defined on the
  // psi-basis units is sum_ij |conj(psi_i)><conj(psi_j)| (x) A''_ij: expanding
  // E_kl over |psi_i><psi_j| puts conj(psi_i(k)) psi_j(l) in the first factor.
  const Matrix Wc = kron(out.psi.conjugate(), In);
  out.choi = BlockMatrix(m, n, Wc * App.full() * Wc.adjoint());

  out.purification = Vector::Zero(m * m);
  for (Index i = 0; i < out.rank; ++i) {
    const Vector psi = out.psi.col(i);
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b)
        out.purification(a * m + b) += out.lambda(i) * psi(a) * psi(b);
  }
  return out;
}

}  // namespace detail

namespace {

BlockMatrix outer(const Vector& x, Index m, Index n) {
  return BlockMatrix(m, n, x * x.adjoint());
}

// Orthonormal columns extending the given ones to a full basis of C^m,
// filled deterministically from the standard basis vectors.
Matrix complete_basis(const Matrix& cols) {
  const Index m = cols.rows();
  Matrix basis(m, m);
  Index have = cols.cols();
  basis.leftCols(have) = cols;
  for (Index k = 0; k < m && have < m; ++k) {
    Vector v = Vector::Zero(m);
    v(k) = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (Index i = 0; i < have; ++i) v -= basis.col(i).dot(v) * basis.col(i);
    if (v.norm() > 1e-6) basis.col(have++) = v / v.norm();
  }
  if (have < m) throw Error(Errc::ShapeMismatch, "could not complete the basis");
  return basis;
}

}  // namespace

Lemma21Result lemma21_build(const BlockMatrix& A, const std::optional<Vector>& x, double tol) {
  const Index m = A.m(), n = A.n();
  if (A.full().norm() == 0.0) throw Error(Errc::ZeroMatrix, "input is the zero matrix");
  if (!is_psd(A.full(), tol)) throw Error(Errc::NotPsd, "input is not PSD");

  BlockMatrix choi(m, n);
  Vector purification;
  std::vector<Index> completion;

  if (!x) {
    detail::CanonicalConstruction cc = detail::canonical_construction(A, tol, false);
    choi = std::move(cc.choi);
    purification = std::move(cc.purification);
    completion = std::move(cc.completion_indices);
  } else {
    if (x->size() != m * m)
      throw Error(Errc::DimensionMismatch, "purification must live in C^m (x) C^m");
    const Matrix A1 = partial_trace(A, 2);
    const Matrix X1 = partial_trace(outer(*x, m, m), 2);
    if ((X1 - A1).norm() > 1e-7 * std::max(1.0, A1.norm()))
      throw Error(Errc::PurificationMismatch, "tr_2 |x><x| does not match A_1");

    // The Schmidt left vectors diagonalize A_1, so they replace the canonical
    // eigenbasis; the right vectors become the map's domain basis.
    const SchmidtForm sf = schmidt_decompose(*x, m, m, tol);
    const Index r = sf.rank;
    const Matrix In = Matrix::Identity(n, n);
    const Matrix Wr = kron(sf.left_vectors, In);
    const BlockMatrix Ap(r, n, Wr.adjoint() * A.full() * Wr);

    BlockMatrix App(m, n);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j)
        App.set_block(i, j, Ap.block(i, j) / (sf.coefficients(i) * sf.coefficients(j)));
    for (Index i = r; i < m; ++i) {
      App.set_block(i, i, In / static_cast<double>(n));
      completion.push_back(i);
    }

    const Matrix phi = complete_basis(sf.right_vectors);
    const Matrix Wc = kron(phi.conjugate(), In);
    choi = BlockMatrix(m, n, Wc * App.full() * Wc.adjoint());
    purification = *x;
  }

  LinearMapRep map(std::move(choi));
  const BlockMatrix rec = apply_id_tensor(map, outer(purification, m, m));
  const double err = (rec.full() - A.full()).norm();
  return Lemma21Result{std::move(map), std::move(purification), err, std::move(completion)};
}

Thm31Result thm31_build(const BlockMatrix& A, double tol) {
  const PptClass ppt = ppt_classify(A, tol);
  if (ppt.tag == PptTag::NotPositive) throw Error(Errc::NotPsd, "input is not PSD");
  if (ppt.tag == PptTag::PositivePpt)
    throw Error(Errc::InputIsPpt, "input is PPT; the construction would be CP");

  detail::CanonicalConstruction cc = detail::canonical_construction(A, tol, true);
  Thm31Result out{LinearMapRep(std::move(cc.choi)), 0.0, 0.0};
  out.choi_min_eig = min_eigenvalue(out.map.choi().full());
  out.cotranspose_choi_min_eig = min_eigenvalue(partial_transpose(out.map.choi(), 1).full());
  return out;
}

Thm41Result thm41_build(const BlockMatrix& A, const CertifierConfig& cfg) {
  if (hermiticity_defect(A.full()) > 1e-8)
    throw Error(Errc::NotHermitian, "input must be Hermitian");
  if (is_psd(A.full(), cfg.violation_threshold))
    throw Error(Errc::IsPsd, "input is PSD; the map would be CP");
  const double scale = std::max(1.0, A.full().norm());
  for (Index i = 0; i < A.m(); ++i)
    if (min_eigenvalue(A.block(i, i)) < -cfg.violation_threshold * scale)
      throw Error(Errc::DiagBlockNotPsd,
                  "diagonal block " + std::to_string(i) + " is not PSD");

  PositivityVerdict verdict = block_positivity(A, cfg);
  if (verdict.tag == VerdictTag::Violation)
    throw ConditionViolatedError(std::move(verdict));
  return Thm41Result{LinearMapRep(A), std::move(verdict), true};
}

const char* separability_name(SeparabilityVerdict v) {
  switch (v) {
    case SeparabilityVerdict::Separable: return "SEPARABLE";
    case SeparabilityVerdict::Entangled: return "ENTANGLED";
    case SeparabilityVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "Unknown";
}

SeparabilityVerdict cor23_separability(const BlockMatrix& rho, double tol) {
  if (!is_psd(rho.full(), tol)) throw Error(Errc::NotPsd, "input is not PSD");
  if (std::abs(rho.full().trace().real() - 1.0) > 1e-8)
    throw Error(Errc::ParamOutOfDomain, "input must have unit trace");

  const CompressResult cs = compress_support(rho, tol);
  const PptClass ppt = ppt_classify(cs.compressed, tol);
  if (ppt.tag == PptTag::PositiveNppt) return SeparabilityVerdict::Entangled;
  if (cs.compressed.m() * cs.compressed.n() <= 6) return SeparabilityVerdict::Separable;
  return SeparabilityVerdict::Inconclusive;
}

const char* channel_class_name(ChannelClass c) {
  switch (c) {
    case ChannelClass::Unitary: return "UNITARY";
    case ChannelClass::CompletelyContractive: return "COMPLETELY_CONTRACTIVE";
    case ChannelClass::Eb: return "EB";
    case ChannelClass::NotEb: return "NOT_EB";
    case ChannelClass::Inconclusive: return "INCONCLUSIVE";
  }
  return "Unknown";
}

ChannelClass classify_channel(const LinearMapRep& map, double tol) {
  if (!is_completely_positive(map, tol)) throw Error(Errc::NotCp, "map is not CP");
  if (!is_trace_preserving(map, std::max(tol, 1e-9)))
    throw Error(Errc::NotTp, "map is not trace-preserving");
  const Index m = map.input_dim(), n = map.output_dim();

  const EigResult eig = hermitian_eig(map.choi().full());
  Index rank = 0;
  while (rank < eig.eigenvalues.size() && eig.eigenvalues(rank) > tol * eig.eigenvalues(0))
    ++rank;
  if (rank == 1 && m == n) return ChannelClass::Unitary;

  const Matrix sigma = map.choi().block(0, 0);
  const double scale = std::max(1.0, map.choi().full().norm());
  if ((map.choi().full() - kron(Matrix::Identity(m, m), sigma)).norm() <= tol * scale)
    return ChannelClass::CompletelyContractive;

  const PptClass ppt = ppt_classify(map.choi(), tol);
  if (ppt.tag == PptTag::PositiveNppt) return ChannelClass::NotEb;
  if (m * n <= 6) return ChannelClass::Eb;
  return ChannelClass::Inconclusive;
}

}  // namespace posmap
