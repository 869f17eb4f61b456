#include "posmap/numcore.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

namespace posmap {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotUnitary: return "NotUnitary";
    case Errc::NotPsd: return "NotPsd";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::ZeroMatrix: return "ZeroMatrix";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::PurificationMismatch: return "PurificationMismatch";
    case Errc::InputIsPpt: return "InputIsPpt";
    case Errc::IsPsd: return "IsPsd";
    case Errc::DiagBlockNotPsd: return "DiagBlockNotPsd";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::NotHermitianPreserving: return "NotHermitianPreserving";
    case Errc::NotCp: return "NotCp";
    case Errc::NotTp: return "NotTp";
    case Errc::MapIsCp: return "MapIsCp";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::MissingParam: return "MissingParam";
    case Errc::ParamOutOfDomain: return "ParamOutOfDomain";
    case Errc::BadFile: return "BadFile";
  }
  return "Unknown";
}

Matrix adjoint(const Matrix& M) { return M.adjoint(); }

Matrix kron(const Matrix& A, const Matrix& B) {
  Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

Matrix matrix_unit(Index i, Index j, Index rows, Index cols) {
  Matrix M = Matrix::Zero(rows, cols);
  M(i, j) = 1.0;
  return M;
}

double hermiticity_defect(const Matrix& M) {
  if (M.rows() != M.cols()) throw Error(Errc::NotSquare, "matrix is not square");
  return (M - M.adjoint()).norm() / std::max(1.0, M.norm());
}

namespace {

constexpr double kHermitianTol = 1e-8;

Matrix symmetrized(const Matrix& H) {
  if (H.rows() != H.cols()) throw Error(Errc::NotSquare, "matrix is not square");
  if (hermiticity_defect(H) > kHermitianTol)
    throw Error(Errc::NotHermitian, "matrix is not Hermitian within 1e-8");
  return 0.5 * (H + H.adjoint());
}

}  // namespace

EigResult hermitian_eig(const Matrix& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrized(H));
  if (solver.info() != Eigen::Success)
    throw Error(Errc::NotHermitian, "eigendecomposition failed to converge");
  const Index d = H.rows();
  EigResult out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors.resize(d, d);
  for (Index i = 0; i < d; ++i) out.eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
  return out;
}

double min_eigenvalue(const Matrix& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrized(H), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_psd(const Matrix& H, double tol) {
  return min_eigenvalue(H) >= -tol * std::max(1.0, H.norm());
}

Vector random_unit_vector(Index dim, Rng& rng) {
  if (dim < 1) throw Error(Errc::DimensionMismatch, "dimension must be at least 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  const double norm = v.norm();
  if (norm == 0.0) return random_unit_vector(dim, rng);  // probability zero
  return v / norm;
}

Matrix random_unitary(Index dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix G(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) G(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ();
  // fix phases so the diagonal of R is positive; keeps the distribution Haar
  Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < dim; ++i) {
    const Complex r = R(i, i);
    if (std::abs(r) > 0) Q.col(i) *= r / std::abs(r);
  }
  return Q;
}

bool is_unitary(const Matrix& U, double tol) {
  if (U.rows() != U.cols()) return false;
  return (U.adjoint() * U - Matrix::Identity(U.rows(), U.cols())).norm() <= tol;
}

}  // namespace posmap
