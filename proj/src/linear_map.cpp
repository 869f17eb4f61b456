#include "posmap/linear_map.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace posmap {

Matrix LinearMapRep::apply(const Matrix& X) const {
  const Index m = input_dim(), n = output_dim();
  if (X.rows() != m || X.cols() != m)
    throw Error(Errc::DimensionMismatch, "argument must be m x m");
  Matrix out = Matrix::Zero(n, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) out += X(i, j) * choi_.block(i, j);
  return out;
}

LinearMapRep LinearMapRep::scaled(double c) const {
  return LinearMapRep(BlockMatrix(choi_.m(), choi_.n(), c * choi_.full()));
}

LinearMapRep from_kraus(const std::vector<Matrix>& ops) {
  if (ops.empty()) throw Error(Errc::ShapeMismatch, "need at least one Kraus operator");
  const Index n = ops[0].rows(), m = ops[0].cols();
  Matrix C = Matrix::Zero(m * n, m * n);
  for (const Matrix& K : ops) {
    if (K.rows() != n || K.cols() != m)
      throw Error(Errc::ShapeMismatch, "Kraus operators must share their n x m shape");
    // sum_ij E_ij (x) K E_ij K^dag = |w><w| with w = sum_i e_i (x) K e_i
    Vector w(m * n);
    for (Index i = 0; i < m; ++i) w.segment(i * n, n) = K.col(i);
    C += w * w.adjoint();
  }
  return LinearMapRep(BlockMatrix(m, n, std::move(C)));
}

bool is_completely_positive(const LinearMapRep& map, double tol) {
  return is_psd(map.choi().full(), tol);
}

bool is_trace_preserving(const LinearMapRep& map, double tol) {
  const Matrix pt = partial_trace(map.choi(), 2);
  return (pt - Matrix::Identity(pt.rows(), pt.cols())).norm() <= tol;
}

bool is_hermiticity_preserving(const LinearMapRep& map, double tol) {
  return hermiticity_defect(map.choi().full()) <= tol;
}

LinearMapRep compose_with_transpose(const LinearMapRep& map) {
  return LinearMapRep(partial_transpose(map.choi(), 1));
}

LinearMapRep normalize_tp(const LinearMapRep& map) {
  const Index m = map.input_dim();
  const double c = map.apply(Matrix::Identity(m, m)).trace().real() / static_cast<double>(m);
  if (std::abs(c) < 1e-300) throw Error(Errc::ZeroMatrix, "map annihilates the identity");
  return map.scaled(1.0 / c);
}

namespace {

double get_param(const MapFamilySpec& spec, const char* key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw Error(Errc::MissingParam, std::string("family requires parameter '") + key + "'");
  return it->second;
}

Matrix phi1_diag(double a, const Matrix& X, bool swapped) {
  // Phi1 uses ((5-a) X22 + a X33, ...); Phi2 is the same pattern with the
  // coefficients a and 5-a exchanged.
  const double p = swapped ? a : 5.0 - a;
  const double q = swapped ? 5.0 - a : a;
  Matrix D = Matrix::Zero(3, 3);
  D(0, 0) = p * X(1, 1) + q * X(2, 2);
  D(1, 1) = q * X(0, 0) + p * X(2, 2);
  D(2, 2) = p * X(0, 0) + q * X(1, 1);
  return D;
}

}  // namespace

LinearMapRep make_family(const MapFamilySpec& spec) {
  const Index m = spec.dim;
  if (m < 2) throw Error(Errc::ParamOutOfDomain, "family dimension must be at least 2");

  std::function<Matrix(const Matrix&)> formula;
  Index n = m;
  switch (spec.family) {
    case MapFamily::Phi1:
    case MapFamily::Phi2: {
      if (m != 3) throw Error(Errc::ParamOutOfDomain, "phi1/phi2 are defined on M_3 only");
      const double a = get_param(spec, "a");
      const bool swapped = spec.family == MapFamily::Phi2;
      formula = [a, swapped](const Matrix& X) {
        return Matrix(2.0 * X.transpose() + phi1_diag(a, X, swapped));
      };
      break;
    }
    case MapFamily::Phi3: {
      const double x = get_param(spec, "x");
      formula = [x, m](const Matrix& X) {
        return Matrix((m * x - 1.0) * X + (m - x) * X.trace() * Matrix::Identity(m, m));
      };
      break;
    }
    case MapFamily::Phi4: {
      const double y = get_param(spec, "y");
      formula = [y, m](const Matrix& X) {
        return Matrix(m * y * X.transpose() + (1.0 - y) * X.trace() * Matrix::Identity(m, m));
      };
      break;
    }
    case MapFamily::Reduction:
      formula = [m](const Matrix& X) {
        return Matrix(X.trace() * Matrix::Identity(m, m) - X);
      };
      break;
    case MapFamily::Transpose:
      formula = [](const Matrix& X) { return Matrix(X.transpose()); };
      break;
    case MapFamily::TraceSigma:
      formula = [m](const Matrix& X) {
        return Matrix(X.trace() / static_cast<double>(m) * Matrix::Identity(m, m));
      };
      break;
  }
  if (!formula) throw Error(Errc::UnknownFamily, "unknown map family");

  BlockMatrix choi(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) choi.set_block(i, j, formula(matrix_unit(i, j, m)));
  return LinearMapRep(std::move(choi));
}

}  // namespace posmap
