#include "posmap/states.hpp"

#include <cmath>

namespace posmap {

BlockMatrix flip(Index m) {
  if (m < 2) throw Error(Errc::ParamOutOfDomain, "flip needs m >= 2");
  BlockMatrix F(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) F.set_block(i, j, matrix_unit(j, i, m));
  return F;
}

BlockMatrix max_ent_projector(Index m) {
  if (m < 2) throw Error(Errc::ParamOutOfDomain, "max_ent_projector needs m >= 2");
  BlockMatrix P(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) P.set_block(i, j, matrix_unit(i, j, m) / static_cast<double>(m));
  return P;
}

namespace {

double get_param(const StateFamilySpec& spec, const char* key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw Error(Errc::MissingParam, std::string("family requires parameter '") + key + "'");
  return it->second;
}

BlockMatrix horodecki(double a) {
  if (a < 0.0 || a > 5.0)
    throw Error(Errc::ParamOutOfDomain, "horodecki parameter a must lie in [0,5]");
  BlockMatrix rho(3, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      if (i != j) rho.set_block(i, j, 2.0 / 21.0 * matrix_unit(i, j, 3));
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 2.0, a, 5.0 - a;
  rho.set_block(0, 0, d / 21.0);
  d.diagonal() << 5.0 - a, 2.0, a;
  rho.set_block(1, 1, d / 21.0);
  d.diagonal() << a, 5.0 - a, 2.0;
  rho.set_block(2, 2, d / 21.0);
  return rho;
}

BlockMatrix werner(Index m, double x) {
  if (m < 2) throw Error(Errc::ParamOutOfDomain, "werner needs m >= 2");
  if (x < -1.0 || x > 1.0)
    throw Error(Errc::ParamOutOfDomain, "werner parameter x must lie in [-1,1]");
  const double denom = static_cast<double>(m) * m * m - m;
  const Matrix full = (m - x) / denom * Matrix::Identity(m * m, m * m) +
                      (m * x - 1.0) / denom * flip(m).full();
  return BlockMatrix(m, m, full);
}

BlockMatrix isotropic(Index m, double y) {
  if (m < 2) throw Error(Errc::ParamOutOfDomain, "isotropic needs m >= 2");
  const double lo = -1.0 / (static_cast<double>(m) * m - 1.0);
  if (y < lo || y > 1.0)
    throw Error(Errc::ParamOutOfDomain, "isotropic parameter y must lie in [-1/(m^2-1), 1]");
  const Matrix full = (1.0 - y) / static_cast<double>(m * m) * Matrix::Identity(m * m, m * m) +
                      y * max_ent_projector(m).full();
  return BlockMatrix(m, m, full);
}

BlockMatrix cq_state(const StateFamilySpec& spec) {
  if (spec.components.empty())
    throw Error(Errc::MissingParam, "cq state needs a (p_i, sigma_i) component list");
  const Index m = spec.m, n = spec.second_dim();
  if (static_cast<Index>(spec.components.size()) > m)
    throw Error(Errc::ParamOutOfDomain, "cq state has more components than basis vectors");
  BlockMatrix rho(m, n);
  double psum = 0.0;
  for (Index i = 0; i < static_cast<Index>(spec.components.size()); ++i) {
    const auto& [p, sigma] = spec.components[i];
    if (p < 0.0) throw Error(Errc::ParamOutOfDomain, "cq weights must be nonnegative");
    if (sigma.rows() != n || sigma.cols() != n)
      throw Error(Errc::ShapeMismatch, "cq components must be n x n");
    rho.set_block(i, i, p * sigma);
    psum += p;
  }
  if (std::abs(psum - 1.0) > 1e-10)
    throw Error(Errc::ParamOutOfDomain, "cq weights must sum to 1");
  return rho;
}

BlockMatrix product_state(const StateFamilySpec& spec) {
  const Index m = spec.m, n = spec.second_dim();
  if (spec.product_left.rows() != m || spec.product_right.rows() != n)
    throw Error(Errc::ShapeMismatch, "product factors must be m x m and n x n");
  return BlockMatrix(m, n, kron(spec.product_left, spec.product_right));
}

}  // namespace

BlockMatrix make_state(const StateFamilySpec& spec) {
  switch (spec.family) {
    case StateFamily::Horodecki:
      if (spec.m != 3 && spec.m != 0)
        throw Error(Errc::ParamOutOfDomain, "horodecki is a 3 (x) 3 family");
      return horodecki(get_param(spec, "a"));
    case StateFamily::Werner: return werner(spec.m, get_param(spec, "x"));
    case StateFamily::Isotropic: return isotropic(spec.m, get_param(spec, "y"));
    case StateFamily::Flip: return flip(spec.m);
    case StateFamily::MaxEnt: return max_ent_projector(spec.m);
    case StateFamily::Cq: return cq_state(spec);
    case StateFamily::Product: return product_state(spec);
  }
  throw Error(Errc::UnknownFamily, "unknown state family");
}

const char* state_tag_name(StateTag tag) {
  switch (tag) {
    case StateTag::Separable: return "SEPARABLE";
    case StateTag::PptEntangled: return "PPT_ENTANGLED";
    case StateTag::NpptEntangled: return "NPPT_ENTANGLED";
  }
  return "Unknown";
}

StateClassification classify_state(const StateFamilySpec& spec) {
  switch (spec.family) {
    case StateFamily::Horodecki: {
      const double a = get_param(spec, "a");
      if (a < 0.0 || a > 5.0)
        throw Error(Errc::ParamOutOfDomain, "horodecki parameter a must lie in [0,5]");
      if (a < 1.0) return {StateTag::NpptEntangled, ClassificationSource::PaperRange};
      if (a < 2.0)
        throw Error(Errc::ParamOutOfDomain,
                    "horodecki classification is undefined for a in [1,2)");
      if (a <= 3.0) return {StateTag::Separable, ClassificationSource::PaperRange};
      if (a <= 4.0) return {StateTag::PptEntangled, ClassificationSource::PaperRange};
      return {StateTag::NpptEntangled, ClassificationSource::PaperRange};
    }
    case StateFamily::Werner: {
      const double x = get_param(spec, "x");
      if (x < -1.0 || x > 1.0)
        throw Error(Errc::ParamOutOfDomain, "werner parameter x must lie in [-1,1]");
      if (x >= 0.0) return {StateTag::Separable, ClassificationSource::PaperRange};
      return {StateTag::NpptEntangled, ClassificationSource::PaperRange};
    }
    case StateFamily::Isotropic: {
      const double y = get_param(spec, "y");
      const Index m = spec.m;
      const double lo = -1.0 / (static_cast<double>(m) * m - 1.0);
      if (y < lo || y > 1.0)
        throw Error(Errc::ParamOutOfDomain, "isotropic parameter y must lie in [-1/(m^2-1), 1]");
      if (y <= 1.0 / (m + 1.0)) return {StateTag::Separable, ClassificationSource::PaperRange};
      return {StateTag::NpptEntangled, ClassificationSource::PaperRange};
    }
    case StateFamily::MaxEnt:
      return {StateTag::NpptEntangled, ClassificationSource::PaperRange};
    case StateFamily::Cq:
    case StateFamily::Product:
      // separable by construction (explicit convex combination of products)
      return {StateTag::Separable, ClassificationSource::PptTest};
    case StateFamily::Flip:
      throw Error(Errc::ParamOutOfDomain, "flip is not a density matrix");
  }
  throw Error(Errc::UnknownFamily, "unknown state family");
}

}  // namespace posmap
