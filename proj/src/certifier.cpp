#include "posmap/certifier.hpp"

#include <algorithm>
#include <cmath>

namespace posmap {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// (<u| (x) I) C (|u> (x) I), an n x n matrix.
Matrix contract_first(const BlockMatrix& C, const Vector& u) {
  Matrix out = Matrix::Zero(C.n(), C.n());
  for (Index i = 0; i < C.m(); ++i)
    for (Index j = 0; j < C.m(); ++j) out += std::conj(u(i)) * u(j) * C.block(i, j);
  return out;
}

// (I (x) <v|) C (I (x) |v>), an m x m matrix.
Matrix contract_second(const BlockMatrix& C, const Vector& v) {
  Matrix out(C.m(), C.m());
  for (Index i = 0; i < C.m(); ++i)
    for (Index j = 0; j < C.m(); ++j) out(i, j) = (v.adjoint() * C.block(i, j) * v)(0, 0);
  return out;
}

struct EigStep {
  double value;
  Vector vector;
};

EigStep min_eigpair(const Matrix& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (H + H.adjoint()));
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

double product_value(const BlockMatrix& C, const Vector& u, const Vector& v) {
  return (v.adjoint() * contract_first(C, u) * v)(0, 0).real();
}

}  // namespace

PositivityVerdict block_positivity(const BlockMatrix& C, const CertifierConfig& cfg) {
  if (hermiticity_defect(C.full()) > 1e-8)
    throw Error(Errc::NotHermitian, "certifier input must be Hermitian");
  if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.violation_threshold <= 0.0 ||
      cfg.convergence_tol <= 0.0)
    throw Error(Errc::ParamOutOfDomain, "certifier config out of range");

  const Index m = C.m(), n = C.n();
  const double scale = std::max(1.0, C.full().norm());

  PositivityVerdict out;
  out.min_value = std::numeric_limits<double>::infinity();

  for (int k = 0; k < cfg.restarts; ++k) {
    Rng rng(splitmix64(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (k + 1))));
    Vector u = random_unit_vector(m, rng);
    Vector v;
    double obj = std::numeric_limits<double>::infinity();
    std::vector<double> trace_log;

    for (int it = 0; it < cfg.max_iters; ++it) {
      const EigStep sv = min_eigpair(contract_first(C, u));
      v = sv.vector;
      if (cfg.log_objectives) trace_log.push_back(sv.value);
      const EigStep su = min_eigpair(contract_second(C, v));
      u = su.vector;
      if (cfg.log_objectives) trace_log.push_back(su.value);
      ++out.iterations_total;
      if (obj - su.value < cfg.convergence_tol) {
        obj = su.value;
        break;
      }
      obj = su.value;
    }

    if (obj < out.min_value) {
      out.min_value = obj;
      out.witness_u = u;
      out.witness_v = v;
    }
    if (cfg.log_objectives) out.objective_log.push_back(std::move(trace_log));
    ++out.restarts_run;
  }

  // re-evaluate at the stored witness so the reported value is search-path free
  out.min_value = product_value(C, out.witness_u, out.witness_v);
  out.tag = out.min_value < -cfg.violation_threshold * scale ? VerdictTag::Violation
                                                             : VerdictTag::NoViolationFound;
  if (out.tag == VerdictTag::NoViolationFound) {
    out.witness_u.resize(0);
    out.witness_v.resize(0);
  }
  return out;
}

PositivityVerdict map_positivity(const LinearMapRep& map, const CertifierConfig& cfg) {
  if (!is_hermiticity_preserving(map, 1e-8))
    throw Error(Errc::NotHermitianPreserving, "map is not Hermiticity-preserving");
  return block_positivity(map.choi(), cfg);
}

const char* map_class_name(MapClass c) {
  switch (c) {
    case MapClass::Cp: return "CP";
    case MapClass::Pncp: return "PNCP";
    case MapClass::NotPositive: return "NOT_POSITIVE";
  }
  return "Unknown";
}

MapClassification classify_map(const LinearMapRep& map, const CertifierConfig& cfg) {
  if (!is_hermiticity_preserving(map, 1e-8))
    throw Error(Errc::NotHermitianPreserving, "map is not Hermiticity-preserving");
  MapClassification out{MapClass::Cp, min_eigenvalue(map.choi().full()), {}};
  const double cut = -cfg.violation_threshold * std::max(1.0, map.choi().full().norm());
  if (out.choi_min_eig >= cut) {
    out.tag = MapClass::Cp;
    return out;
  }
  out.positivity = block_positivity(map.choi(), cfg);
  out.tag = out.positivity.tag == VerdictTag::Violation ? MapClass::NotPositive : MapClass::Pncp;
  return out;
}

}  // namespace posmap
