#include "posmap/detector.hpp"

#include <algorithm>
#include <cmath>

namespace posmap {

BlockMatrix apply_id_tensor(const LinearMapRep& map, const BlockMatrix& rho) {
  if (rho.n() != map.input_dim())
    throw Error(Errc::DimensionMismatch,
                "second factor of the state must match the map's input dimension");
  BlockMatrix out(rho.m(), map.output_dim());
  for (Index i = 0; i < rho.m(); ++i)
    for (Index j = 0; j < rho.m(); ++j) out.set_block(i, j, map.apply(rho.block(i, j)));
  return out;
}

DetectionReport detect(const LinearMapRep& map, const BlockMatrix& rho, double tol,
                       const std::string& map_id, const std::string& state_id) {
  const BlockMatrix mapped = apply_id_tensor(map, rho);
  DetectionReport out;
  out.min_eig = min_eigenvalue(mapped.full());
  out.detected = out.min_eig < -tol * std::max(1.0, mapped.full().norm());
  out.map_id = map_id;
  out.state_id = state_id;
  return out;
}

BlockMatrix witness_from_map(const LinearMapRep& map, double tol) {
  if (is_completely_positive(map, tol))
    throw Error(Errc::MapIsCp, "a CP map yields no witness");
  const double m = static_cast<double>(map.input_dim());
  return BlockMatrix(map.choi().m(), map.choi().n(), map.choi().full() / m);
}

double evaluate_witness(const BlockMatrix& W, const BlockMatrix& rho) {
  if (W.full().rows() != rho.full().rows())
    throw Error(Errc::DimensionMismatch, "witness and state dimensions differ");
  return (W.full() * rho.full()).trace().real();
}

namespace {

StateFamilySpec with_param(StateFamilySpec spec, const std::string& name, double value) {
  spec.params[name] = value;
  return spec;
}

MapFamilySpec with_param(MapFamilySpec spec, const std::string& name, double value) {
  spec.params[name] = value;
  return spec;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec, const std::set<SweepCheck>& checks,
                            const CertifierConfig& cfg, double tol) {
  if (spec.grid.empty()) throw Error(Errc::ParamOutOfDomain, "sweep grid is empty");
  for (size_t i = 1; i < spec.grid.size(); ++i) {
    const double d0 = spec.grid[1] - spec.grid[0];
    const double di = spec.grid[i] - spec.grid[i - 1];
    if (d0 * di <= 0.0) throw Error(Errc::ParamOutOfDomain, "sweep grid is not monotone");
  }

  std::vector<SweepRow> rows;
  rows.reserve(spec.grid.size());
  for (const double value : spec.grid) {
    SweepRow row;
    row.param_name = spec.param_name;
    row.param_value = value;

    if (std::holds_alternative<MapFamilySpec>(spec.base)) {
      const LinearMapRep map =
          make_family(with_param(std::get<MapFamilySpec>(spec.base), spec.param_name, value));
      const double scale = std::max(1.0, map.choi().full().norm());
      if (checks.count(SweepCheck::Cp)) {
        row.choi_min_eig = min_eigenvalue(map.choi().full());
        row.cp = *row.choi_min_eig >= -tol * scale;
      }
      if (checks.count(SweepCheck::Positive)) {
        const PositivityVerdict verdict = map_positivity(map, cfg);
        row.seesaw_min = verdict.min_value;
        row.positive = verdict.tag == VerdictTag::NoViolationFound;
      }
      if (checks.count(SweepCheck::Ppt))
        row.ppt = ppt_classify(map.choi(), tol).tag == PptTag::PositivePpt;
    } else {
      const BlockMatrix state =
          make_state(with_param(std::get<StateFamilySpec>(spec.base), spec.param_name, value));
      if (checks.count(SweepCheck::Ppt))
        row.ppt = ppt_classify(state, tol).tag == PptTag::PositivePpt;
      if (checks.count(SweepCheck::Cp) || checks.count(SweepCheck::Positive))
        throw Error(Errc::ParamOutOfDomain, "cp/positive checks apply to map families only");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace posmap
