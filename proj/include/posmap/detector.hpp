#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "posmap/certifier.hpp"
#include "posmap/states.hpp"

namespace posmap {

// (id_m (x) Phi) rho, computed blockwise: result block(i,j) = Phi(rho block(i,j)).
// Phi's input dimension must match rho's second factor.
BlockMatrix apply_id_tensor(const LinearMapRep& map, const BlockMatrix& rho);

struct DetectionReport {
  double min_eig;  // lambda_min of (id (x) Phi) rho
  bool detected;   // min_eig < -tol * max(1, ||(id (x) Phi) rho||_F)
  std::string map_id;
  std::string state_id;
};

DetectionReport detect(const LinearMapRep& map, const BlockMatrix& rho, double tol,
                       const std::string& map_id = "", const std::string& state_id = "");

// Entanglement witness W = choi(Phi)/m = (id (x) Phi) P+ from a PNCP map.
// Throws MapIsCp when Phi is completely positive (no witness arises).
BlockMatrix witness_from_map(const LinearMapRep& map, double tol);

// Re tr(W rho).
double evaluate_witness(const BlockMatrix& W, const BlockMatrix& rho);

enum class SweepCheck { Cp, Positive, Ppt };

struct SweepRow {
  std::string param_name;
  double param_value;
  std::optional<double> choi_min_eig;  // cp check
  std::optional<double> seesaw_min;    // positivity check
  std::optional<bool> cp;
  std::optional<bool> positive;        // no-violation-found presumption
  std::optional<bool> ppt;
};

struct SweepSpec {
  std::variant<MapFamilySpec, StateFamilySpec> base;
  std::string param_name;
  std::vector<double> grid;  // nonempty, monotone
};

// One row per grid point. Map families support {Cp, Positive, Ppt} (Ppt on
// the Choi matrix); state families support {Ppt}. Deterministic under a
// fixed cfg.seed; rows are ordered by grid index.
std::vector<SweepRow> sweep(const SweepSpec& spec, const std::set<SweepCheck>& checks,
                            const CertifierConfig& cfg, double tol);

}  // namespace posmap
