#pragma once

#include <cstdint>
#include <vector>

#include "posmap/linear_map.hpp"

namespace posmap {

struct CertifierConfig {
  int restarts = 64;
  int max_iters = 200;                 // full see-saw sweeps per restart
  double convergence_tol = 1e-12;      // stop when the objective decrease falls below
  double violation_threshold = 1e-8;   // relative to max(1, ||C||_F)
  std::uint64_t seed = 0;
  bool log_objectives = false;         // record per-restart objective traces
};

enum class VerdictTag { Violation, NoViolationFound };

// Outcome of the product-vector search. NoViolationFound is a bounded-search
// presumption, not a proof: it means no product vector with
// <u(x)v|C|u(x)v> < -threshold was found within the configured budget.
struct PositivityVerdict {
  VerdictTag tag = VerdictTag::NoViolationFound;
  Vector witness_u, witness_v;  // populated on Violation
  double min_value = 0.0;       // global minimum of <u(x)v|C|u(x)v> found
  int restarts_run = 0;
  long iterations_total = 0;
  std::vector<std::vector<double>> objective_log;  // when log_objectives is set
};

// Minimizes f(u,v) = <u(x)v|C|u(x)v> by alternating exact eigensteps:
// fixing u, v is the minimal eigenvector of (<u| (x) I) C (|u> (x) I); fixing
// v, u is the minimal eigenvector of (I (x) <v|) C (I (x) |v>). Each half-step
// is an exact minimization, so the objective is non-increasing. Restarts are
// seeded independently from cfg.seed and reduced deterministically (global
// minimum, earliest restart wins ties).
PositivityVerdict block_positivity(const BlockMatrix& C, const CertifierConfig& cfg);

// Positivity of Phi via block-positivity of its Choi matrix: f(u,v) equals
// <v|Phi(|u_bar><u_bar|)|v>.
PositivityVerdict map_positivity(const LinearMapRep& map, const CertifierConfig& cfg);

enum class MapClass { Cp, Pncp, NotPositive };

const char* map_class_name(MapClass c);

struct MapClassification {
  MapClass tag;
  double choi_min_eig;
  PositivityVerdict positivity;  // search certificate (witness on NotPositive)
};

// CP if the Choi matrix is PSD; otherwise PNCP when the search finds no
// violation (a presumption) and NotPositive with a witness when it does.
MapClassification classify_map(const LinearMapRep& map, const CertifierConfig& cfg);

}  // namespace posmap
