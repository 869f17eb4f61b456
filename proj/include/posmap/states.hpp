#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "posmap/block_matrix.hpp"

namespace posmap {

enum class StateFamily { Horodecki, Werner, Isotropic, Flip, MaxEnt, Cq, Product };

struct StateFamilySpec {
  StateFamily family;
  Index m = 3;
  Index n = 0;  // 0 means "same as m"; only Cq/Product may differ
  std::map<std::string, double> params;

  // Cq: ensemble {(p_i, sigma_i)} giving sum_i p_i |i><i| (x) sigma_i.
  std::vector<std::pair<double, Matrix>> components;
  // Product: rho1 (x) rho2.
  Matrix product_left, product_right;

  Index second_dim() const { return n > 0 ? n : m; }
};

// Flip operator F = sum_ij E_ij (x) E_ji (swap); not a state.
BlockMatrix flip(Index m);

// P+ = (1/m) sum_ij E_ij (x) E_ij, the rank-one projector onto sum_i |ii>/sqrt(m).
BlockMatrix max_ent_projector(Index m);

// Parameter domains: Horodecki a in [0,5] (3 (x) 3), Werner x in [-1,1],
// Isotropic y in [-1/(m^2-1), 1]. All but Flip are unit-trace PSD states.
BlockMatrix make_state(const StateFamilySpec& spec);

enum class StateTag { Separable, PptEntangled, NpptEntangled };
enum class ClassificationSource { PaperRange, PptTest };

const char* state_tag_name(StateTag tag);

struct StateClassification {
  StateTag tag;
  ClassificationSource source;
};

// Known classification of the family at the given parameters:
//   Horodecki: separable on [2,3], PPT entangled on (3,4], NPPT entangled on
//              (4,5] and [0,1); undefined on [1,2) (ParamOutOfDomain).
//   Werner: separable iff 0 <= x <= 1, NPPT entangled otherwise.
//   Isotropic: separable iff y <= 1/(m+1), NPPT entangled otherwise.
//   MaxEnt: NPPT entangled. Cq/Product: separable by construction.
StateClassification classify_state(const StateFamilySpec& spec);

}  // namespace posmap
