#pragma once

#include <optional>

#include "wright/region.hpp"

namespace wright {

/// Result of a contraction step: the tightened region, or std::nullopt when
/// the step proved that no SOPS maps into the region.
using Pruned = std::optional<Region>;

/// Sign pattern of a SOPS and its translates by the period, plus x(1) in I_M.
Pruned step1_sign(const Region& r);

/// Inclusive range of base grid points t0 = i/n for the integration step.
struct IndexWindow {
  int first;
  int last;
};

/// Variation-of-parameters refinement from each base point t0 in the window,
/// forward over [t0, t0 + 1/n] and backward over [t0 - 1/n, t0].
Pruned step2_integrate(const Region& r, IndexWindow window);
Pruned step2_integrate(const Region& r);

/// Narrows I_q to where a sign change is still possible and I_M to the
/// enclosure at t = 1.
Pruned step3_zero_and_max(const Region& r);

/// Intersects the enclosure with its translates by every possible period.
Pruned step4_periodicity(const Region& r);

/// True when a previous step produced an empty intersection somewhere.
inline bool step5_infeasible(const Pruned& p) { return !p.has_value(); }

/// True when no SOPS in the region can dip below the Walther threshold.
bool step6_walther(const Region& r);

/// n_iter full passes of steps 1 through 6, stopping early on infeasibility.
Pruned prune(const Region& r, int n_iter);

}  // namespace wright
