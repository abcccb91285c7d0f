#pragma once

#include <stdexcept>
#include <string_view>

#include "wright/gridfn.hpp"
#include "wright/region.hpp"

namespace wright {

/// The enclosure does not keep x(-1) away from 0, so x'(L) may vanish.
struct DegenerateDenominator : std::domain_error {
  DegenerateDenominator() : std::domain_error("floquet: enclosure at t = -1 touches 0") {}
};

enum class FloquetKind { BoundedStable, StableByContradiction, Inconclusive };

std::string_view to_string(FloquetKind k);
FloquetKind floquet_kind_from_string(std::string_view s);

struct FloquetOutcome {
  FloquetKind kind = FloquetKind::Inconclusive;
  double lambda_max = kInf;
  int outer_iterations = 0;  // how many times Y was re-seeded from Z_L
};

/// Nonnegative upper bounds on |y|, |z| and |z_L|, stored as [0, bound].
struct FloquetState {
  GridFn y;
  GridFn z;
  GridFn zl;
  double lambda_max = kInf;
};

/// Y = 1 on [-1, 0), Y(0) = 0.
GridFn init_y(int n_time);

/// Fresh state for the region with Y from init_y.
FloquetState initial_state(const Region& r);

/// Y(t) = alpha_max int_0^t Y(s-1) e^{x(s-1)} ds on [0, L_max], upper sums.
FloquetState extend_y(FloquetState st, const Region& r);

/// Z(t) = max_{L in I_L} Y(L) |(e^{x(t-1)} - 1) / (e^{x(-1)} - 1)| + Y(t).
/// Throws DegenerateDenominator when sup x(-1) >= 0.
FloquetState build_z(FloquetState st, const Region& r);

/// Z_L(t) = max_{L in I_L} Z(t + L) for t in [-L_min, 0].
FloquetState build_zl(FloquetState st, const Region& r);

/// m_floquet passes of Z_L(t) <- min(Z_L(t), alpha_max int_t^0 Z_L(s-1) e^{x(s-1)} ds)
/// on [-(L_min - 1), 0], followed by lambda_max = sup of Z_L on [-1, 0].
FloquetState refine_zl(FloquetState st, const Region& r, int m_floquet);

/// Y <- min(1, Z_L, Y) on [-1, 0), keeping Y(0) = 0.
FloquetState reseed_y(FloquetState st);

/// Bound on the moduli of the nontrivial Floquet multipliers of every SOPS
/// in the region, re-seeding Y with min(1, Z_L) at most n_floquet times.
FloquetOutcome floquet_bound(const Region& r, int n_floquet, int m_floquet);

}  // namespace wright
