#pragma once

#include <optional>
#include <utility>

#include "wright/gridfn.hpp"
#include "wright/interval.hpp"

namespace wright {

/// Recursion depths for the a priori envelopes.
struct AprioriParams {
  int i0 = 2;   // depth of the p_i envelope
  int j0 = 20;  // depth of the a_j sequence
};

/// Global bound -alpha (e^alpha - 1) <= x(t) <= alpha, uniform over alpha.
Interval global_extrema(const Interval& alpha);

/// Enclosure of p_i on the grid indices [i_lo, i_hi] (i_hi <= n_time).
///
/// p_1(t) = alpha t and p_{k+1}(t) = -alpha * int_0^t (e^{p_k(s-1)} - 1) ds,
/// integrated cell by cell in interval arithmetic for every k.
GridFn p_fn(const Interval& alpha, int i, int n_time, int i_lo, int i_hi);

/// Upper bound sup p_i(1) over alpha.
double p_ceiling(const Interval& alpha, int i, int n_time);

/// a_1 = -(alpha - 1), a_{k+1} = alpha (e^{a_k} - 1), iterated to a_j.
Interval a_seq(const Interval& alpha, int j);

/// Lower bound 1 + (1/alpha) w / (e^w - 1), w = alpha + e^{-alpha} - 1.
double q_lower_bound(const Interval& alpha);

/// 2 + |(e^alpha - 1) / (e^{a_j0(alpha)} - 1)| evaluated over alpha.
Interval long_qbar_ceiling(const Interval& alpha, int j0);

/// (I_q, I_qbar) from the a priori zero-gap bounds.
std::pair<Interval, Interval> q_qbar_ranges(const Interval& alpha, int j0);

/// Upper bound of -log(alpha_min / (pi/2)); every SOPS dips at least this low.
double walther_min(const Interval& alpha);

struct PeriodBoundTerms {
  double u_plus = 0;
  double l_plus = 0;
  double u_minus_1 = 0;
  double l_minus_1 = 0;
  double m = 0;
};

struct PeriodBound {
  PeriodBoundTerms terms;
  double qbar_lo = -kInf;
  std::optional<double> qbar_hi;  // nullopt: unbounded (u(-1) >= 0)
};

/// Bounds on the second zero gap from the balance of areas over one period.
/// Valid for SOPS with qbar >= 2 whose first gap lies in q_range and which
/// are enclosed by f.
PeriodBound period_bound(const GridFn& f, const Interval& q_range);

}  // namespace wright
