#include "wright/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wright {

namespace {

const Interval kNonneg(0.0, kInf);

struct Layout {
  int n;
  int left;   // first stored index, far enough left for the Z_L window
  int right;  // last stored index, at or beyond L_max
};

Layout layout(const Region& r) {
  const int n = r.enclosure().n_time();
  const double l_max = r.period().hi();
  const int right = static_cast<int>(std::ceil(l_max * n)) + 1;
  const int left = -(static_cast<int>(std::ceil(l_max)) + 1) * n;
  return {n, left, right};
}

Interval bound(double hi) { return Interval(0.0, std::max(hi, 0.0)); }

// Upper bound of alpha_max / n times sup F e^x over closed cell c.
double cell_term(const GridFn& f, const GridFn& enc, int c, double step) {
  const double fv = f.closed_cell(c).hi();
  if (fv == 0.0) return 0.0;
  const double ex = exp(enc.closed_cell(c)).hi();
  return mul_up(step, mul_up(fv, ex));
}

double step_factor(const Region& r, int n) {
  return div_up(r.alpha().hi(), static_cast<double>(n));
}

}  // namespace

std::string_view to_string(FloquetKind k) {
  switch (k) {
    case FloquetKind::BoundedStable: return "BoundedStable";
    case FloquetKind::StableByContradiction: return "StableByContradiction";
    case FloquetKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

FloquetKind floquet_kind_from_string(std::string_view s) {
  if (s == "BoundedStable") return FloquetKind::BoundedStable;
  if (s == "StableByContradiction") return FloquetKind::StableByContradiction;
  if (s == "Inconclusive") return FloquetKind::Inconclusive;
  throw std::invalid_argument("unknown floquet outcome kind");
}

GridFn init_y(int n_time) {
  GridFn y(n_time, -n_time, 0, Interval(0.0, 1.0), kNonneg);
  for (int i = -n_time; i < 0; ++i) {
    y.set_point(i, Interval(0.0, 1.0));
    y.set_cell(i, Interval(0.0, 1.0));
  }
  y.set_point(0, Interval(0.0));
  return y;
}

FloquetState initial_state(const Region& r) {
  const int n = r.enclosure().n_time();
  GridFn y = init_y(n);
  GridFn empty(n, 0, 0, Interval(0.0), kNonneg);
  return {std::move(y), empty, empty, kInf};
}

FloquetState extend_y(FloquetState st, const Region& r) {
  const Layout lay = layout(r);
  const GridFn& enc = r.enclosure();
  // Keep [-1, 0] from the incoming Y; everything right of 0 is recomputed.
  GridFn y = st.y.resized(lay.left, lay.right);
  const double step = step_factor(r, lay.n);
  double acc = 0.0;
  y.set_point(0, Interval(0.0));
  for (int k = 0; k < lay.right; ++k) {
    acc = add_up(acc, cell_term(y, enc, k - lay.n, step));
    y.set_cell(k, bound(acc));
    y.set_point(k + 1, bound(acc));
  }
  st.y = std::move(y);
  return st;
}

FloquetState build_z(FloquetState st, const Region& r) {
  const Layout lay = layout(r);
  const GridFn& enc = r.enclosure();
  const Interval x_m1 = enc.point_or_ambient(-lay.n);
  if (!(x_m1.hi() < 0.0)) throw DegenerateDenominator();
  const Interval den = exp(x_m1) - Interval(1.0);
  const double max_y = st.y.eval(r.period()).hi();

  GridFn z(lay.n, lay.left, lay.right, kNonneg, kNonneg);
  // Z is meaningful on [-1, L_max]; further left it stays unknown.
  for (int g = -2 * lay.n; g <= z.last_slot(); ++g) {
    const Interval num = exp(enc.slot_or_ambient(g - 2 * lay.n)) - Interval(1.0);
    const double ratio = abs(num / den).hi();
    const double yv = st.y.slot_or_ambient(g).hi();
    z.set_slot(g, bound(add_up(mul_up(max_y, ratio), yv)));
  }
  st.z = std::move(z);
  return st;
}

FloquetState build_zl(FloquetState st, const Region& r) {
  const Layout lay = layout(r);
  const Interval l_range = r.period();
  const GridFn shifted = shift_hull(st.z, l_range);
  // Store Z_L on the grid cover of [-L_min, 0]; outside it is unknown.
  const int lo = static_cast<int>(std::floor(-l_range.lo() * lay.n));
  GridFn zl(lay.n, std::max(lo, lay.left), 0, kNonneg, kNonneg);
  const SlotRange inside = zl.slots_within(Interval(-l_range.lo(), 0.0));
  for (int g = inside.first; g <= inside.last; ++g) zl.set_slot(g, bound(shifted.slot(g).hi()));
  st.zl = std::move(zl);
  return st;
}

FloquetState refine_zl(FloquetState st, const Region& r, int m_floquet) {
  const Layout lay = layout(r);
  const GridFn& enc = r.enclosure();
  const double step = step_factor(r, lay.n);
  // Grid points tau = k/n with -(L_min - 1) <= tau <= 0.
  const double reach = sub_down(r.period().lo(), 1.0);
  const int k_min = std::max(static_cast<int>(std::ceil(-reach * lay.n)), st.zl.i_lo() + lay.n);
  GridFn& zl = st.zl;
  for (int pass = 0; pass < m_floquet; ++pass) {
    double acc = 0.0;
    zl.set_point(0, Interval(0.0));
    for (int k = -1; k >= k_min; --k) {
      acc = add_up(acc, cell_term(zl, enc, k - lay.n, step));
      const double cur_c = zl.cell(k).hi();
      const double cur_p = zl.point(k).hi();
      zl.set_cell(k, bound(std::min(cur_c, acc)));
      zl.set_point(k, bound(std::min(cur_p, acc)));
    }
  }
  st.lambda_max = zl.eval(Interval(-1.0, 0.0)).hi();
  return st;
}

FloquetState reseed_y(FloquetState st) {
  const int n = st.y.n_time();
  for (int g = -2 * n; g < 0; ++g) {
    const double v = std::min({1.0, st.zl.slot_or_ambient(g).hi(), st.y.slot(g).hi()});
    st.y.set_slot(g, bound(v));
  }
  return st;
}

FloquetOutcome floquet_bound(const Region& r, int n_floquet, int m_floquet) {
  FloquetState st = initial_state(r);
  for (int outer = 0;; ++outer) {
    try {
      st = extend_y(std::move(st), r);
      st = build_z(std::move(st), r);
    } catch (const DegenerateDenominator&) {
      return {FloquetKind::Inconclusive, kInf, outer};
    }
    st = build_zl(std::move(st), r);
    st = refine_zl(std::move(st), r, m_floquet);
    if (st.lambda_max < 1.0) {
      return {outer == 0 ? FloquetKind::BoundedStable : FloquetKind::StableByContradiction, st.lambda_max, outer};
    }
    if (outer == n_floquet) return {FloquetKind::Inconclusive, st.lambda_max, outer};
    st = reseed_y(std::move(st));
  }
}

}  // namespace wright
