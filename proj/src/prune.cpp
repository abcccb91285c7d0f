#include "wright/prune.hpp"

#include <algorithm>
#include <stdexcept>

#include "wright/apriori.hpp"

namespace wright {

namespace {

const Interval kOne(1.0);

// Intersects every stored slot of range r with bound; false on emptiness.
bool clamp_slots(GridFn& f, SlotRange r, const Interval& bound) {
  const int a = std::max(r.first, f.first_slot());
  const int b = std::min(r.last, f.last_slot());
  for (int g = a; g <= b; ++g) {
    auto v = intersect(f.slot(g), bound);
    if (!v) return false;
    f.set_slot(g, *v);
  }
  return true;
}

bool clamp_window(GridFn& f, double a, double b, const Interval& bound) {
  if (!(a <= b)) return true;
  return clamp_slots(f, f.slots_within(Interval(a, b)), bound);
}

bool refine_slot(GridFn& f, int g, const Interval& candidate) {
  if (g < f.first_slot() || g > f.last_slot()) return true;
  auto v = intersect(f.slot(g), candidate);
  if (!v) return false;
  f.set_slot(g, *v);
  return true;
}

}  // namespace

Pruned step1_sign(const Region& r) {
  Region out = r;
  GridFn& f = out.enclosure();
  const Interval nonpos(-kInf, 0.0);
  const Interval nonneg(0.0, kInf);
  const Interval period = r.period();
  const double l_min = period.lo();
  const double l_max = period.hi();
  const double q_min = r.q().lo();
  const double q_max = r.q().hi();

  // x <= 0 on (-qbar, 0) and (q, L); x >= 0 on (-L, -qbar), (0, q), (L, L + q).
  bool ok = clamp_window(f, -r.qbar().lo(), 0.0, nonpos) && clamp_window(f, q_max, l_min, nonpos) &&
            clamp_window(f, -l_min, -r.qbar().hi(), nonneg) && clamp_window(f, 0.0, q_min, nonneg) &&
            clamp_window(f, l_max, add_down(l_min, q_min), nonneg);
  if (ok) ok = refine_slot(f, 2 * f.n_time(), r.m());
  if (!ok) return std::nullopt;
  return out;
}

Pruned step2_integrate(const Region& r, IndexWindow window) {
  Region out = r;
  GridFn& f = out.enclosure();
  const int n = f.n_time();
  const Interval dt = f.delta();
  const Interval step(0.0, dt.hi());
  const Interval minus_alpha = -r.alpha();
  auto field = [&](int c) { return minus_alpha * (exp(f.closed_cell(c)) - kOne); };

  const int first = std::max(window.first, f.i_lo());
  const int last = std::min(window.last, f.i_hi());
  for (int i = first; i <= last; ++i) {
    const Interval rate = field(i - n);
    const Interval x0 = f.point(i);
    if (!refine_slot(f, 2 * i + 1, x0 + step * rate)) return std::nullopt;
    if (!refine_slot(f, 2 * i + 2, x0 + dt * rate)) return std::nullopt;
  }
  for (int i = last; i >= first; --i) {
    const Interval rate = field(i - n - 1);
    const Interval x0 = f.point(i);
    if (!refine_slot(f, 2 * i - 1, x0 - step * rate)) return std::nullopt;
    if (!refine_slot(f, 2 * i - 2, x0 - dt * rate)) return std::nullopt;
  }
  return out;
}

Pruned step2_integrate(const Region& r) {
  return step2_integrate(r, {r.enclosure().i_lo(), r.enclosure().i_hi()});
}

Pruned step3_zero_and_max(const Region& r) {
  Region out = r;
  const GridFn& f = r.enclosure();
  const Interval n(static_cast<double>(f.n_time()));
  const SlotRange s = f.slots_meeting(r.q());

  // Left edge of a slot's support and right edge, rounded outward.
  auto left_edge = [&](int g) { return (Interval(static_cast<double>(g >> 1)) / n).lo(); };
  auto right_edge = [&](int g) { return (Interval(static_cast<double>((g + 1) >> 1)) / n).hi(); };

  int lo_slot = s.first;
  while (lo_slot <= s.last && f.slot_or_ambient(lo_slot).lo() > 0) ++lo_slot;
  int hi_slot = s.last;
  while (hi_slot >= s.first && f.slot_or_ambient(hi_slot).hi() < 0) --hi_slot;
  if (lo_slot > s.last || hi_slot < s.first) return std::nullopt;

  const double q_lo = std::max(r.q().lo(), left_edge(lo_slot));
  const double q_hi = std::min(r.q().hi(), right_edge(hi_slot));
  if (q_lo > q_hi) return std::nullopt;
  out.set_q(Interval(q_lo, q_hi));

  auto m = intersect(r.m(), f.point_or_ambient(f.n_time()));
  if (!m) return std::nullopt;
  out.set_m(*m);
  return out;
}

Pruned step4_periodicity(const Region& r) {
  auto refined = refine_pointwise(r.enclosure(), shift_hull(r.enclosure(), r.period()));
  if (!refined) return std::nullopt;
  Region out = r;
  out.enclosure() = std::move(*refined);
  return out;
}

bool step6_walther(const Region& r) {
  const double lowest = r.enclosure().eval(r.q() + kOne).lo();
  return lowest > walther_min(r.alpha());
}

Pruned prune(const Region& r, int n_iter) {
  if (n_iter < 1) throw std::invalid_argument("prune: n_iter must be >= 1");
  Pruned cur = r;
  for (int pass = 0; pass < n_iter; ++pass) {
    cur = step1_sign(*cur);
    if (cur) cur = step2_integrate(*cur);
    if (cur) cur = step3_zero_and_max(*cur);
    if (cur) cur = step4_periodicity(*cur);
    if (step5_infeasible(cur) || step6_walther(*cur)) return std::nullopt;
  }
  return cur;
}

}  // namespace wright
