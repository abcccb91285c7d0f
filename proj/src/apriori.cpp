#include "wright/apriori.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace wright {

namespace {

const Interval kOne(1.0);

GridFn p_first(const Interval& alpha, int n_time, int i_lo, int i_hi) {
  GridFn p(n_time, i_lo, i_hi, Interval(0.0), Interval::entire());
  const Interval n(static_cast<double>(n_time));
  for (int i = i_lo; i <= i_hi; ++i) {
    const Interval t = Interval(static_cast<double>(i)) / n;
    p.set_point(i, alpha * t);
    if (p.has_cell(i)) p.set_cell(i, alpha * hull(t, Interval(static_cast<double>(i + 1)) / n));
  }
  return p;
}

// One application of p -> -alpha int_0^t (e^{p(s-1)} - 1) ds on [i_lo, i_hi].
GridFn p_next(const Interval& alpha, const GridFn& prev, int i_lo, int i_hi) {
  const int n = prev.n_time();
  const Interval dt = prev.delta();
  const Interval step(0.0, dt.hi());
  GridFn p(n, i_lo, i_hi, Interval(0.0), Interval::entire());
  auto integrand = [&](int c) { return exp(prev.closed_cell(c - n)) - kOne; };

  // Forward from 0: S = int_0^{j/n}.
  Interval s(0.0);
  for (int j = 0; j <= i_hi; ++j) {
    const Interval g = integrand(j);
    if (p.has_point(j)) p.set_point(j, -alpha * s);
    if (p.has_cell(j)) p.set_cell(j, -alpha * (s + step * g));
    s = s + dt * g;
  }
  // Backward from 0: T = int_{j/n}^0, so p(j/n) = alpha * T.
  Interval tsum(0.0);
  for (int j = -1; j >= i_lo; --j) {
    const Interval g = integrand(j);
    if (p.has_cell(j)) p.set_cell(j, alpha * (tsum + step * g));
    tsum = tsum + dt * g;
    if (p.has_point(j)) p.set_point(j, alpha * tsum);
  }
  return p;
}

GridFn p_recursive(const Interval& alpha, int i, int n_time, int i_lo, int i_hi) {
  if (i == 1) return p_first(alpha, n_time, i_lo, i_hi);
  const GridFn prev = p_recursive(alpha, i - 1, n_time, std::min(i_lo, 0) - n_time - 1,
                                  std::max(i_hi, 0) - n_time + 1);
  return p_next(alpha, prev, i_lo, i_hi);
}

}  // namespace

Interval global_extrema(const Interval& alpha) {
  if (!(alpha.lo() > 0)) throw std::invalid_argument("global_extrema: alpha must be positive");
  const Interval a(alpha.hi());
  const Interval low = -(a * (exp(a) - kOne));
  return {low.lo(), alpha.hi()};
}

GridFn p_fn(const Interval& alpha, int i, int n_time, int i_lo, int i_hi) {
  if (i < 1) throw std::invalid_argument("p_fn: i must be >= 1");
  if (i_hi > n_time) throw std::invalid_argument("p_fn: domain must lie in (-inf, 1]");
  return p_recursive(alpha, i, n_time, i_lo, i_hi);
}

double p_ceiling(const Interval& alpha, int i, int n_time) {
  return p_fn(alpha, i, n_time, n_time, n_time).point(n_time).hi();
}

Interval a_seq(const Interval& alpha, int j) {
  if (j < 1) throw std::invalid_argument("a_seq: j must be >= 1");
  Interval a = -(alpha - kOne);
  for (int k = 1; k < j; ++k) a = alpha * (exp(a) - kOne);
  return a;
}

double q_lower_bound(const Interval& alpha) {
  const Interval w = alpha + exp(-alpha) - kOne;
  const Interval ratio = w / (exp(w) - kOne);
  return (kOne + ratio / alpha).lo();
}

Interval long_qbar_ceiling(const Interval& alpha, int j0) {
  const Interval a = a_seq(alpha, j0);
  return Interval(2.0) + abs((exp(alpha) - kOne) / (exp(a) - kOne));
}

std::pair<Interval, Interval> q_qbar_ranges(const Interval& alpha, int j0) {
  const double q_lo = q_lower_bound(alpha);
  const double q_hi = alpha.lo() >= 2.0 ? 2.0 : (Interval(2.0) + kOne / Interval(alpha.lo())).hi();
  const double qbar_lo = (kOne + kOne / Interval(alpha.hi())).lo();
  const double qbar_hi = std::max(3.0, long_qbar_ceiling(alpha, j0).hi());
  return {Interval(q_lo, q_hi), Interval(qbar_lo, qbar_hi)};
}

double walther_min(const Interval& alpha) {
  return (-log(Interval(alpha.lo()) / half_pi())).hi();
}

PeriodBound period_bound(const GridFn& f, const Interval& q_range) {
  const int n = f.n_time();
  const Interval nn(static_cast<double>(n));
  const GridFn pos = f.map([](const Interval& x) { return max_elt(exp(x) - kOne, Interval(0.0)); });
  const GridFn neg = f.map([](const Interval& x) { return max_elt(kOne - exp(x), Interval(0.0)); });

  // Each q in I_q lies in some [k/n, (k+1)/n) with k in [k_lo, k_hi]; the
  // windows [q-1, q] and [q, q+1] are then sandwiched between grid windows.
  const int k_lo = static_cast<int>(std::floor((Interval(q_range.lo()) * nn).lo()));
  const int k_hi = static_cast<int>(std::floor((Interval(q_range.hi()) * nn).hi()));

  PeriodBoundTerms t;
  t.u_plus = -kInf;
  t.u_minus_1 = -kInf;
  t.l_plus = kInf;
  t.l_minus_1 = kInf;
  for (int k = k_lo; k <= k_hi; ++k) {
    t.u_plus = std::max(t.u_plus, riemann_upper(pos, k - n, k + 1));
    t.l_plus = std::min(t.l_plus, riemann_lower(pos, k + 1 - n, k));
    t.u_minus_1 = std::max(t.u_minus_1, riemann_upper(neg, k, k + n + 1));
    t.l_minus_1 = std::min(t.l_minus_1, riemann_lower(neg, k + 1, k + n));
  }
  t.m = f.eval(q_range + kOne).lo();

  PeriodBound out;
  out.terms = t;

  const Interval em = t.m == -kInf ? Interval(0.0) : exp(Interval(t.m));
  const Interval den_lo = abs(em - kOne);
  if (!den_lo.contains(0.0) && std::isfinite(t.u_minus_1) && std::isfinite(t.l_plus)) {
    const Interval num(sub_down(t.l_plus, t.u_minus_1));
    out.qbar_lo = (Interval(2.0) + num / den_lo).lo();
  }

  const double u_back = f.point_or_ambient(-n).hi();
  if (u_back < 0 && std::isfinite(t.u_plus) && std::isfinite(t.l_minus_1)) {
    const Interval den_hi = abs(exp(Interval(u_back)) - kOne);
    const Interval num(sub_up(t.u_plus, t.l_minus_1));
    const double hi = (Interval(2.0) + num / den_hi).hi();
    if (std::isfinite(hi)) out.qbar_hi = hi;
  }
  return out;
}

}  // namespace wright
