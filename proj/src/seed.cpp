#include "wright/seed.hpp"

#include <algorithm>
#include <stdexcept>

#include "wright/prune.hpp"

namespace wright {

namespace {

const Interval kOne(1.0);

// Integration in the long-period seed is restricted to base points in [-4, 4].
constexpr int kSeedReach = 4;

void require_alpha(const Interval& alpha) {
  if (!(alpha.lo() > 1.0)) throw std::invalid_argument("seed: alpha must exceed 1");
}

}  // namespace

Region seed_short(const Interval& alpha, const AprioriParams& p, int n_time) {
  require_alpha(alpha);
  const Interval q_range = q_qbar_ranges(alpha, p.j0).first;
  const Interval qbar((kOne + kOne / Interval(alpha.hi())).lo(), 3.0);
  const double ceiling = p_ceiling(alpha, p.i0, n_time);
  const double m_min = log(kOne + log(alpha / half_pi()) / alpha).lo();
  const Interval global = global_extrema(alpha);
  const Interval bound(global.lo(), std::min(global.hi(), ceiling));

  const auto [lo, hi] = enclosure_domain(q_range, qbar, n_time);
  GridFn enc(n_time, lo, hi, bound, bound);
  enc.set_point(0, Interval(0.0));
  return Region(q_range, qbar, Interval(m_min, ceiling), alpha, std::move(enc));
}

std::optional<Region> seed_long(const Interval& alpha, const AprioriParams& p, int n_time, int n_period) {
  require_alpha(alpha);
  const int n = n_time;
  const Interval q_range(q_lower_bound(alpha), (Interval(2.0) + kOne / Interval(alpha.lo())).hi());
  const double qbar_ceiling = long_qbar_ceiling(alpha, p.j0).hi();
  if (qbar_ceiling < 3.0) return std::nullopt;
  const double ceiling = p_ceiling(alpha, p.i0, n);
  const Interval global = global_extrema(alpha);
  const Interval bound(global.lo(), std::min(global.hi(), ceiling));

  const int reach = (kSeedReach + 2) * n;
  GridFn enc(n, -reach, reach, bound, bound);

  // Lower envelope p_{i0} for t < 0, upper envelope -t a_{j0} on [-1, 0).
  const GridFn lower = p_fn(alpha, p.i0, n, -reach, 0);
  const Interval a = a_seq(alpha, p.j0);
  const Interval nn(static_cast<double>(n));
  auto set = [&](int g, double lo_v, double hi_v) -> bool {
    const double lo_c = std::max(lo_v, bound.lo());
    const double hi_c = std::min(hi_v, bound.hi());
    if (lo_c > hi_c) return false;
    auto v = intersect(enc.slot(g), Interval(lo_c, hi_c));
    if (!v) return false;
    enc.set_slot(g, *v);
    return true;
  };
  for (int g = enc.first_slot(); g < 0; ++g) {
    double hi_v = ceiling;
    const int i = g >> 1;
    if (i >= -n) {
      const Interval t = (g & 1) == 0 ? Interval(static_cast<double>(i)) / nn
                                      : hull(Interval(static_cast<double>(i)) / nn,
                                             Interval(static_cast<double>(i + 1)) / nn);
      hi_v = (-t * a).hi();
    }
    if (!set(g, lower.slot(g).lo(), hi_v)) return std::nullopt;
  }
  enc.set_point(0, Interval(0.0));

  Region r(q_range, Interval(3.0, qbar_ceiling), Interval(0.0, ceiling), alpha, std::move(enc));

  Pruned cur = step1_sign(r);
  for (int k = 0; k < n_period && cur; ++k) cur = step2_integrate(*cur, {-kSeedReach * n, kSeedReach * n});
  if (cur) cur = step3_zero_and_max(*cur);
  if (!cur) return std::nullopt;

  const PeriodBound pb = period_bound(cur->enclosure(), cur->q());
  if (pb.qbar_hi && *pb.qbar_hi < 3.0) return std::nullopt;
  const double qbar_lo = std::max(3.0, pb.qbar_lo);
  const double qbar_hi = pb.qbar_hi ? std::min(qbar_ceiling, *pb.qbar_hi) : qbar_ceiling;
  if (qbar_lo > qbar_hi) return std::nullopt;
  cur->set_qbar(Interval(qbar_lo, qbar_hi));
  fit_domain(*cur);
  return cur;
}

bool seed_long_empty_split(const Interval& alpha, const AprioriParams& p, int n_time, int n_period, int pieces) {
  if (pieces < 1) throw std::invalid_argument("seed_long_empty_split: pieces must be positive");
  const double w = alpha.hi() - alpha.lo();
  double lo = alpha.lo();
  for (int k = 1; k <= pieces; ++k) {
    const double hi = k == pieces ? alpha.hi() : alpha.lo() + w * k / pieces;
    if (seed_long(Interval(lo, std::max(lo, hi)), p, n_time, n_period)) return false;
    lo = hi;
  }
  return true;
}

std::vector<Region> seed_pair(const Interval& alpha, const AprioriParams& p, int n_time, int n_period) {
  std::vector<Region> out;
  out.push_back(seed_short(alpha, p, n_time));
  if (auto k2 = seed_long(alpha, p, n_time, n_period)) out.push_back(std::move(*k2));
  return out;
}

}  // namespace wright
