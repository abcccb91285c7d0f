#include "wright/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wright {

namespace {

void require_slow(const Interval& gap, const char* what) {
  if (!(gap.lo() > 1.0)) throw std::invalid_argument(std::string("Region: ") + what + " must exceed 1");
}

}  // namespace

Region::Region(Interval q, Interval qbar, Interval m, Interval alpha, GridFn enclosure)
    : q_(q), qbar_(qbar), m_(m), alpha_(alpha), enclosure_(std::move(enclosure)) {
  require_slow(q_, "q");
  require_slow(qbar_, "qbar");
}

void Region::set_q(const Interval& q) {
  require_slow(q, "q");
  q_ = q;
}

void Region::set_qbar(const Interval& qbar) {
  require_slow(qbar, "qbar");
  qbar_ = qbar;
}

const Interval& Region::coord(int axis) const {
  switch (axis) {
    case 0: return q_;
    case 1: return qbar_;
    case 2: return m_;
    default: throw std::out_of_range("Region::coord");
  }
}

double diameter(const Region& r) {
  return std::max({width(r.q()), width(r.qbar()), width(r.m())});
}

std::pair<Region, Region> subdivide(const Region& r) {
  int axis = 0;
  for (int k = 1; k < 3; ++k)
    if (width(r.coord(k)) > width(r.coord(axis))) axis = k;
  const Interval side = r.coord(axis);
  if (!(side.hi() > side.lo())) throw std::invalid_argument("subdivide: region has zero diameter");
  const double mid = side.mid();
  Region a = r;
  Region b = r;
  const Interval left(side.lo(), mid);
  const Interval right(mid, side.hi());
  switch (axis) {
    case 0: a.set_q(left); b.set_q(right); break;
    case 1: a.set_qbar(left); b.set_qbar(right); break;
    default: a.set_m(left); b.set_m(right); break;
  }
  return {std::move(a), std::move(b)};
}

bool is_terminal(const Region& r, double eps1, double eps2) {
  const double d = diameter(r);
  if (r.qbar().hi() < 3.0) return d < eps1;
  return d < eps2;
}

std::pair<int, int> enclosure_domain(const Interval& q, const Interval& qbar, int n_time) {
  const double l_max = (q + qbar).hi();
  const double left = std::ceil(l_max) + 2;
  const double right = std::ceil(l_max) + std::ceil(q.hi()) + 2;
  return {-static_cast<int>(left) * n_time, static_cast<int>(right) * n_time};
}

void fit_domain(Region& r) {
  const auto [lo, hi] = enclosure_domain(r.q(), r.qbar(), r.enclosure().n_time());
  if (lo != r.enclosure().i_lo() || hi != r.enclosure().i_hi()) r.enclosure() = r.enclosure().resized(lo, hi);
}

}  // namespace wright
