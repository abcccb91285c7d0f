#include <doctest.h>

#include <random>

#include "wright/region.hpp"

using wright::GridFn;
using wright::Interval;
using wright::Region;

namespace {

Region box(Interval q, Interval qbar, Interval m) {
  const auto [lo, hi] = wright::enclosure_domain(q, qbar, 8);
  GridFn enc(8, lo, hi, Interval(-1, 1), Interval(-1, 1));
  enc.set_point(0, Interval(0.0));
  return Region(q, qbar, m, Interval(2.0, 2.1), std::move(enc));
}

}  // namespace

TEST_CASE("construction enforces slow oscillation") {
  CHECK_THROWS(box(Interval(1.0, 2.0), Interval(1.5, 2.0), Interval(0, 1)));
  CHECK_THROWS(box(Interval(1.5, 2.0), Interval(0.5, 2.0), Interval(0, 1)));
  Region r = box(Interval(1.5, 2.0), Interval(1.5, 2.0), Interval(0, 1));
  CHECK_THROWS(r.set_q(Interval(1.0, 1.2)));
  CHECK_THROWS(r.set_qbar(Interval(0.9, 1.2)));
  CHECK(r.period() == Interval(3.0, 4.0));
  CHECK(r.enclosure().point(0) == Interval(0.0));
}

TEST_CASE("diameter is the widest side") {
  CHECK(wright::diameter(box(Interval(1.5, 2.5), Interval(1.5, 3.5), Interval(0, 1))) == 2.0);
  CHECK(wright::diameter(box(Interval(1.5), Interval(2.0), Interval(0.5))) == 0.0);
}

TEST_CASE("subdivide bisects the widest side") {
  const Region r = box(Interval(1.5, 2.5), Interval(1.5, 3.5), Interval(0, 1));
  const auto [a, b] = wright::subdivide(r);
  CHECK(a.qbar() == Interval(1.5, 2.5));
  CHECK(b.qbar() == Interval(2.5, 3.5));
  CHECK(a.q() == r.q());
  CHECK(b.m() == r.m());
  CHECK(a.enclosure() == r.enclosure());
  CHECK(b.alpha() == r.alpha());
}

TEST_CASE("ties split the lowest axis") {
  const auto [a, b] = wright::subdivide(box(Interval(1.5, 2.5), Interval(2.0, 3.0), Interval(0, 1)));
  CHECK(a.q() == Interval(1.5, 2.0));
  CHECK(b.q() == Interval(2.0, 2.5));
  CHECK(a.qbar() == Interval(2.0, 3.0));
  CHECK_THROWS(wright::subdivide(box(Interval(1.5), Interval(2.0), Interval(0.5))));
}

TEST_CASE("subdivision is exhaustive and never grows the diameter") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double q0 = 1.01 + u(rng), qb0 = 1.01 + 3 * u(rng), m0 = 3 * u(rng);
    const Region r = box(Interval(q0, q0 + u(rng)), Interval(qb0, qb0 + 2 * u(rng)), Interval(m0, m0 + u(rng)));
    if (wright::diameter(r) == 0) continue;
    const auto [a, b] = wright::subdivide(r);
    CHECK(wright::diameter(a) <= wright::diameter(r));
    CHECK(wright::diameter(b) <= wright::diameter(r));
    for (int s = 0; s < 20; ++s) {
      const double pq = r.q().lo() + u(rng) * (r.q().hi() - r.q().lo());
      const double pb = r.qbar().lo() + u(rng) * (r.qbar().hi() - r.qbar().lo());
      const double pm = r.m().lo() + u(rng) * (r.m().hi() - r.m().lo());
      auto in = [&](const Region& c) { return c.q().contains(pq) && c.qbar().contains(pb) && c.m().contains(pm); };
      CHECK((in(a) || in(b)));
    }
    for (int axis = 0; axis < 3; ++axis) CHECK(hull(a.coord(axis), b.coord(axis)) == r.coord(axis));
  }
}

TEST_CASE("terminal test uses the upper end of qbar") {
  const Region small_short = box(Interval(1.5, 1.51), Interval(2.0, 2.01), Interval(0.5, 0.51));
  CHECK(wright::is_terminal(small_short, 0.02, 0.25));
  const Region long_box = box(Interval(1.5, 1.6), Interval(3.5, 3.6), Interval(0.5, 0.6));
  CHECK(wright::is_terminal(long_box, 0.02, 0.25));
  const Region short_box = box(Interval(1.5, 1.6), Interval(2.0, 2.1), Interval(0.5, 0.6));
  CHECK_FALSE(wright::is_terminal(short_box, 0.05, 0.25));
  const Region straddle = box(Interval(1.5, 1.6), Interval(2.95, 3.05), Interval(0.5, 0.6));
  CHECK(wright::is_terminal(straddle, 0.05, 0.25));
}

TEST_CASE("enclosure domain and fit") {
  const auto [lo, hi] = wright::enclosure_domain(Interval(1.5, 2.0), Interval(2.0, 2.5), 16);
  CHECK(lo == -(5 + 2) * 16);
  CHECK(hi == (5 + 2 + 2) * 16);
  Region r = box(Interval(1.5, 2.0), Interval(2.0, 2.5), Interval(0, 1));
  r.set_qbar(Interval(2.0, 4.5));
  wright::fit_domain(r);
  const auto [lo2, hi2] = wright::enclosure_domain(r.q(), r.qbar(), 8);
  CHECK(r.enclosure().i_lo() == lo2);
  CHECK(r.enclosure().i_hi() == hi2);
  CHECK(r.enclosure().point(0) == Interval(0.0));
}
