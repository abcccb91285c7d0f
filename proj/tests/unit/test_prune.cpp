#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "properties.hpp"
#include "wright/prune.hpp"
#include "wright/seed.hpp"
#include "wright/simulate.hpp"

using wright::GridFn;
using wright::Interval;
using wright::Pruned;
using wright::Region;

namespace {

Region make(Interval q, Interval qbar, Interval m, Interval alpha, int n, Interval fill) {
  const auto [lo, hi] = wright::enclosure_domain(q, qbar, n);
  GridFn enc(n, lo, hi, fill, fill);
  enc.set_point(0, Interval(0.0));
  return Region(q, qbar, m, alpha, std::move(enc));
}

bool same(const Region& a, const Region& b) {
  return a.q() == b.q() && a.qbar() == b.qbar() && a.m() == b.m() && a.enclosure() == b.enclosure();
}

// Region around the simulated orbit's kappa, cut from the short seed.
Region orbit_box(const wright::SimulatedOrbit& x, const Interval& alpha, int n, double pad) {
  Region r = wright::seed_short(alpha, wright::AprioriParams{}, n);
  r.set_q(Interval(x.q() - pad, x.q() + pad));
  r.set_qbar(Interval(x.qbar() - pad, x.qbar() + pad));
  r.set_m(Interval(x.max_value() - pad, x.max_value() + pad));
  wright::fit_domain(r);
  return r;
}

}  // namespace

TEST_CASE("step1 clamps the sign pattern and intersects x(1) with I_M") {
  const int n = 8;
  const Region r = make(Interval(1.5, 1.6), Interval(2.0, 2.1), Interval(0.2, 0.9), Interval(2.0), n,
                        Interval(-5, 0.5));
  const Pruned p = wright::step1_sign(r);
  REQUIRE(p.has_value());
  const GridFn& f = p->enclosure();
  CHECK(f.point(16).hi() <= 0);     // t = 2 in [q_max, L_min]
  CHECK(f.cell(24).hi() <= 0);      // (3, 3.125)
  CHECK(f.point(-8).hi() <= 0);     // t = -1 in [-qbar_min, 0]
  CHECK(f.point(4).lo() >= 0);      // t = 0.5 in [0, q_min]
  CHECK(f.point(-24).lo() >= 0);    // t = -3 in [-L_min, -qbar_max]
  CHECK(f.point(32).lo() >= 0);     // t = 4 in [L_max, L_min + q_min]
  CHECK(f.point(n) == Interval(0.2, 0.5));
  const Pruned again = wright::step1_sign(*p);
  REQUIRE(again.has_value());
  CHECK(same(*again, *p));
}

TEST_CASE("step1 detects a sign contradiction") {
  Region r = make(Interval(1.5, 1.6), Interval(2.0, 2.1), Interval(0.2, 0.9), Interval(2.0), 8, Interval(-5, 5));
  r.enclosure().set_point(4, Interval(-1, -0.5));
  CHECK_FALSE(wright::step1_sign(r).has_value());
}

TEST_CASE("step2 with a vanishing delayed field keeps the forward value") {
  const int n = 8;
  Region r = make(Interval(1.5, 1.6), Interval(2.0, 2.1), Interval(0, 1), Interval(2.0), n, Interval(-5, 5));
  GridFn& f = r.enclosure();
  const int i = 4;
  f.set_point(i - n, Interval(0.0));
  f.set_cell(i - n, Interval(0.0));
  f.set_point(i - n + 1, Interval(0.0));
  f.set_point(i, Interval(0.3));
  const Pruned p = wright::step2_integrate(r, {i, i});
  REQUIRE(p.has_value());
  CHECK(p->enclosure().point(i + 1) == Interval(0.3));
  CHECK(p->enclosure().cell(i) == Interval(0.3));
}

TEST_CASE("step2 cell values cover every intermediate time (storage example)") {
  // X on [-1, 0] with n_time = 4 as in the worked storage example.
  const int n = 4;
  const double alpha = 2.0;
  Region r = make(Interval(1.5, 1.6), Interval(2.0, 2.1), Interval(0, 5), Interval(alpha), n, Interval(-5, 5));
  GridFn& f = r.enclosure();
  f.set_point(-4, Interval(-2.0, -1.2));
  f.set_cell(-4, Interval(-2.0, -0.9));
  f.set_point(-3, Interval(-1.6, -0.9));
  f.set_cell(-3, Interval(-1.6, -0.6));
  f.set_point(-2, Interval(-1.2, -0.6));
  f.set_cell(-2, Interval(-1.2, -0.3));
  f.set_point(-1, Interval(-0.8, -0.3));
  f.set_cell(-1, Interval(-0.8, 0.0));
  f.set_point(0, Interval(0.0));
  const Pruned p = wright::step2_integrate(r, {0, 0});
  REQUIRE(p.has_value());
  // Delayed values on [-1, -3/4] range over [-2.0, -0.9].
  const double rate_lo = alpha * (1 - std::exp(-0.9));
  const double rate_hi = alpha * (1 - std::exp(-2.0));
  const Interval cell = p->enclosure().cell(0);
  const Interval end = p->enclosure().point(1);
  for (int k = 1; k < 100; ++k) {
    const double s = 0.25 * k / 100.0;
    CHECK(cell.lo() <= s * rate_lo);
    CHECK(cell.hi() >= s * rate_hi);
  }
  CHECK(end.lo() <= 0.25 * rate_lo);
  CHECK(end.hi() >= 0.25 * rate_hi);
  CHECK(end.lo() == doctest::Approx(0.25 * rate_lo).epsilon(1e-12));
  CHECK(end.hi() == doctest::Approx(0.25 * rate_hi).epsilon(1e-12));
  // Stored cell is the hull from s = 0, not just the end value.
  CHECK(cell.lo() <= 0.0);
  CHECK(cell.hi() == doctest::Approx(0.25 * rate_hi).epsilon(1e-12));
}

TEST_CASE("step3 moves the zero window and intersects the maximum") {
  const int n = 8;
  Region r = make(Interval(1.5, 2.0), Interval(2.0, 2.1), Interval(0.3, 0.9), Interval(2.0), n, Interval(-1, 1));
  GridFn& f = r.enclosure();
  for (int i = 12; i < 14; ++i) {
    f.set_point(i, Interval(0.1, 1));
    f.set_cell(i, Interval(0.1, 1));
  }
  f.set_point(n, Interval(0.2, 0.4));
  const Pruned p = wright::step3_zero_and_max(r);
  REQUIRE(p.has_value());
  CHECK(p->q() == Interval(1.75, 2.0));
  CHECK(p->m() == Interval(0.3, 0.4));

  for (int g = f.first_slot(); g <= f.last_slot(); ++g)
    if (g >= 24 && g <= 32) f.set_slot(g, Interval(0.1, 1));
  CHECK_FALSE(wright::step3_zero_and_max(r).has_value());
}

TEST_CASE("step4 leaves constants and intersects with an exact translate") {
  const int n = 8;
  const Region c = make(Interval(1.5, 1.6), Interval(2.0, 2.1), Interval(0, 1), Interval(2.0), n, Interval(-2, 2));
  Region cc = c;
  cc.enclosure().set_point(0, Interval(-2, 2));
  const Pruned pc = wright::step4_periodicity(cc);
  REQUIRE(pc.has_value());
  CHECK(pc->enclosure() == cc.enclosure());

  Region r = make(Interval(1.5), Interval(2.0), Interval(0, 1), Interval(2.0), n, Interval(-2, 2));
  GridFn& f = r.enclosure();
  for (int g = f.first_slot(); g <= f.last_slot(); ++g)
    f.set_slot(g, Interval(-2 + 0.01 * ((g % 7 + 7) % 7), 2 - 0.02 * ((g % 5 + 5) % 5)));
  const Pruned p = wright::step4_periodicity(r);
  REQUIRE(p.has_value());
  const int shift = 2 * 28;  // L = 3.5 = 28 / 8
  for (int g = f.first_slot(); g + shift <= f.last_slot(); ++g) {
    const auto want = intersect(f.slot(g), f.slot(g + shift));
    REQUIRE(want.has_value());
    CHECK(p->enclosure().slot(g) == *want);
  }
}

TEST_CASE("step6 compares the dip after the first zero with the threshold") {
  Region r = make(Interval(1.5, 1.6), Interval(2.0, 2.1), Interval(0, 1), Interval(2.0), 8, Interval(0, 1));
  CHECK(wright::step6_walther(r));
  CHECK_FALSE(wright::prune(r, 1).has_value());
  Region deep = make(Interval(1.5, 1.6), Interval(2.0, 2.1), Interval(0, 1), Interval(2.0), 8, Interval(-9, 1));
  CHECK_FALSE(wright::step6_walther(deep));
  CHECK(wright::step5_infeasible(Pruned{}));
  CHECK_FALSE(wright::step5_infeasible(Pruned{deep}));
}

TEST_CASE("prune rejects a nonpositive pass count") {
  const Region r = make(Interval(1.5, 1.6), Interval(2.0, 2.1), Interval(0, 1), Interval(2.0), 8, Interval(-9, 1));
  CHECK_THROWS(wright::prune(r, 0));
}

TEST_CASE("simulated orbit survives four prune passes on its own box") {
  const wright::Simulation sim = wright::simulate_sops(2.0, 400.0, 1.0 / 256);
  const Region r = orbit_box(sim.orbit, Interval(2.0), 32, 0.01);
  REQUIRE(oracle::enclosure_contains(r.enclosure(), sim.orbit, props::kOrbitTol).ok());
  const Pruned p = wright::prune(r, 4);
  REQUIRE(p.has_value());
  CHECK(oracle::kappa_in(*p, sim.orbit, props::kOrbitTol));
  const auto chk = oracle::enclosure_contains(p->enclosure(), sim.orbit, props::kOrbitTol);
  INFO("miss " << chk.worst << " at t = " << chk.at);
  CHECK(chk.ok());
}

TEST_CASE("containment does not depend on the step order") {
  const wright::Simulation sim = wright::simulate_sops(2.0, 400.0, 1.0 / 256);
  const Region r0 = orbit_box(sim.orbit, Interval(2.0), 32, 0.02);
  using Step = Pruned (*)(const Region&);
  const Step steps[] = {&wright::step1_sign, static_cast<Step>(&wright::step2_integrate), &wright::step3_zero_and_max,
                        &wright::step4_periodicity};
  int order[] = {0, 1, 2, 3};
  int perms = 0;
  do {
    Pruned cur = r0;
    for (int pass = 0; pass < 2 && cur; ++pass)
      for (int k : order) cur = cur ? steps[k](*cur) : cur;
    REQUIRE(cur.has_value());
    CHECK(oracle::kappa_in(*cur, sim.orbit, props::kOrbitTol));
    CHECK(oracle::enclosure_contains(cur->enclosure(), sim.orbit, props::kOrbitTol).ok());
    ++perms;
  } while (std::next_permutation(order, order + 4));
  CHECK(perms == 24);
}

TEST_CASE("repeated pruning reaches a fixed point that prune leaves unchanged") {
  const wright::Simulation sim = wright::simulate_sops(2.0, 400.0, 1.0 / 256);
  Pruned cur = orbit_box(sim.orbit, Interval(2.0), 16, 0.02);
  bool fixed = false;
  for (int k = 0; k < 400 && cur && !fixed; ++k) {
    Pruned next = wright::prune(*cur, 1);
    REQUIRE(next.has_value());
    fixed = same(*next, *cur);
    cur = std::move(next);
  }
  REQUIRE(fixed);
  const Pruned once = wright::prune(*cur, 1);
  REQUIRE(once.has_value());
  CHECK(same(*once, *cur));
}

TEST_CASE("finer grids give tighter enclosures at shared grid points") {
  const wright::Simulation sim = wright::simulate_sops(2.0, 400.0, 1.0 / 256);
  const Pruned coarse = wright::prune(orbit_box(sim.orbit, Interval(2.0), 16, 0.02), 1);
  const Pruned fine = wright::prune(orbit_box(sim.orbit, Interval(2.0), 32, 0.02), 1);
  REQUIRE(coarse.has_value());
  REQUIRE(fine.has_value());
  int checked = 0, contained = 0;
  for (int i = coarse->enclosure().i_lo(); i <= coarse->enclosure().i_hi(); ++i) {
    if (!fine->enclosure().has_point(2 * i)) continue;
    ++checked;
    const Interval c = coarse->enclosure().closed_cell(std::min(i, coarse->enclosure().i_hi() - 1));
    if (hull(c, coarse->enclosure().point(i)).contains(fine->enclosure().point(2 * i))) ++contained;
  }
  CHECK(checked > 0);
  CHECK(contained == checked);
}

TEST_CASE("prune contraction on random regions, reduced size") {
  const props::Result r = props::prune_contraction(150, 23);
  INFO(r.detail);
  CHECK(r.ok);
}
