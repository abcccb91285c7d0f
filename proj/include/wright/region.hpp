#pragma once

#include <utility>

#include "wright/gridfn.hpp"
#include "wright/interval.hpp"

namespace wright {

/// A box K = I_q x I_qbar x I_M in the reduction space together with the
/// bounding functions [l_K, u_K] that every SOPS mapping into K obeys.
///
/// q is the gap from the zero at t = 0 to the next zero, qbar the following
/// negative excursion, and m the maximum x(1). The period lies in q + qbar.
class Region {
 public:
  Region(Interval q, Interval qbar, Interval m, Interval alpha, GridFn enclosure);

  [[nodiscard]] const Interval& q() const { return q_; }
  [[nodiscard]] const Interval& qbar() const { return qbar_; }
  [[nodiscard]] const Interval& m() const { return m_; }
  [[nodiscard]] const Interval& alpha() const { return alpha_; }
  [[nodiscard]] const GridFn& enclosure() const { return enclosure_; }
  [[nodiscard]] GridFn& enclosure() { return enclosure_; }

  /// I_L = I_q + I_qbar.
  [[nodiscard]] Interval period() const { return q_ + qbar_; }

  void set_q(const Interval& q);
  void set_qbar(const Interval& qbar);
  void set_m(const Interval& m) { m_ = m; }

  [[nodiscard]] const Interval& coord(int axis) const;

 private:
  Interval q_;
  Interval qbar_;
  Interval m_;
  Interval alpha_;
  GridFn enclosure_;
};

/// Max side width (infinity-norm diameter) of the box.
double diameter(const Region& r);

/// Bisect the widest side at its midpoint; ties go to the lowest axis
/// (q, then qbar, then m). Both halves keep the parent's enclosure.
std::pair<Region, Region> subdivide(const Region& r);

/// Region small enough to stop branching: eps1 applies when the whole qbar
/// side is below 3, eps2 otherwise.
bool is_terminal(const Region& r, double eps1, double eps2);

/// Stored index range [-(ceil L_max + 2), ceil L_max + ceil q_max + 2] * n.
std::pair<int, int> enclosure_domain(const Interval& q, const Interval& qbar, int n_time);

/// Crop or extend the stored enclosure to enclosure_domain of the box.
void fit_domain(Region& r);

}  // namespace wright
