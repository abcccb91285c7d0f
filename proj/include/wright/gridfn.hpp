#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "wright/interval.hpp"

namespace wright {

/// Inclusive range of grid slots. Slot 2i is the grid point t = i/n,
/// slot 2i+1 is the open cell (i/n, (i+1)/n).
struct SlotRange {
  int first = 0;
  int last = -1;
  [[nodiscard]] bool empty() const { return first > last; }
};

/// Piecewise-constant interval-valued function on the uniform grid {i/n}.
///
/// Point values and open-cell values are stored separately, interleaved by
/// slot. Outside the stored index range [i_lo, i_hi] the function takes the
/// ambient value, which must enclose whatever the function bounds there.
class GridFn {
 public:
  GridFn(int n_time, int i_lo, int i_hi, Interval fill, Interval ambient);

  [[nodiscard]] int n_time() const { return n_time_; }
  [[nodiscard]] int i_lo() const { return i_lo_; }
  [[nodiscard]] int i_hi() const { return i_hi_; }
  [[nodiscard]] const Interval& ambient() const { return ambient_; }
  /// Enclosure of the cell width 1/n.
  [[nodiscard]] Interval delta() const;

  [[nodiscard]] bool has_point(int i) const { return i >= i_lo_ && i <= i_hi_; }
  [[nodiscard]] bool has_cell(int i) const { return i >= i_lo_ && i < i_hi_; }

  [[nodiscard]] const Interval& point(int i) const { return slots_[2 * (i - i_lo_)]; }
  [[nodiscard]] const Interval& cell(int i) const { return slots_[2 * (i - i_lo_) + 1]; }
  void set_point(int i, const Interval& v) { slots_[2 * (i - i_lo_)] = v; }
  void set_cell(int i, const Interval& v) { slots_[2 * (i - i_lo_) + 1] = v; }

  /// Point value, or ambient when i is outside the stored range.
  [[nodiscard]] Interval point_or_ambient(int i) const;
  /// Hull of point i, cell i and point i+1: the value on the closed cell.
  [[nodiscard]] Interval closed_cell(int i) const;

  [[nodiscard]] int first_slot() const { return 2 * i_lo_; }
  [[nodiscard]] int last_slot() const { return 2 * i_hi_; }
  [[nodiscard]] const Interval& slot(int g) const { return slots_[g - 2 * i_lo_]; }
  void set_slot(int g, const Interval& v) { slots_[g - 2 * i_lo_] = v; }
  [[nodiscard]] Interval slot_or_ambient(int g) const;
  /// Hull of the slot values in r, including ambient for slots outside storage.
  [[nodiscard]] Interval hull_slots(SlotRange r) const;

  /// Slots whose support meets the closed time interval t.
  [[nodiscard]] SlotRange slots_meeting(const Interval& t) const;
  /// Slots whose support lies entirely inside the closed time interval t.
  [[nodiscard]] SlotRange slots_within(const Interval& t) const;

  /// F(t) for a set of times: hull of every value whose support meets t.
  [[nodiscard]] Interval eval(const Interval& t) const;
  [[nodiscard]] double sup_over(double a, double b) const;
  [[nodiscard]] double inf_over(double a, double b) const;

  /// Same function on another index range; new slots take the ambient value.
  [[nodiscard]] GridFn resized(int i_lo, int i_hi) const;

  /// Slotwise containment on the stored range (ambient included).
  [[nodiscard]] bool contains(const GridFn& other) const;

  template <class F>
  [[nodiscard]] GridFn map(F&& f) const {
    GridFn out(n_time_, i_lo_, i_hi_, Interval(0.0), f(ambient_));
    for (std::size_t k = 0; k < slots_.size(); ++k) out.slots_[k] = f(slots_[k]);
    return out;
  }

  [[nodiscard]] const std::vector<Interval>& slots() const { return slots_; }

  bool operator==(const GridFn&) const = default;

 private:
  int n_time_;
  int i_lo_;
  int i_hi_;
  Interval ambient_;
  std::vector<Interval> slots_;
};

/// Slotwise intersection. std::nullopt when any intersection is empty.
std::optional<GridFn> refine_pointwise(const GridFn& f, const GridFn& g);

/// G(t) containing the hull of f(t + L) over L in shift, on f's stored range.
GridFn shift_hull(const GridFn& f, const Interval& shift);

/// Directed Riemann sums of f over [ia/n, ib/n], one term per closed cell.
double riemann_upper(const GridFn& f, int ia, int ib);
double riemann_lower(const GridFn& f, int ia, int ib);

/// Grid index of a time that must be an exact multiple of 1/n.
int grid_index(double t, int n_time);

/// Line-oriented dump: a header "n_time i_lo i_hi ambient_lo ambient_hi"
/// followed by "i point_lo point_hi cell_lo cell_hi" per index.
void write_text(std::ostream& os, const GridFn& f);
GridFn read_text(std::istream& is);

}  // namespace wright
