#include "wright/gridfn.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wright {

namespace {

// Slot arithmetic on scaled time v = t * n. A value is "integral" when it
// lands exactly on a grid point.
int clamp_floor(double v, int lo, int hi) {
  if (!(v > lo)) return lo;
  if (!(v < hi)) return hi;
  return static_cast<int>(std::floor(v));
}

int clamp_ceil(double v, int lo, int hi) {
  if (!(v > lo)) return lo;
  if (!(v < hi)) return hi;
  return static_cast<int>(std::ceil(v));
}

bool integral(double v) { return std::isfinite(v) && std::floor(v) == v; }

struct SlotClamp {
  int lo;
  int hi;
};

// First slot meeting the closed set [v, ...).
int lower_closed(double v, SlotClamp c) {
  return 2 * clamp_floor(v, c.lo, c.hi) + (integral(v) ? 0 : 1);
}
// Last slot meeting the closed set (..., w].
int upper_closed(double w, SlotClamp c) {
  return 2 * clamp_floor(w, c.lo, c.hi) + (integral(w) ? 0 : 1);
}
// First slot meeting the open set (v, ...).
int lower_open(double v, SlotClamp c) { return 2 * clamp_floor(v, c.lo, c.hi) + 1; }
// Last slot meeting the open set (..., w).
int upper_open(double w, SlotClamp c) { return 2 * clamp_ceil(w, c.lo, c.hi) - 1; }

std::string fmt_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

double parse_double(const std::string& tok) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') throw std::runtime_error("gridfn text: bad number '" + tok + "'");
  return v;
}

}  // namespace

GridFn::GridFn(int n_time, int i_lo, int i_hi, Interval fill, Interval ambient)
    : n_time_(n_time), i_lo_(i_lo), i_hi_(i_hi), ambient_(ambient) {
  if (n_time <= 0) throw std::invalid_argument("GridFn: n_time must be positive");
  if (i_lo > i_hi) throw std::invalid_argument("GridFn: empty index range");
  slots_.assign(static_cast<std::size_t>(2 * (i_hi - i_lo) + 1), fill);
}

Interval GridFn::delta() const { return Interval(1.0) / Interval(static_cast<double>(n_time_)); }

Interval GridFn::point_or_ambient(int i) const { return has_point(i) ? point(i) : ambient_; }

Interval GridFn::closed_cell(int i) const {
  return hull_slots({2 * i, 2 * i + 2});
}

Interval GridFn::slot_or_ambient(int g) const {
  return (g >= first_slot() && g <= last_slot()) ? slot(g) : ambient_;
}

Interval GridFn::hull_slots(SlotRange r) const {
  if (r.empty()) throw std::invalid_argument("GridFn::hull_slots: empty range");
  const int a = std::max(r.first, first_slot());
  const int b = std::min(r.last, last_slot());
  const bool outside = r.first < first_slot() || r.last > last_slot();
  if (a > b) return ambient_;
  double lo = slot(a).lo();
  double hi = slot(a).hi();
  for (int g = a + 1; g <= b; ++g) {
    lo = std::min(lo, slot(g).lo());
    hi = std::max(hi, slot(g).hi());
  }
  Interval h(lo, hi);
  return outside ? hull(h, ambient_) : h;
}

SlotRange GridFn::slots_meeting(const Interval& t) const {
  const Interval scaled = t * Interval(static_cast<double>(n_time_));
  const SlotClamp c{i_lo_ - 2, i_hi_ + 2};
  return {lower_closed(scaled.lo(), c), upper_closed(scaled.hi(), c)};
}

SlotRange GridFn::slots_within(const Interval& t) const {
  const Interval n(static_cast<double>(n_time_));
  const SlotClamp c{i_lo_ - 2, i_hi_ + 2};
  const double v = t.lo() == -kInf ? -kInf : (Interval(t.lo()) * n).hi();
  const double w = t.hi() == kInf ? kInf : (Interval(t.hi()) * n).lo();
  return {2 * clamp_ceil(v, c.lo, c.hi), 2 * clamp_floor(w, c.lo, c.hi)};
}

Interval GridFn::eval(const Interval& t) const { return hull_slots(slots_meeting(t)); }

double GridFn::sup_over(double a, double b) const {
  if (a > b) throw std::invalid_argument("GridFn::sup_over: a > b");
  return eval(Interval(a, b)).hi();
}

double GridFn::inf_over(double a, double b) const {
  if (a > b) throw std::invalid_argument("GridFn::inf_over: a > b");
  return eval(Interval(a, b)).lo();
}

GridFn GridFn::resized(int i_lo, int i_hi) const {
  GridFn out(n_time_, i_lo, i_hi, ambient_, ambient_);
  for (int g = out.first_slot(); g <= out.last_slot(); ++g)
    if (g >= first_slot() && g <= last_slot()) out.set_slot(g, slot(g));
  return out;
}

bool GridFn::contains(const GridFn& other) const {
  if (other.n_time_ != n_time_) return false;
  if (!ambient_.contains(other.ambient_)) return false;
  for (int g = first_slot(); g <= last_slot(); ++g)
    if (!slot(g).contains(other.slot_or_ambient(g))) return false;
  return true;
}

std::optional<GridFn> refine_pointwise(const GridFn& f, const GridFn& g) {
  if (f.n_time() != g.n_time()) throw std::invalid_argument("refine_pointwise: n_time mismatch");
  auto amb = intersect(f.ambient(), g.ambient());
  if (!amb) return std::nullopt;
  GridFn out(f.n_time(), f.i_lo(), f.i_hi(), *amb, *amb);
  for (int s = f.first_slot(); s <= f.last_slot(); ++s) {
    auto v = intersect(f.slot(s), g.slot_or_ambient(s));
    if (!v) return std::nullopt;
    out.set_slot(s, *v);
  }
  return out;
}

GridFn shift_hull(const GridFn& f, const Interval& shift) {
  if (!shift.is_finite()) throw std::invalid_argument("shift_hull: shift must be finite");
  const Interval n(static_cast<double>(f.n_time()));
  const Interval scaled = shift * n;
  const SlotClamp c{f.i_lo() - 2, f.i_hi() + 2};
  GridFn out(f.n_time(), f.i_lo(), f.i_hi(), f.ambient(), f.ambient());

  // Both window ends are nondecreasing in the output slot, so a pair of
  // monotone deques yields every window hull in linear time.
  std::deque<int> min_lo;
  std::deque<int> max_hi;
  int next = f.first_slot();
  for (int g = f.first_slot(); g <= f.last_slot(); ++g) {
    const int i = g >> 1;  // floor division for negative g as well
    SlotRange r;
    if ((g & 1) == 0) {
      const Interval src = Interval(static_cast<double>(i)) + scaled;
      r = {lower_closed(src.lo(), c), upper_closed(src.hi(), c)};
    } else {
      const Interval src_lo = Interval(static_cast<double>(i)) + Interval(scaled.lo());
      const Interval src_hi = Interval(static_cast<double>(i + 1)) + Interval(scaled.hi());
      r = {lower_open(src_lo.lo(), c), upper_open(src_hi.hi(), c)};
    }
    const bool outside = r.first < f.first_slot() || r.last > f.last_slot();
    const int a = std::max(r.first, f.first_slot());
    const int b = std::min(r.last, f.last_slot());
    for (; next <= b; ++next) {
      while (!min_lo.empty() && f.slot(min_lo.back()).lo() >= f.slot(next).lo()) min_lo.pop_back();
      min_lo.push_back(next);
      while (!max_hi.empty() && f.slot(max_hi.back()).hi() <= f.slot(next).hi()) max_hi.pop_back();
      max_hi.push_back(next);
    }
    while (!min_lo.empty() && min_lo.front() < a) min_lo.pop_front();
    while (!max_hi.empty() && max_hi.front() < a) max_hi.pop_front();
    Interval v = f.ambient();
    if (a <= b) {
      v = Interval(f.slot(min_lo.front()).lo(), f.slot(max_hi.front()).hi());
      if (outside) v = hull(v, f.ambient());
    }
    out.set_slot(g, v);
  }
  return out;
}

double riemann_upper(const GridFn& f, int ia, int ib) {
  if (ia > ib) throw std::invalid_argument("riemann_upper: ia > ib");
  double s = 0.0;
  for (int i = ia; i < ib; ++i) s = add_up(s, f.closed_cell(i).hi());
  if (!std::isfinite(s)) return s;
  return (Interval(s) * f.delta()).hi();
}

double riemann_lower(const GridFn& f, int ia, int ib) {
  if (ia > ib) throw std::invalid_argument("riemann_lower: ia > ib");
  double s = 0.0;
  for (int i = ia; i < ib; ++i) s = add_down(s, f.closed_cell(i).lo());
  if (!std::isfinite(s)) return s;
  return (Interval(s) * f.delta()).lo();
}

int grid_index(double t, int n_time) {
  const double k = t * n_time;
  if (!integral(k) || k / n_time != t) throw std::invalid_argument("grid_index: time is not on the grid");
  return static_cast<int>(k);
}

void write_text(std::ostream& os, const GridFn& f) {
  os << f.n_time() << ' ' << f.i_lo() << ' ' << f.i_hi() << ' ' << fmt_double(f.ambient().lo()) << ' '
     << fmt_double(f.ambient().hi()) << '\n';
  for (int i = f.i_lo(); i <= f.i_hi(); ++i) {
    os << i << ' ' << fmt_double(f.point(i).lo()) << ' ' << fmt_double(f.point(i).hi());
    if (f.has_cell(i))
      os << ' ' << fmt_double(f.cell(i).lo()) << ' ' << fmt_double(f.cell(i).hi());
    else
      os << " - -";
    os << '\n';
  }
}

GridFn read_text(std::istream& is) {
  int n = 0, lo = 0, hi = 0;
  std::string a, b;
  if (!(is >> n >> lo >> hi >> a >> b)) throw std::runtime_error("gridfn text: bad header");
  GridFn f(n, lo, hi, Interval(0.0), Interval(parse_double(a), parse_double(b)));
  for (int i = lo; i <= hi; ++i) {
    int idx = 0;
    std::string pl, ph, cl, ch;
    if (!(is >> idx >> pl >> ph >> cl >> ch) || idx != i) throw std::runtime_error("gridfn text: bad row");
    f.set_point(i, Interval(parse_double(pl), parse_double(ph)));
    if (f.has_cell(i)) f.set_cell(i, Interval(parse_double(cl), parse_double(ch)));
  }
  return f;
}

}  // namespace wright
