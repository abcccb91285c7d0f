#include "wright/interval.hpp"

#include <algorithm>
#include <iomanip>
#include <numbers>

namespace wright {

namespace {

constexpr double kMax = std::numeric_limits<double>::max();
// Below this magnitude fma residuals may be inexact; fall back to a blind nudge.
constexpr double kTiny = 0x1p-960;

// Knuth's TwoSum: returns the rounding error of s = a + b exactly.
double two_sum_err(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

double nudge_down(double v, int ulps) {
  for (int i = 0; i < ulps; ++i) v = next_down(v);
  return v;
}

double nudge_up(double v, int ulps) {
  for (int i = 0; i < ulps; ++i) v = next_up(v);
  return v;
}

}  // namespace

double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isinf(s) && std::isfinite(a) && std::isfinite(b)) return s > 0 ? kMax : s;
    return s;
  }
  return two_sum_err(a, b, s) < 0 ? next_down(s) : s;
}

double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isinf(s) && std::isfinite(a) && std::isfinite(b)) return s < 0 ? -kMax : s;
    return s;
  }
  return two_sum_err(a, b, s) > 0 ? next_up(s) : s;
}

double sub_down(double a, double b) { return add_down(a, -b); }
double sub_up(double a, double b) { return add_up(a, -b); }

double mul_down(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) {
    if (std::isfinite(a) && std::isfinite(b)) return p > 0 ? kMax : p;
    return p;
  }
  if (std::fabs(p) < kTiny) return next_down(p);
  return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

double mul_up(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) {
    if (std::isfinite(a) && std::isfinite(b)) return p < 0 ? -kMax : p;
    return p;
  }
  if (std::fabs(p) < kTiny) return next_up(p);
  return std::fma(a, b, -p) > 0 ? next_up(p) : p;
}

double div_down(double a, double b) {
  if (a == 0.0) return 0.0;
  if (std::isinf(b)) return std::isinf(a) ? -kInf : 0.0;  // limit value at the corner
  const double q = a / b;
  if (!std::isfinite(q)) {
    if (std::isfinite(a)) return q > 0 ? kMax : q;
    return q;
  }
  if (std::fabs(q) < kTiny || std::fabs(b) < kTiny) return next_down(q);
  const double r = std::fma(-q, b, a);  // a - q*b, exact
  const bool below = (r < 0) != (b < 0) && r != 0;
  return below ? next_down(q) : q;
}

double div_up(double a, double b) { return -div_down(-a, b); }

Interval::Interval(double point) : lo_(point), hi_(point) {
  if (std::isnan(point) || std::isinf(point))
    throw std::invalid_argument("Interval: point value must be finite");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi || lo == kInf || hi == -kInf)
    throw std::invalid_argument("Interval: requires lo <= hi");
}

double Interval::mid() const {
  if (lo_ == -kInf && hi_ == kInf) return 0.0;
  if (lo_ == -kInf) return -kMax;
  if (hi_ == kInf) return kMax;
  return 0.5 * lo_ + 0.5 * hi_;
}

Interval operator+(const Interval& x, const Interval& y) {
  return {add_down(x.lo(), y.lo()), add_up(x.hi(), y.hi())};
}

Interval operator-(const Interval& x, const Interval& y) {
  return {sub_down(x.lo(), y.hi()), sub_up(x.hi(), y.lo())};
}

Interval operator-(const Interval& x) { return {-x.hi(), -x.lo()}; }

Interval operator*(const Interval& x, const Interval& y) {
  const double a = x.lo(), b = x.hi(), c = y.lo(), d = y.hi();
  const double lo = std::min({mul_down(a, c), mul_down(a, d), mul_down(b, c), mul_down(b, d)});
  const double hi = std::max({mul_up(a, c), mul_up(a, d), mul_up(b, c), mul_up(b, d)});
  return {lo, hi};
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains(0.0)) throw DivisionByZeroInterval();
  const double a = x.lo(), b = x.hi(), c = y.lo(), d = y.hi();
  const double lo = std::min({div_down(a, c), div_down(a, d), div_down(b, c), div_down(b, d)});
  const double hi = std::max({div_up(a, c), div_up(a, d), div_up(b, c), div_up(b, d)});
  return {lo, hi};
}

Interval scale(const Interval& x, double c) { return x * Interval(c); }

Interval exp(const Interval& x) {
  auto lower = [](double v) {
    if (v == 0.0) return 1.0;
    if (v == -kInf) return 0.0;
    return std::max(0.0, nudge_down(std::exp(v), kExpUlps));
  };
  auto upper = [](double v) {
    if (v == 0.0) return 1.0;
    if (v == kInf) return kInf;
    return nudge_up(std::exp(v), kExpUlps);
  };
  return {lower(x.lo()), upper(x.hi())};
}

Interval log(const Interval& x) {
  if (!(x.lo() > 0.0)) throw LogNonPositive();
  auto lower = [](double v) { return v == 1.0 ? 0.0 : nudge_down(std::log(v), kLogUlps); };
  auto upper = [](double v) {
    if (v == 1.0) return 0.0;
    if (v == kInf) return kInf;
    return nudge_up(std::log(v), kLogUlps);
  };
  return {lower(x.lo()), upper(x.hi())};
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return {0.0, std::max(-x.lo(), x.hi())};
}

Interval min_elt(const Interval& x, const Interval& y) {
  return {std::min(x.lo(), y.lo()), std::min(x.hi(), y.hi())};
}

Interval max_elt(const Interval& x, const Interval& y) {
  return {std::max(x.lo(), y.lo()), std::max(x.hi(), y.hi())};
}

Interval hull(const Interval& x, const Interval& y) {
  return {std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi())};
}

std::optional<Interval> intersect(const Interval& x, const Interval& y) {
  const double lo = std::max(x.lo(), y.lo());
  const double hi = std::min(x.hi(), y.hi());
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi);
}

double width(const Interval& x) { return sub_up(x.hi(), x.lo()); }

Interval half_pi() {
  constexpr double h = std::numbers::pi / 2;
  return {next_down(h), next_up(h)};
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(17) << '[' << x.lo() << ", " << x.hi() << ']';
  os.flags(flags);
  os.precision(prec);
  return os;
}

}  // namespace wright
