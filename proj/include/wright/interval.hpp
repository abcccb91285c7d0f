#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace wright {

struct DivisionByZeroInterval : std::domain_error {
  DivisionByZeroInterval() : std::domain_error("interval division: denominator contains zero") {}
};

struct LogNonPositive : std::domain_error {
  LogNonPositive() : std::domain_error("interval log: argument not strictly positive") {}
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double next_up(double x) { return std::nextafter(x, kInf); }
inline double next_down(double x) { return std::nextafter(x, -kInf); }

// Directed scalar operations. Each returns the exact result when it is
// representable and otherwise the neighbouring double in the stated direction.
double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);
double div_up(double a, double b);

/// Closed interval [lo, hi] over the extended reals with binary64 endpoints.
///
/// All arithmetic is outward rounded: the result of every operation contains
/// the exact image of its arguments. lo <= hi holds for every constructed
/// value; an empty set is represented by std::nullopt from intersect().
class Interval {
 public:
  constexpr Interval() = default;
  Interval(double point);  // NOLINT(google-explicit-constructor)
  Interval(double lo, double hi);

  [[nodiscard]] double lo() const { return lo_; }
  [[nodiscard]] double hi() const { return hi_; }

  [[nodiscard]] bool contains(double v) const { return lo_ <= v && v <= hi_; }
  [[nodiscard]] bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  [[nodiscard]] bool is_point() const { return lo_ == hi_; }
  [[nodiscard]] bool is_finite() const { return std::isfinite(lo_) && std::isfinite(hi_); }
  [[nodiscard]] double mid() const;

  bool operator==(const Interval&) const = default;

  /// The whole extended real line.
  static Interval entire() { return {-kInf, kInf}; }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator*(const Interval& x, const Interval& y);
Interval operator/(const Interval& x, const Interval& y);
Interval operator-(const Interval& x);

inline Interval add(const Interval& x, const Interval& y) { return x + y; }
inline Interval sub(const Interval& x, const Interval& y) { return x - y; }
inline Interval mul(const Interval& x, const Interval& y) { return x * y; }
inline Interval div(const Interval& x, const Interval& y) { return x / y; }
inline Interval neg(const Interval& x) { return -x; }
Interval scale(const Interval& x, double c);

// exp and log evaluate libm at the endpoints and widen by a fixed number of
// units in the last place; tests validate the margin against MPFR.
inline constexpr int kExpUlps = 2;
inline constexpr int kLogUlps = 2;

Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval abs(const Interval& x);
Interval min_elt(const Interval& x, const Interval& y);
Interval max_elt(const Interval& x, const Interval& y);
Interval hull(const Interval& x, const Interval& y);
std::optional<Interval> intersect(const Interval& x, const Interval& y);

inline double inf(const Interval& x) { return x.lo(); }
inline double sup(const Interval& x) { return x.hi(); }
double width(const Interval& x);

/// Enclosure of pi/2, used throughout for the Hopf threshold.
Interval half_pi();

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace wright
