#include "wright/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wright {

namespace {

constexpr double kHistory = 0.5;
constexpr double kPeriodTol = 1e-6;

struct Hermite {
  double x0, x1, d0, d1, h;
  [[nodiscard]] double operator()(double s) const {
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * x0 + (s3 - 2 * s2 + s) * h * d0 + (-2 * s3 + 3 * s2) * x1 + (s3 - s2) * h * d1;
  }
};

// Grid samples x_k = x(k h) for k in [-m, N], plus derivative samples.
struct Run {
  int m;
  double h;
  std::vector<double> x;
  std::vector<double> dx;
  [[nodiscard]] double t(std::size_t j) const { return (static_cast<double>(j) - m) * h; }
  [[nodiscard]] Hermite cell(std::size_t j) const { return {x[j], x[j + 1], dx[j], dx[j + 1], h}; }
};

int steps_per_unit(double step) {
  if (!(step > 0) || step > 1) throw std::invalid_argument("simulate: step must lie in (0, 1]");
  const long m = std::lround(1.0 / step);
  if (std::abs(static_cast<double>(m) * step - 1.0) > 1e-12) throw std::invalid_argument("simulate: step must divide 1");
  return static_cast<int>(m);
}

Run run(double alpha, double horizon, double step) {
  if (!(alpha > 0)) throw std::invalid_argument("simulate: alpha must be positive");
  if (!(horizon > 0)) throw std::invalid_argument("simulate: horizon must be positive");
  const int m = steps_per_unit(step);
  const double h = 1.0 / m;
  const auto n = static_cast<std::size_t>(std::ceil(horizon * m));
  Run r{m, h, std::vector<double>(m + n + 1, kHistory), std::vector<double>(m + n + 1, 0.0)};
  auto f = [alpha](double y) { return -alpha * std::expm1(y); };
  // Index j holds t = (j - m) h; history occupies j in [0, m].
  r.dx[m] = f(r.x[0]);
  for (std::size_t j = m; j < m + n; ++j) {
    const std::size_t d = j - m;  // delayed cell [t_j - 1, t_j + h - 1]
    const double mid = r.cell(d)(0.5);
    r.x[j + 1] = r.x[j] + h / 6 * (f(r.x[d]) + 4 * f(mid) + f(r.x[d + 1]));
    r.dx[j + 1] = f(r.x[d + 1]);
  }
  return r;
}

// Crossing time inside cell j by bisection on the Hermite interpolant.
double crossing(const Run& r, std::size_t j) {
  const Hermite c = r.cell(j);
  double a = 0, b = 1;
  const bool up = c.x0 < c.x1;
  for (int it = 0; it < 60; ++it) {
    const double s = 0.5 * (a + b);
    ((c(s) < 0) == up ? a : b) = s;
  }
  return r.t(j) + 0.5 * (a + b) * r.h;
}

}  // namespace

SimulatedOrbit::SimulatedOrbit(double alpha, double step, double t_first, std::vector<double> x,
                               std::vector<double> dx, double z0, double q, double qbar)
    : alpha_(alpha), step_(step), t_first_(t_first), x_(std::move(x)), dx_(std::move(dx)), z0_(z0), q_(q),
      qbar_(qbar) {}

double SimulatedOrbit::operator()(double t) const {
  const double p = period();
  double s = std::fmod(t, p);
  if (s < 0) s += p;
  const double u = (z0_ + s - t_first_) / step_;
  auto j = static_cast<std::size_t>(std::clamp(std::floor(u), 0.0, static_cast<double>(x_.size() - 2)));
  const Hermite c{x_[j], x_[j + 1], dx_[j], dx_[j + 1], step_};
  return c(u - static_cast<double>(j));
}

double SimulatedOrbit::min_value() const {
  double lo = 0;
  const int samples = static_cast<int>(std::ceil(period() / step_)) * 4;
  for (int k = 0; k <= samples; ++k) lo = std::min(lo, (*this)(period() * k / samples));
  return lo;
}

double SimulatedOrbit::max_slope() const {
  double s = 0;
  for (double d : dx_) s = std::max(s, std::abs(d));
  return s;
}

Trajectory integrate(double alpha, double horizon, double step) {
  const Run r = run(alpha, horizon, step);
  Trajectory tr;
  for (std::size_t j = 0; j < r.x.size(); ++j) {
    tr.t.push_back(r.t(j));
    tr.x.push_back(r.x[j]);
  }
  return tr;
}

Simulation simulate_sops(double alpha, double horizon, double step) {
  if (!(alpha > std::numbers::pi / 2)) throw std::invalid_argument("simulate: alpha must exceed pi/2");
  const Run r = run(alpha, horizon, step);

  std::vector<double> ups, downs;
  for (std::size_t j = r.m; j + 1 < r.x.size(); ++j) {
    if (r.x[j] < 0 && r.x[j + 1] >= 0) ups.push_back(crossing(r, j));
    if (r.x[j] >= 0 && r.x[j + 1] < 0) downs.push_back(crossing(r, j));
  }
  if (ups.size() < 4) throw NonConvergence("simulate: too few oscillations within the horizon");
  const std::size_t k = ups.size();
  const double p1 = ups[k - 1] - ups[k - 2];
  const double p2 = ups[k - 2] - ups[k - 3];
  if (std::abs(p1 - p2) > kPeriodTol) throw NonConvergence("simulate: period has not settled");

  const double z0 = ups[k - 2];
  const auto down = std::upper_bound(downs.begin(), downs.end(), z0);
  if (down == downs.end() || *down > ups[k - 1]) throw NonConvergence("simulate: no downward crossing in last cycle");
  const double q = *down - z0;
  const double qbar = ups[k - 1] - *down;

  // Keep samples covering [z0 - step, z0 + period + step].
  const auto first = static_cast<std::size_t>(std::floor(z0 / r.h)) + r.m - 1;
  const auto last = std::min(r.x.size() - 1, static_cast<std::size_t>(std::ceil(ups[k - 1] / r.h)) + r.m + 1);
  std::vector<double> xs(r.x.begin() + first, r.x.begin() + last + 1);
  std::vector<double> ds(r.dx.begin() + first, r.dx.begin() + last + 1);
  SimulatedOrbit orbit(alpha, r.h, r.t(first), std::move(xs), std::move(ds), z0, q, qbar);

  Trajectory tr;
  for (std::size_t j = 0; j < r.x.size(); ++j) {
    tr.t.push_back(r.t(j));
    tr.x.push_back(r.x[j]);
  }
  return {std::move(tr), std::move(orbit)};
}

}  // namespace wright
