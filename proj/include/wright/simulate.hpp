#pragma once

#include <stdexcept>
#include <vector>

namespace wright {

/// No attracting periodic cycle was detected within the horizon.
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One period of a numerically converged SOPS, shifted so that t = 0 is an
/// upward zero crossing. Not rigorous: test oracle only.
class SimulatedOrbit {
 public:
  /// x and dx sample the trajectory on t_first + k * step; z0 is the chosen
  /// upward crossing, q and qbar the following zero gaps.
  SimulatedOrbit(double alpha, double step, double t_first, std::vector<double> x, std::vector<double> dx,
                 double z0, double q, double qbar);

  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double q() const { return q_; }
  [[nodiscard]] double qbar() const { return qbar_; }
  [[nodiscard]] double period() const { return q_ + qbar_; }
  /// x(1), the maximum.
  [[nodiscard]] double max_value() const { return (*this)(1.0); }
  [[nodiscard]] double min_value() const;
  [[nodiscard]] double max_slope() const;

  /// x(t) for any t, by periodic extension and cubic Hermite interpolation.
  double operator()(double t) const;

 private:
  double alpha_;
  double step_;
  double t_first_;
  std::vector<double> x_;
  std::vector<double> dx_;
  double z0_;
  double q_;
  double qbar_;
};

struct Trajectory {
  std::vector<double> t;
  std::vector<double> x;
};

struct Simulation {
  Trajectory trajectory;  // full run, sampled every step
  SimulatedOrbit orbit;
};

/// Method of steps with Simpson quadrature and a Hermite midpoint (order 4)
/// from the constant history x = 0.5 on [-1, 0]. step must divide 1.
/// Throws std::invalid_argument for alpha <= pi/2 or a bad step, and
/// NonConvergence when consecutive periods do not settle to 1e-6.
Simulation simulate_sops(double alpha, double horizon, double step);

/// Fixed-step trajectory without cycle detection (any alpha > 0).
Trajectory integrate(double alpha, double horizon, double step);

}  // namespace wright
