#pragma once

#include <Eigen/Dense>

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmg {

struct IntegratorConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
  double initial_step = 1e-3;
  int max_steps = 2'000'000;  // between consecutive output times

  void validate() const;
};

/// Integration failure with the time reached and the work done so far.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t_reached, long rhs_evaluations)
      : std::runtime_error(what + " (t=" + std::to_string(t_reached) +
                           ", rhs evaluations=" + std::to_string(rhs_evaluations) + ")"),
        t_reached_(t_reached),
        rhs_evaluations_(rhs_evaluations) {}

  double t_reached() const { return t_reached_; }
  long rhs_evaluations() const { return rhs_evaluations_; }

 private:
  double t_reached_;
  long rhs_evaluations_;
};

struct IntegrationStats {
  long rhs_evaluations = 0;
};

/// Uniform grid of `samples` points on [0, t_end]; samples >= 2.
std::vector<double> uniform_grid(double t_end, int samples);

/// Adaptive Runge-Kutta-Fehlberg 7(8) integration of y' = f(t, y), sampled
/// exactly at `times` (increasing, times[0] is the initial time).
template <int N>
std::vector<Eigen::Matrix<double, N, 1>> integrate_on_grid(
    const std::function<Eigen::Matrix<double, N, 1>(double, const Eigen::Matrix<double, N, 1>&)>& rhs,
    const Eigen::Matrix<double, N, 1>& y0, const std::vector<double>& times, const IntegratorConfig& cfg,
    IntegrationStats* stats = nullptr) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, N>;
  using Vec = Eigen::Matrix<double, N, 1>;
  cfg.validate();
  if (times.size() < 2) throw std::invalid_argument("integrate_on_grid needs at least two output times");

  long evals = 0;
  auto system = [&](const State& y, State& dydt, double t) {
    ++evals;
    const Vec d = rhs(t, Eigen::Map<const Vec>(y.data()));
    if (!d.allFinite()) throw IntegrationError("right-hand side is not finite", t, evals);
    Eigen::Map<Vec>(dydt.data()) = d;
  };

  std::vector<Vec> out;
  out.reserve(times.size());
  double last_t = times.front();
  auto observer = [&](const State& y, double t) {
    out.emplace_back(Eigen::Map<const Vec>(y.data()));
    last_t = t;
  };

  State y{};
  Eigen::Map<Vec>(y.data()) = y0;
  auto stepper = odeint::make_controlled(cfg.abs_tol, cfg.rel_tol, odeint::runge_kutta_fehlberg78<State>());
  const double dt = std::min(cfg.initial_step, times[1] - times[0]);
  try {
    odeint::integrate_times(stepper, system, y, times.begin(), times.end(), dt, observer,
                            odeint::max_step_checker(cfg.max_steps));
  } catch (const IntegrationError&) {
    throw;
  } catch (const std::exception& e) {
    throw IntegrationError(std::string("integrator failed: ") + e.what(), last_t, evals);
  }
  if (stats) stats->rhs_evaluations = evals;
  return out;
}

}  // namespace pmg
