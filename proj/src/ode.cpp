#include "pmg/ode.hpp"

#include <cmath>

namespace pmg {

void IntegratorConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw std::invalid_argument("integrator tolerances must be positive");
  if (!(initial_step > 0.0)) throw std::invalid_argument("initial step must be positive");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be positive");
}

std::vector<double> uniform_grid(double t_end, int samples) {
  if (samples < 2) throw std::invalid_argument("a time grid needs at least two samples");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be positive");
  std::vector<double> t(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) t[static_cast<std::size_t>(i)] = t_end * i / (samples - 1);
  t.back() = t_end;
  return t;
}

}  // namespace pmg
