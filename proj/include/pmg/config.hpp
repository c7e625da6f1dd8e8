#pragma once

#include "pmg/extended_phase.hpp"
#include "pmg/ode.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pmg {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simulation run settings.  Text form is one `key = value` per line, '#' starts
/// a comment.  Defaults describe the unit cyclotron (q = m0 = c = B = 1, |p| = 1).
struct RunConfig {
  ParticleParams particle;
  ExtendedPhaseState initial;  // fields live in initial.Ex / Ey / B
  double t_end = 10.0;
  int samples = 1000;
  IntegratorConfig integrator;
  std::uint64_t seed = 42;
  double threshold = 1e-7;  // equivalence tolerance for compare mode
  bool check_energy = true;
  bool check_equivalence = true;

  RunConfig();

  /// Sets one key; throws ConfigError for unknown keys or malformed values.
  void set(std::string_view key, std::string_view value);

  /// Throws ConfigError when positivity or sample-count constraints fail.
  void validate() const;

  /// Full text form, parseable by parse_config.
  std::string to_text() const;
};

RunConfig parse_config(std::string_view text, RunConfig base = RunConfig{});
RunConfig load_config(const std::string& path, RunConfig base = RunConfig{});

/// Applies PMG_SEED from the environment when present.
void apply_environment(RunConfig& cfg);

}  // namespace pmg
