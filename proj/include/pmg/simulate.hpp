#pragma once

#include "pmg/config.hpp"
#include "pmg/lorentz.hpp"
#include "pmg/orbit_dynamics.hpp"
#include "pmg/report.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pmg {

enum class SimMode { Lorentz, Orbit, Compare };

SimMode parse_sim_mode(std::string_view s);

inline constexpr std::string_view kLorentzCsvHeader = "t,x,y,Px,Py,Ex,Ey,pix,piy,B,beta,H,vx,vy";
inline constexpr std::string_view kOrbitCsvHeader = "t,Ex,Ey,Px,Py,Kx,Ky,H,C0,C1,C2";

std::string lorentz_csv(const ClassicalTrajectory& traj);
std::string orbit_csv(const OrbitTrajectory& traj, double c);

struct SimulationResult {
  std::vector<std::pair<std::string, std::string>> files;  // (suffix, content)
  Report report;
};

/// Orbit start point: canonical moment map of the configured initial state.
OrbitChartPoint initial_chart_point(const RunConfig& cfg);

SimulationResult run_simulation(const RunConfig& cfg, SimMode mode);

}  // namespace pmg
