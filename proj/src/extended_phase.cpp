#include "pmg/extended_phase.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pmg {

namespace {

constexpr std::array<std::pair<PhaseCoord, PhaseCoord>, 5> kCanonicalPairs = {{
    {PhaseCoord::x, PhaseCoord::Px},
    {PhaseCoord::y, PhaseCoord::Py},
    {PhaseCoord::Ex, PhaseCoord::pix},
    {PhaseCoord::Ey, PhaseCoord::piy},
    {PhaseCoord::B, PhaseCoord::beta},
}};

template <class T>
T& member(PhaseVars<T>& s, PhaseCoord c) {
  switch (c) {
    case PhaseCoord::x: return s.x;
    case PhaseCoord::y: return s.y;
    case PhaseCoord::Px: return s.Px;
    case PhaseCoord::Py: return s.Py;
    case PhaseCoord::Ex: return s.Ex;
    case PhaseCoord::Ey: return s.Ey;
    case PhaseCoord::pix: return s.pix;
    case PhaseCoord::piy: return s.piy;
    case PhaseCoord::B: return s.B;
    case PhaseCoord::beta: return s.beta;
    case PhaseCoord::t: return s.t;
  }
  throw std::out_of_range("unknown phase coordinate");
}

PhaseVars<PhaseJet> seed_jets(const ExtendedPhaseState& s) {
  PhaseVars<PhaseJet> j;
  ExtendedPhaseState copy = s;
  for (int i = 0; i < kJetDim; ++i) {
    const auto c = static_cast<PhaseCoord>(i);
    member(j, c) = PhaseJet::variable(member(copy, c), i);
  }
  return j;
}

PhaseVars<PhaseJet> constant_jets(const ExtendedPhaseState& s) {
  PhaseVars<PhaseJet> j;
  ExtendedPhaseState copy = s;
  for (int i = 0; i < kJetDim; ++i) {
    const auto c = static_cast<PhaseCoord>(i);
    member(j, c) = PhaseJet(member(copy, c));
  }
  return j;
}

double value_at(const Observable& f, const ExtendedPhaseState& s) { return f.eval(constant_jets(s)).v; }

}  // namespace

void ParticleParams::validate() const {
  if (!(m0 > 0.0) || !std::isfinite(m0)) throw std::invalid_argument("rest mass must be positive");
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("speed of light must be positive");
  if (!std::isfinite(q)) throw std::invalid_argument("charge must be finite");
}

PhaseVector to_vector(const ExtendedPhaseState& s) {
  PhaseVector v;
  v << s.x, s.y, s.Px, s.Py, s.Ex, s.Ey, s.pix, s.piy, s.B, s.beta;
  return v;
}

ExtendedPhaseState from_vector(const PhaseVector& v, double t) {
  ExtendedPhaseState s;
  s.x = v[0];
  s.y = v[1];
  s.Px = v[2];
  s.Py = v[3];
  s.Ex = v[4];
  s.Ey = v[5];
  s.pix = v[6];
  s.piy = v[7];
  s.B = v[8];
  s.beta = v[9];
  s.t = t;
  return s;
}

double hamiltonian(const ExtendedPhaseState& s, const ParticleParams& pp) { return hamiltonian_expr(s, pp); }

CoalgebraPoint moment_map(const ExtendedPhaseState& s, const ParticleParams& pp) {
  const auto f = moment_expr(s, pp);
  CoalgebraPoint xi;
  for (int i = 0; i < kDim; ++i) xi.coords[i] = f[static_cast<std::size_t>(i)];
  return xi;
}

CoalgebraPoint moment_map_at(const ExtendedPhaseState& s, const ParticleParams& pp, double algebra_time) {
  ExtendedPhaseState frozen = s;
  frozen.t = algebra_time;
  return moment_map(frozen, pp);
}

// ---------------------------------------------------------------------------

Observable coordinate_observable(PhaseCoord coord) {
  static constexpr std::array<const char*, kJetDim> names = {"x",  "y",   "Px", "Py",   "Ex", "Ey",
                                                             "pix", "piy", "B",  "beta", "t"};
  return {names[static_cast<std::size_t>(coord)], [coord](const PhaseVars<PhaseJet>& s) {
            auto copy = s;
            return member(copy, coord);
          }};
}

Observable moment_observable(Generator g, const ParticleParams& pp) {
  return {"moment_" + std::string(generator_name(g)),
          [g, pp](const PhaseVars<PhaseJet>& s) { return moment_expr(s, pp)[static_cast<std::size_t>(slot(g))]; }};
}

Observable hamiltonian_observable(const ParticleParams& pp) {
  return {"hamiltonian", [pp](const PhaseVars<PhaseJet>& s) { return hamiltonian_expr(s, pp); }};
}

ObservableGradient gradient(const Observable& f, const ExtendedPhaseState& s, GradientMode mode) {
  ObservableGradient g;
  if (mode == GradientMode::Analytic) {
    const PhaseJet j = f.eval(seed_jets(s));
    g.value = j.v;
    g.d = j.d;
    return g;
  }
  g.value = value_at(f, s);
  for (int i = 0; i < kJetDim; ++i) {
    const auto c = static_cast<PhaseCoord>(i);
    ExtendedPhaseState plus = s;
    ExtendedPhaseState minus = s;
    const double h = 1e-6 * (1.0 + std::abs(member(plus, c)));
    member(plus, c) += h;
    member(minus, c) -= h;
    g.d[i] = (value_at(f, plus) - value_at(f, minus)) / (2.0 * h);
  }
  return g;
}

double poisson_contract(const ObservableGradient& df, const ObservableGradient& dg) {
  double sum = 0.0;
  for (const auto& [q, p] : kCanonicalPairs) sum += df.partial(q) * dg.partial(p) - df.partial(p) * dg.partial(q);
  return sum;
}

double extended_bracket(const Observable& f, const Observable& g, const ExtendedPhaseState& s, GradientMode mode) {
  return poisson_contract(gradient(f, s, mode), gradient(g, s, mode));
}

// ---------------------------------------------------------------------------

BracketTableReport bracket_table_check(int samples, std::uint64_t seed, const ParticleParams& pp,
                                       GradientMode mode) {
  if (samples < 1) throw std::invalid_argument("bracket_table_check needs at least one sample");
  pp.validate();
  const StructureConstants sc = StructureConstants::poincare_maxwell();
  std::vector<Observable> obs;
  for (Generator g : kGenerators) obs.push_back(moment_observable(g, pp));

  std::mt19937_64 rng(seed);
  BracketTableReport report;
  report.samples = samples;
  for (int n = 0; n < samples; ++n) {
    const ExtendedPhaseState s = random_phase_state(rng);
    std::array<ObservableGradient, kDim> grads;
    for (int i = 0; i < kDim; ++i) grads[static_cast<std::size_t>(i)] = gradient(obs[static_cast<std::size_t>(i)], s, mode);

    std::size_t pair = 0;
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j, ++pair) {
        const double lhs = poisson_contract(grads[static_cast<std::size_t>(i)], grads[static_cast<std::size_t>(j)]);
        double rhs = 0.0;
        for (int k = 0; k < kDim; ++k) rhs += sc.value(i, j, k, pp.c) * grads[static_cast<std::size_t>(k)].value;
        const double dev = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
        report.pair_max[pair] = std::max(report.pair_max[pair], dev);
        report.max_deviation = std::max(report.max_deviation, dev);
      }
  }
  return report;
}

std::array<double, kDim> motion_invariance_check(int samples, std::uint64_t seed, const ParticleParams& pp) {
  pp.validate();
  const Observable h = hamiltonian_observable(pp);
  std::mt19937_64 rng(seed);
  std::array<double, kDim> worst{};
  for (int n = 0; n < samples; ++n) {
    const ExtendedPhaseState s = random_phase_state(rng);
    const ObservableGradient dh = gradient(h, s);
    for (Generator g : kGenerators) {
      const ObservableGradient df = gradient(moment_observable(g, pp), s);
      const double residual = poisson_contract(df, dh) + df.partial(PhaseCoord::t);
      const double scale = 1.0 + df.d.head<kPhaseDim>().norm() * dh.d.head<kPhaseDim>().norm();
      auto& w = worst[static_cast<std::size_t>(slot(g))];
      w = std::max(w, std::abs(residual) / scale);
    }
  }
  return worst;
}

Report extended_phase_report(int samples, std::uint64_t seed, const ParticleParams& pp) {
  Report r;
  r.push_back({"bracket_table_analytic", bracket_table_check(samples, seed, pp).max_deviation, 1e-10});
  r.push_back({"bracket_table_finite_difference",
               bracket_table_check(samples, seed, pp, GradientMode::FiniteDifference).max_deviation, 1e-6});
  const auto inv = motion_invariance_check(samples, seed + 1, pp);
  for (Generator g : kGenerators)
    r.push_back({"motion_invariance_" + std::string(generator_name(g)), inv[static_cast<std::size_t>(slot(g))], 1e-8});
  return r;
}

}  // namespace pmg
