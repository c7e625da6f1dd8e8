#include "pmg/config.hpp"
#include "pmg/report.hpp"
#include "pmg/simulate.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace pmg;

TEST(Config, Defaults) {
  const RunConfig cfg;
  EXPECT_EQ(cfg.initial.B, 1.0);
  EXPECT_EQ(cfg.initial.Px, 1.0);
  EXPECT_EQ(cfg.samples, 1000);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, ParseText) {
  const RunConfig cfg = parse_config("# cyclotron\nq = -2\n  B=0.5  # tesla\n\nsamples = 10\ncheck_energy = off\n");
  EXPECT_EQ(cfg.particle.q, -2.0);
  EXPECT_EQ(cfg.initial.B, 0.5);
  EXPECT_EQ(cfg.samples, 10);
  EXPECT_FALSE(cfg.check_energy);
  EXPECT_EQ(cfg.initial.Px, 1.0);  // untouched default
}

TEST(Config, ParseErrors) {
  EXPECT_THROW(parse_config("nonsense\n"), ConfigError);
  EXPECT_THROW(parse_config("warp = 9\n"), ConfigError);
  EXPECT_THROW(parse_config("q = 1.0x\n"), ConfigError);
  EXPECT_THROW(parse_config("samples = 2.5\n"), ConfigError);
  EXPECT_THROW(parse_config("check_energy = maybe\n"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/pmg.cfg"), ConfigError);
}

TEST(Config, Validation) {
  RunConfig cfg;
  cfg.samples = 1;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = RunConfig{};
  cfg.particle.m0 = -1.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = RunConfig{};
  cfg.integrator.rel_tol = 0.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(Config, TextRoundTrip) {
  RunConfig cfg;
  cfg.set("Ex", "0.1");
  cfg.set("seed", "7");
  cfg.set("check_equivalence", "false");
  const RunConfig back = parse_config(cfg.to_text());
  EXPECT_EQ(back.to_text(), cfg.to_text());
  EXPECT_EQ(back.initial.Ex, 0.1);
  EXPECT_EQ(back.seed, 7u);
}

TEST(Config, EnvironmentSeed) {
  RunConfig cfg;
  ::setenv("PMG_SEED", "1234", 1);
  apply_environment(cfg);
  ::unsetenv("PMG_SEED");
  EXPECT_EQ(cfg.seed, 1234u);
}

TEST(Report, NumberFormat) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(1e-300), "1e-300");
  EXPECT_EQ(format_double(2.0 / 3.0), "0.66666666666666663");
  EXPECT_EQ(format_double(std::nan("")), "nan");
}

TEST(Report, LineFormatAndStatus) {
  const Report r = {{"a", 0.5, 1.0}, {"b", 2.0, 1.0}};
  EXPECT_EQ(format_report(r), "a PASS 0.5 1\nb FAIL 2 1\n");
  EXPECT_FALSE(all_passed(r));
  EXPECT_TRUE(all_passed(Report{{"a", 0.0, 1e-300}}));
}

TEST(Simulate, ModesAndSchema) {
  EXPECT_THROW(parse_sim_mode("warp"), ConfigError);
  RunConfig cfg;
  cfg.samples = 5;
  cfg.t_end = 1.0;
  const SimulationResult orbit = run_simulation(cfg, SimMode::Orbit);
  ASSERT_EQ(orbit.files.size(), 1u);
  EXPECT_EQ(orbit.files[0].first, "orbit.csv");
  EXPECT_EQ(orbit.files[0].second.substr(0, orbit.files[0].second.find('\n')), "t,Ex,Ey,Px,Py,Kx,Ky,H,C0,C1,C2");
  const SimulationResult all = run_simulation(cfg, SimMode::Compare);
  EXPECT_EQ(all.files.size(), 2u);
  EXPECT_TRUE(all_passed(all.report)) << format_report(all.report);
  EXPECT_EQ(run_simulation(cfg, SimMode::Compare).files, all.files);
}
