#include "pmg/config.hpp"

#include "pmg/report.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace pmg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
    throw ConfigError("bad number for '" + std::string(key) + "': '" + std::string(v) + "'");
  return out;
}

template <class Int>
Int parse_int(std::string_view key, std::string_view v) {
  Int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
    throw ConfigError("bad integer for '" + std::string(key) + "': '" + std::string(v) + "'");
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw ConfigError("bad boolean for '" + std::string(key) + "': '" + std::string(v) + "'");
}

struct Field {
  std::string_view key;
  std::function<double*(RunConfig&)> number;
};

// Real-valued keys in output order.
const std::vector<Field>& real_fields() {
  static const std::vector<Field> fields = {
      {"q", [](RunConfig& c) { return &c.particle.q; }},
      {"m0", [](RunConfig& c) { return &c.particle.m0; }},
      {"c", [](RunConfig& c) { return &c.particle.c; }},
      {"Ex", [](RunConfig& c) { return &c.initial.Ex; }},
      {"Ey", [](RunConfig& c) { return &c.initial.Ey; }},
      {"B", [](RunConfig& c) { return &c.initial.B; }},
      {"x", [](RunConfig& c) { return &c.initial.x; }},
      {"y", [](RunConfig& c) { return &c.initial.y; }},
      {"Px", [](RunConfig& c) { return &c.initial.Px; }},
      {"Py", [](RunConfig& c) { return &c.initial.Py; }},
      {"pix", [](RunConfig& c) { return &c.initial.pix; }},
      {"piy", [](RunConfig& c) { return &c.initial.piy; }},
      {"beta", [](RunConfig& c) { return &c.initial.beta; }},
      {"t_end", [](RunConfig& c) { return &c.t_end; }},
      {"rel_tol", [](RunConfig& c) { return &c.integrator.rel_tol; }},
      {"abs_tol", [](RunConfig& c) { return &c.integrator.abs_tol; }},
      {"threshold", [](RunConfig& c) { return &c.threshold; }},
  };
  return fields;
}

}  // namespace

RunConfig::RunConfig() {
  initial.B = 1.0;
  initial.Px = 1.0;
}

void RunConfig::set(std::string_view key, std::string_view value) {
  value = trim(value);
  for (const auto& f : real_fields()) {
    if (f.key == key) {
      *f.number(*this) = parse_double(key, value);
      return;
    }
  }
  if (key == "samples") samples = parse_int<int>(key, value);
  else if (key == "seed") seed = parse_int<std::uint64_t>(key, value);
  else if (key == "check_energy") check_energy = parse_bool(key, value);
  else if (key == "check_equivalence") check_equivalence = parse_bool(key, value);
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

void RunConfig::validate() const {
  try {
    particle.validate();
    integrator.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (samples < 2) throw ConfigError("samples must be at least 2");
  if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (!(threshold > 0.0)) throw ConfigError("threshold must be positive");
}

std::string RunConfig::to_text() const {
  std::string out;
  RunConfig copy = *this;
  for (const auto& f : real_fields()) {
    out += f.key;
    out += " = ";
    out += format_double(*f.number(copy));
    out += '\n';
  }
  out += "samples = " + std::to_string(samples) + '\n';
  out += "seed = " + std::to_string(seed) + '\n';
  out += std::string("check_energy = ") + (check_energy ? "true" : "false") + '\n';
  out += std::string("check_equivalence = ") + (check_equivalence ? "true" : "false") + '\n';
  return out;
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    base.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

void apply_environment(RunConfig& cfg) {
  if (const char* s = std::getenv("PMG_SEED")) cfg.set("seed", s);
}

}  // namespace pmg
