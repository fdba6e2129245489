#include "config.hpp"

#include <cstdlib>
#include <fstream>

#include "elliptikit/literals.hpp"

namespace elliptikit::app {

LatticeOptions RunConfig::lattice_options() const {
  LatticeOptions o;
  o.series_truncation = series_truncation;
  o.oracle_truncation = {oracle_n, oracle_m};
  o.tolerance = tolerance;
  o.eps_sing = eps_sing;
  o.r_max = r_max;
  return o;
}

IntegrationOptions RunConfig::integration_options() const {
  IntegrationOptions o;
  o.abs_tol = abs_tol;
  o.rel_tol = rel_tol;
  o.eps_path = eps_path;
  return o;
}

std::map<std::string, Complex> RunConfig::all_labels() const {
  std::map<std::string, Complex> out = labels;
  int k = 0;
  for (Complex s : punctures) {
    if (s == Complex(0.0, 0.0)) continue;
    out.emplace("s" + std::to_string(++k), s);
  }
  return out;
}

void RunConfig::validate() const {
  if (!(tau.imag() > 0.0)) throw Error(ErrorCode::configuration, "tau must have positive imaginary part");
  if (punctures.empty() || punctures.front() != Complex(0.0, 0.0)) {
    throw Error(ErrorCode::configuration, "the puncture list must start with 0");
  }
  LatticeContext probe(tau, [&] {
    LatticeOptions o = lattice_options();
    o.r_max = 6;
    return o;
  }());
  for (std::size_t i = 0; i < punctures.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (probe.distance_to_lattice(punctures[i] - punctures[j]) < 1e-9) {
        throw Error(ErrorCode::configuration, "punctures " + format_complex(punctures[j]) + " and " +
                                                  format_complex(punctures[i]) + " agree modulo the lattice");
      }
    }
  }
  for (const auto& [name, s] : labels) {
    bool found = false;
    for (Complex p : punctures) found = found || probe.distance_to_lattice(p - s) < 1e-9;
    if (!found) throw Error(ErrorCode::configuration, "label '" + name + "' is not a configured puncture");
  }
  if (output != "json" && output != "text") throw Error(ErrorCode::configuration, "output must be json or text");
  if (!(delta > 0.0)) throw Error(ErrorCode::configuration, "delta must be positive");
}

Complex json_complex(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw Error(ErrorCode::configuration, "expected a complex number as [re, im], a number or a string, got " + j.dump());
}

nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::configuration, "configuration must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "tau") {
      cfg.tau = json_complex(v);
    } else if (key == "punctures") {
      cfg.punctures = {Complex(0.0, 0.0)};
      for (const auto& p : v) {
        Complex s = json_complex(p);
        if (s != Complex(0.0, 0.0)) cfg.punctures.push_back(s);
      }
    } else if (key == "labels") {
      cfg.labels.clear();
      for (const auto& [name, p] : v.items()) cfg.labels[name] = json_complex(p);
    } else if (key == "series_truncation") {
      cfg.series_truncation = v.get<int>();
    } else if (key == "r_max") {
      cfg.r_max = v.get<int>();
    } else if (key == "oracle_truncation") {
      cfg.oracle_n = v.at(0).get<int>();
      cfg.oracle_m = v.at(1).get<int>();
    } else if (key == "oracle_truncation_high") {
      cfg.oracle_high_n = v.at(0).get<int>();
      cfg.oracle_high_m = v.at(1).get<int>();
    } else if (key == "tolerance") {
      cfg.tolerance = v.get<double>();
    } else if (key == "eps_sing") {
      cfg.eps_sing = v.get<double>();
    } else if (key == "eps_path") {
      cfg.eps_path = v.get<double>();
    } else if (key == "abs_tol") {
      cfg.abs_tol = v.get<double>();
    } else if (key == "rel_tol") {
      cfg.rel_tol = v.get<double>();
    } else if (key == "z0") {
      cfg.z0 = json_complex(v);
    } else if (key == "delta") {
      cfg.delta = v.get<double>();
    } else if (key == "output") {
      cfg.output = v.get<std::string>();
    } else if (key == "seed") {
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "timing") {
      cfg.timing = v.get<bool>();
    } else {
      throw Error(ErrorCode::configuration, "unknown configuration key '" + key + "'");
    }
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::configuration, "cannot open configuration file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::configuration, path + ": " + e.what());
  }
  RunConfig cfg;
  apply_json(cfg, j);
  return cfg;
}

RunConfig default_config() {
  if (const char* path = std::getenv("ELLIPTIKIT_CONFIG"); path != nullptr && *path != '\0') {
    return load_config_file(path);
  }
  return RunConfig{};
}

namespace {

const RunConfig& checked(const RunConfig& cfg) {
  cfg.validate();
  return cfg;
}

}  // namespace

Session::Session(const RunConfig& cfg, int max_n)
    : cfg_(checked(cfg)),
      ctx_(cfg.tau, cfg.lattice_options()),
      table_(ctx_, max_n),
      punctures_(ctx_, cfg.punctures),
      integrator_(table_, punctures_, cfg.integration_options()),
      gamma_(integrator_, cfg.delta) {}

}  // namespace elliptikit::app
