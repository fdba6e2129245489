#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "elliptikit/gamma.hpp"

namespace elliptikit::app {

struct RunConfig {
  Complex tau{0.0, 1.0};
  // Representatives of S; 0 is always first.
  std::vector<Complex> punctures{Complex(0.0, 0.0)};
  std::map<std::string, Complex> labels;
  int series_truncation = 0;
  int r_max = 24;
  int oracle_n = 2000;
  int oracle_m = 2000;
  int oracle_high_n = 400;  // truncation used for r >= 3
  int oracle_high_m = 400;
  double tolerance = 1e-8;
  double eps_sing = 0.0;
  double eps_path = 0.0;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  Complex z0{0.3, 0.2};
  double delta = 0.1;
  std::string output = "json";
  std::uint64_t seed = 20240917;
  bool timing = false;

  LatticeOptions lattice_options() const;
  IntegrationOptions integration_options() const;
  // Labels plus s1, s2, ... for the nonzero punctures.
  std::map<std::string, Complex> all_labels() const;
  void validate() const;
};

Complex json_complex(const nlohmann::json& j);
nlohmann::json to_json(Complex z);

// Keys missing from `j` keep their current values.
void apply_json(RunConfig& cfg, const nlohmann::json& j);
RunConfig load_config_file(const std::string& path);
// Reads ELLIPTIKIT_CONFIG when set, otherwise returns defaults.
RunConfig default_config();

// Lattice, Kronecker table, punctures, integrator and Gamma evaluator for one configuration.
class Session {
 public:
  explicit Session(const RunConfig& cfg, int max_n = 12);
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const RunConfig& config() const { return cfg_; }
  const LatticeContext& ctx() const { return ctx_; }
  const KroneckerTable& table() const { return table_; }
  const PunctureSet& punctures() const { return punctures_; }
  const IteratedIntegrator& integrator() const { return integrator_; }
  const GammaEvaluator& gamma() const { return gamma_; }

 private:
  RunConfig cfg_;
  LatticeContext ctx_;
  KroneckerTable table_;
  PunctureSet punctures_;
  IteratedIntegrator integrator_;
  GammaEvaluator gamma_;
};

}  // namespace elliptikit::app
