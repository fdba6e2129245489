#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace elliptikit::app {

struct Check {
  std::string id;
  std::string anchor;  // the statement being checked
  double residual = 0.0;
  double tolerance = 0.0;
  bool lower_bound = false;  // pass iff residual >= tolerance instead of <=
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  bool pass = true;
  std::optional<double> wall_time;

  // residual <= tolerance, NaN fails.
  Check& add(std::string id, std::string anchor, double residual, double tolerance, std::string detail = {});
  // residual >= bound.
  Check& add_lower(std::string id, std::string anchor, double value, double bound, std::string detail = {});
  // An exact statement: the residual is the number of failures.
  Check& add_exact(std::string id, std::string anchor, long failures, std::string detail = {});
  void merge(const VerificationReport& other);
  // Largest residual among upper-bound checks whose id starts with `prefix`.
  double max_residual(const std::string& prefix = {}) const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace elliptikit::app
