#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace elliptikit::app {

Check& VerificationReport::add(std::string id, std::string anchor, double residual, double tolerance,
                               std::string detail) {
  Check c{std::move(id), std::move(anchor), residual, tolerance, false, false, std::move(detail)};
  c.pass = std::isfinite(residual) && residual <= tolerance;
  pass = pass && c.pass;
  checks.push_back(std::move(c));
  return checks.back();
}

Check& VerificationReport::add_lower(std::string id, std::string anchor, double value, double bound,
                                     std::string detail) {
  Check c{std::move(id), std::move(anchor), value, bound, true, false, std::move(detail)};
  c.pass = std::isfinite(value) && value >= bound;
  pass = pass && c.pass;
  checks.push_back(std::move(c));
  return checks.back();
}

Check& VerificationReport::add_exact(std::string id, std::string anchor, long failures, std::string detail) {
  return add(std::move(id), std::move(anchor), static_cast<double>(failures), 0.0, std::move(detail));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (Check c : other.checks) {
    c.id = other.suite + "/" + c.id;
    checks.push_back(std::move(c));
  }
  pass = pass && other.pass;
}

double VerificationReport::max_residual(const std::string& prefix) const {
  double worst = 0.0;
  for (const Check& c : checks) {
    if (c.lower_bound || c.id.compare(0, prefix.size(), prefix) != 0) continue;
    worst = std::isfinite(c.residual) ? std::max(worst, c.residual) : c.residual;
    if (!std::isfinite(worst)) return worst;
  }
  return worst;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "elliptikit/1";
  j["suite"] = suite;
  j["seed"] = seed;
  j["pass"] = pass;
  nlohmann::json list = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["residual"] = std::isfinite(c.residual) ? nlohmann::json(c.residual) : nlohmann::json("nan");
    e["tolerance"] = c.tolerance;
    e["relation"] = c.lower_bound ? ">=" : "<=";
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  if (wall_time) j["wall_time_s"] = *wall_time;
  return j;
}

std::string VerificationReport::to_text() const {
  std::string out;
  char buf[512];
  for (const Check& c : checks) {
    std::snprintf(buf, sizeof buf, "%s  %-40s %.3e %s %.1e", c.pass ? "PASS" : "FAIL", c.id.c_str(), c.residual,
                  c.lower_bound ? ">=" : "<=", c.tolerance);
    out += buf;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  std::snprintf(buf, sizeof buf, "%s: %s (%zu checks)", suite.c_str(), pass ? "PASS" : "FAIL", checks.size());
  out += buf;
  if (wall_time) {
    std::snprintf(buf, sizeof buf, " in %.2f s", *wall_time);
    out += buf;
  }
  return out + "\n";
}

}  // namespace elliptikit::app
