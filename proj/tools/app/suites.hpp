#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace elliptikit::app {

// Suite names in report order; `all` runs every one of them.
const std::vector<std::string>& suite_names();
// Throws configuration for an unknown name; wall time is recorded only with cfg.timing.
VerificationReport run_suite(const std::string& name, const RunConfig& cfg);

VerificationReport suite_functional_equations(const RunConfig& cfg);
VerificationReport suite_oracle(const RunConfig& cfg);
VerificationReport suite_graded_symbol(const RunConfig& cfg);
VerificationReport suite_regularization(const RunConfig& cfg);
VerificationReport suite_derivative(const RunConfig& cfg);
VerificationReport suite_sect56(const RunConfig& cfg);
VerificationReport suite_reduction(const RunConfig& cfg);
VerificationReport suite_multipoint(const RunConfig& cfg);
VerificationReport suite_shuffle(const RunConfig& cfg);
VerificationReport suite_uniformization(const RunConfig& cfg);
VerificationReport suite_independence(const RunConfig& cfg);

}  // namespace elliptikit::app
