#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "config.hpp"
#include "elliptikit/uniformize.hpp"

namespace elliptikit::app {

// Every command returns a JSON object carrying "schema": "elliptikit/1" and "command".
nlohmann::json cmd_eval_g(const Session& s, int n, Complex z);
nlohmann::json cmd_eval_E(const Session& s, int r, Complex z);
// `path` is a path literal from z0; when absent the straight segment z0 -> z is used.
nlohmann::json cmd_eval_hl(const Session& s, const std::string& word, Complex z0, std::optional<Complex> z,
                           const std::optional<std::string>& path);
// method is "shuffle", "tangential" or "both"; `path` starts at the tangential base point 0.
nlohmann::json cmd_eval_gamma(const Session& s, const std::string& word, std::optional<Complex> z,
                              const std::optional<std::string>& path, const std::string& method);
nlohmann::json cmd_reduce(const Session& s, const std::string& expr);
nlohmann::json cmd_uniformize(const RunConfig& cfg, const BranchTriple& t);
// op is "product", "antipode", "coproduct", "decompose" or "degree".
nlohmann::json cmd_shuffle(const RunConfig& cfg, const std::string& op, const std::string& u,
                           const std::optional<std::string>& v);

// "[1,0] - 2*[2,s1|0,0] + 1/3*G[]": words in the G[...] syntax with optional rational coefficients.
ShuffleElement<GaussRational> parse_shuffle_element(const std::string& text,
                                                    const std::map<std::string, Complex>& labels);

// {"schema", "error": {"code", "message", "position"?}}.
nlohmann::json error_json(const std::exception& e);

}  // namespace elliptikit::app
