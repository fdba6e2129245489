#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "../app/commands.hpp"
#include "../app/suites.hpp"
#include "elliptikit/literals.hpp"

using namespace elliptikit;
using namespace elliptikit::app;

namespace {

constexpr int exit_error = 100;

std::optional<Complex> opt_complex(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_complex(text);
}

std::optional<std::string> opt_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return text;
}

void print(const nlohmann::json& j, const std::string& output) {
  if (output == "text" && j.contains("value")) {
    const auto& v = j["value"];
    std::cout << format_complex({v[0].get<double>(), v[1].get<double>()}) << "\n";
  } else if (output == "text" && j.contains("result") && j["result"].is_string()) {
    std::cout << j["result"].get<std::string>() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic Kronecker functions, regularised iterated integrals and their algebra"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, tau_text, output;
  std::vector<std::string> puncture_texts;
  std::uint64_t seed = 0;
  bool timing = false;
  app.add_option("--config", config_path, "JSON configuration file (default: $ELLIPTIKIT_CONFIG)");
  app.add_option("--tau", tau_text, "period ratio, e.g. 0,1 or 0.5+1.5i");
  app.add_option("--puncture", puncture_texts, "nonzero puncture representative (repeatable)");
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", timing, "record wall time in reports");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(choices));

  int n = 0;
  std::string z_text, z0_text, word, path_text, method = "shuffle";
  auto* eval_g = app.add_subcommand("eval-g", "evaluate g_n(z)");
  eval_g->add_option("--n", n)->required();
  eval_g->add_option("--z", z_text)->required();

  auto* eval_e = app.add_subcommand("eval-E", "evaluate E_r(z)");
  eval_e->add_option("--r", n)->required();
  eval_e->add_option("--z", z_text)->required();

  auto* eval_hl = app.add_subcommand("eval-hl", "evaluate an elliptic hyperlogarithm L_w(z)");
  eval_hl->add_option("--word", word, "letters *, 0, labels or complex literals")->required();
  eval_hl->add_option("--z0", z0_text, "base point (default from configuration)");
  eval_hl->add_option("--z", z_text);
  eval_hl->add_option("--path", path_text, "path literal from z0");

  auto* eval_gamma = app.add_subcommand("eval-gamma", "evaluate a regularised Gamma function");
  eval_gamma->add_option("--word", word, "G[n1,a1; n2,a2; ...]")->required();
  eval_gamma->add_option("--z", z_text);
  eval_gamma->add_option("--path", path_text, "path literal from 0");
  eval_gamma->add_option("--method", method)->check(CLI::IsMember({"shuffle", "tangential", "both"}));

  std::string expr;
  auto* reduce = app.add_subcommand("reduce", "reduce an element of O[g_1] modulo derivatives");
  reduce->add_option("--expr", expr, "polynomial in P, Q, X, e2, g2, g3")->required();

  std::string a1, a2, a3;
  auto* unif = app.add_subcommand("uniformize", "find (tau, a, b) for a branch triple");
  unif->add_option("--a1", a1)->required();
  unif->add_option("--a2", a2)->required();
  unif->add_option("--a3", a3)->required();

  std::string op, u_text, v_text;
  auto* shuffle = app.add_subcommand("shuffle", "shuffle algebra operations");
  shuffle->add_option("--op", op)->required()->check(
      CLI::IsMember({"product", "antipode", "coproduct", "decompose", "degree"}));
  shuffle->add_option("--u", u_text)->required();
  shuffle->add_option("--v", v_text);

  CLI11_PARSE(app, argc, argv);

  RunConfig cfg;
  try {
    cfg = config_path.empty() ? default_config() : load_config_file(config_path);
    if (!tau_text.empty()) cfg.tau = parse_complex(tau_text);
    for (const std::string& p : puncture_texts) cfg.punctures.push_back(parse_complex(p));
    if (*seed_opt) cfg.seed = seed;
    if (!output.empty()) cfg.output = output;
    if (timing) cfg.timing = true;
    cfg.validate();

    if (verify->parsed()) {
      VerificationReport rep = run_suite(suite, cfg);
      if (cfg.output == "text") {
        std::cout << rep.to_text();
      } else {
        std::cout << rep.to_json().dump(2) << "\n";
      }
      if (rep.pass) return 0;
      const auto& names = suite_names();
      for (std::size_t k = 0; k < names.size(); ++k) {
        bool failed = false;
        for (const Check& c : rep.checks) {
          bool in_suite = suite == "all" ? c.id.rfind(names[k] + "/", 0) == 0 : names[k] == suite;
          failed = failed || (in_suite && !c.pass);
        }
        if (failed) return static_cast<int>(k) + 1;
      }
      return exit_error;
    }
    if (shuffle->parsed()) {
      print(cmd_shuffle(cfg, op, u_text, opt_string(v_text)), cfg.output);
      return 0;
    }
    if (unif->parsed()) {
      print(cmd_uniformize(cfg, {parse_complex(a1), parse_complex(a2), parse_complex(a3)}), cfg.output);
      return 0;
    }
    Session session(cfg);
    if (eval_g->parsed()) {
      print(cmd_eval_g(session, n, parse_complex(z_text)), cfg.output);
    } else if (eval_e->parsed()) {
      print(cmd_eval_E(session, n, parse_complex(z_text)), cfg.output);
    } else if (eval_hl->parsed()) {
      Complex z0 = z0_text.empty() ? cfg.z0 : parse_complex(z0_text);
      print(cmd_eval_hl(session, word, z0, opt_complex(z_text), opt_string(path_text)), cfg.output);
    } else if (eval_gamma->parsed()) {
      print(cmd_eval_gamma(session, word, opt_complex(z_text), opt_string(path_text), method), cfg.output);
    } else if (reduce->parsed()) {
      print(cmd_reduce(session, expr), cfg.output);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cout << error_json(e).dump(2) << "\n";
    return exit_error;
  }
}
