#include <gtest/gtest.h>

#include "commands.hpp"
#include "suites.hpp"

using namespace elliptikit;
using namespace elliptikit::app;
using nlohmann::json;

namespace {

Complex value_of(const json& j) { return json_complex(j.at("value")); }

}  // namespace

TEST(Config, JsonOverridesDefaults) {
  RunConfig cfg;
  apply_json(cfg, json::parse(R"({"tau": [0.5, 1.5], "punctures": [[0, 0], [0.5, 0.25]],
                                  "oracle_truncation": [100, 200], "tolerance": 1e-9})"));
  EXPECT_EQ(cfg.tau, Complex(0.5, 1.5));
  ASSERT_EQ(cfg.punctures.size(), 2u);
  EXPECT_EQ(cfg.punctures[0], Complex(0.0));
  EXPECT_EQ(cfg.oracle_n, 100);
  EXPECT_EQ(cfg.oracle_m, 200);
  EXPECT_DOUBLE_EQ(cfg.tolerance, 1e-9);
  EXPECT_EQ(cfg.all_labels().at("s1"), Complex(0.5, 0.25));
  EXPECT_THROW(apply_json(cfg, json::array()), Error);
}

TEST(Config, ValidationRejectsLowerHalfPlane) {
  RunConfig cfg;
  cfg.tau = Complex(0.0, -1.0);
  EXPECT_THROW(cfg.validate(), Error);
  EXPECT_THROW(load_config_file("/nonexistent/elliptikit.json"), Error);
}

TEST(Commands, EvalG) {
  Session s(RunConfig{});
  json out = cmd_eval_g(s, 0, Complex(0.3, 0.1));
  EXPECT_EQ(out.at("schema"), "elliptikit/1");
  EXPECT_EQ(out.at("command"), "eval-g");
  EXPECT_EQ(value_of(out), Complex(1.0));
  EXPECT_THROW(cmd_eval_g(s, -1, 0.3), Error);
  EXPECT_THROW(cmd_eval_g(s, 1, 0.0), SingularityError);
}

TEST(Commands, EvalE) {
  Session s(RunConfig{});
  json out = cmd_eval_E(s, 2, Complex(0.3, 0.1));
  EXPECT_NEAR(std::abs(value_of(out) - s.ctx().eisenstein_function(2, Complex(0.3, 0.1))), 0.0, 1e-15);
  EXPECT_TRUE(out.contains("e_r"));
}

TEST(Commands, EvalHlAndGamma) {
  Session s(RunConfig{});
  json hl = cmd_eval_hl(s, "*", Complex(0.2, 0.0), Complex(0.5, 0.0), std::nullopt);
  EXPECT_NEAR(std::abs(value_of(hl) - 0.3), 0.0, 1e-14);
  json empty = cmd_eval_gamma(s, "G[]", Complex(0.3, 0.2), std::nullopt, "shuffle");
  EXPECT_EQ(value_of(empty), Complex(1.0));
  json both = cmd_eval_gamma(s, "G[1,0; 0,0]", Complex(0.3, 0.2), std::nullopt, "both");
  EXPECT_LT(both.at("tangential").at("difference").get<double>(), 1e-6);
  json along = cmd_eval_gamma(s, "G[0,0]", std::nullopt, std::string("[0,0; 0.05,0; 0.3,0.2]"), "shuffle");
  EXPECT_NEAR(std::abs(value_of(along) - Complex(0.3, 0.2)), 0.0, 1e-13);
  EXPECT_THROW(cmd_eval_gamma(s, "G[0,0]", Complex(0.3, 0.2), std::nullopt, "other"), Error);
  EXPECT_THROW(cmd_eval_gamma(s, "G[0,0.5]", Complex(0.3, 0.2), std::nullopt, "shuffle"), Error);
}

TEST(Commands, Reduce) {
  Session s(RunConfig{});
  json out = cmd_reduce(s, "P");
  EXPECT_EQ(out.at("primitive"), "-X");
  EXPECT_TRUE(out.at("lambdas").empty());
  EXPECT_NEAR(std::abs(json_complex(out.at("c")) + s.ctx().eisenstein_series(2)), 0.0, 1e-14);
}

TEST(Commands, Uniformize) {
  json out = cmd_uniformize(RunConfig{}, {1.0, 0.0, -1.0});
  EXPECT_NEAR(std::abs(json_complex(out.at("j")) - 1728.0), 0.0, 1e-6);
}

TEST(Commands, Shuffle) {
  RunConfig cfg;
  json prod = cmd_shuffle(cfg, "product", "[1,0]", std::string("[2,0]"));
  EXPECT_EQ(prod.at("result"), "[(1;0)|(2;0)] + [(2;0)|(1;0)]");
  json deg = cmd_shuffle(cfg, "degree", "[1,0; 1,0]", std::nullopt);
  EXPECT_EQ(deg.at("result"), 2);
  json zero = cmd_shuffle(cfg, "degree", "[1,0] - [1,0]", std::nullopt);
  EXPECT_EQ(zero.at("result"), "-infinity");
  EXPECT_THROW(cmd_shuffle(cfg, "product", "[1,0]", std::nullopt), Error);
  EXPECT_THROW(cmd_shuffle(cfg, "frobnicate", "[1,0]", std::nullopt), Error);
}

TEST(Commands, ShuffleElementSyntax) {
  RunConfig cfg;
  cfg.punctures.push_back(Complex(0.5, 0.5));
  auto e = parse_shuffle_element("[1,0] - 2*[2,s1; 0,0] + 1/3*G[]", cfg.all_labels());
  EXPECT_EQ(e.size(), 3u);
  EXPECT_EQ(e.coefficient(Word{}), GaussRational(Rational(1, 3)));
  EXPECT_EQ(e.coefficient(Word{Letter{2, Complex(0.5, 0.5)}, Letter{0, 0.0}}), GaussRational(-2));
  EXPECT_THROW(parse_shuffle_element("", {}), ParseError);
  EXPECT_THROW(parse_shuffle_element("[1,0] [2,0]", {}), ParseError);
  EXPECT_THROW(parse_shuffle_element("2 [1,0]", {}), ParseError);
}

TEST(Commands, ErrorJson) {
  json parse = error_json(ParseError(4, "bad token"));
  EXPECT_EQ(parse.at("error").at("code"), "parse");
  EXPECT_EQ(parse.at("error").at("position"), 4);
  json sing = error_json(SingularityError(Complex(1e-9, 0.0), 0.0, "pole"));
  EXPECT_TRUE(sing.at("error").contains("nearest"));
  json other = error_json(std::runtime_error("boom"));
  EXPECT_EQ(other.at("error").at("code"), "internal");
}

TEST(Report, CheckSemantics) {
  VerificationReport r;
  r.add("a", "statement", 1e-9, 1e-8);
  EXPECT_TRUE(r.pass);
  r.add_lower("b", "statement", 1e4, 1e3);
  EXPECT_TRUE(r.pass);
  r.add("nan", "statement", std::nan(""), 1.0);
  EXPECT_FALSE(r.pass);
  VerificationReport e;
  e.add_exact("exact", "statement", 0);
  EXPECT_TRUE(e.pass);
  e.add_exact("broken", "statement", 2);
  EXPECT_FALSE(e.pass);
}

TEST(Suites, FastSuitesPass) {
  RunConfig cfg;
  for (const char* name : {"graded-symbol", "shuffle", "reduction"}) {
    VerificationReport r = run_suite(name, cfg);
    EXPECT_TRUE(r.pass) << r.to_text();
    EXPECT_FALSE(r.checks.empty());
  }
  EXPECT_THROW(run_suite("no-such-suite", cfg), Error);
  EXPECT_EQ(suite_names().size(), 11u);
}

TEST(Suites, ReportIsDeterministicForSeed) {
  RunConfig cfg;
  std::string a = run_suite("reduction", cfg).to_json().dump();
  std::string b = run_suite("reduction", cfg).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("wall_time"), std::string::npos);
  cfg.seed += 1;
  EXPECT_NE(run_suite("reduction", cfg).to_json().dump(), a);
}
