// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "suites.hpp"

using namespace elliptikit;
using namespace elliptikit::app;

namespace {

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds
  std::function<std::vector<VerificationReport>()> run;
};

RunConfig with_punctures(std::vector<Complex> s) {
  RunConfig cfg;
  cfg.punctures = std::move(s);
  return cfg;
}

const Complex kS2(0.5, 0.45);
const Complex kS3a(0.5, 0.25);
const Complex kS3b(0.25, 0.7);

std::vector<Criterion> criteria() {
  return {
      {1, "functional equations at tau = i and (1+3i)/2", 30.0,
       [] {
         RunConfig a;
         RunConfig b;
         b.tau = Complex(0.5, 1.5);
         return std::vector{suite_functional_equations(a), suite_functional_equations(b)};
       }},
      {2, "fast Eisenstein functions against the double-sum oracle", 60.0,
       [] { return std::vector{suite_oracle(RunConfig{})}; }},
      {3, "graded symbol of g_n, exact for n <= 12", 5.0,
       [] { return std::vector{suite_graded_symbol(RunConfig{})}; }},
      {4, "tangential and shuffle regularisation agree, |S| = 2", 300.0,
       [] { return std::vector{suite_regularization(with_punctures({0.0, kS2}))}; }},
      {5, "derivative identity for regularised functions", 120.0,
       [] { return std::vector{suite_derivative(with_punctures({0.0, kS2}))}; }},
      {6, "Gamma and hyperlogarithm identity catalogue, |S| = 1", 120.0,
       [] { return std::vector{suite_sect56(RunConfig{})}; }},
      {7, "reduction modulo derivatives", 60.0, [] { return std::vector{suite_reduction(RunConfig{})}; }},
      {8, "multi-point reduction, |S| = 3", 60.0,
       [] { return std::vector{suite_multipoint(with_punctures({0.0, kS3a, kS3b}))}; }},
      {9, "shuffle Hopf algebra and star decomposition, exact", 10.0,
       [] { return std::vector{suite_shuffle(with_punctures({0.0, kS2}))}; }},
      {10, "uniformization of branch triples", 120.0,
       [] { return std::vector{suite_uniformization(RunConfig{})}; }},
      {11, "numeric independence with planted controls", 180.0,
       [] { return std::vector{suite_independence(RunConfig{})}; }},
  };
}

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : criteria()) {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    try {
      for (const VerificationReport& r : c.run()) {
        for (const Check& k : r.checks) {
          if (!k.pass) {
            pass = false;
            if (detail.size() < 400) detail += " " + r.suite + "/" + k.id;
          }
        }
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string(" error: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = elapsed <= c.time_limit;
    if (!in_time) detail += " runtime limit exceeded";
    bool ok = pass && in_time;
    failures += ok ? 0 : 1;
    std::printf("%s criterion %2d: %s (%.2f s of %.0f s)%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed,
                c.time_limit, ok ? "" : (" failed:" + detail).c_str());
    std::fflush(stdout);
  }
  return failures;
}
