#include "elliptikit/hyperlog.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "elliptikit/literals.hpp"

namespace elliptikit {

namespace {

double inverse_factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f /= k;
  return f;
}

HLWord repeat(const HLLetter& l, int n) { return HLWord(static_cast<std::size_t>(n), l); }

}  // namespace

std::string HLLetter::to_string() const {
  if (star) return "*";
  return s == Complex(0.0, 0.0) ? "0" : format_complex(s);
}

FormSpec form_of(const HLLetter& letter) {
  if (letter.star) return FormSpec::dz();
  if (letter.s == Complex(0.0, 0.0)) return FormSpec::e2();
  return FormSpec::g1_difference(letter.s);
}

HLWord parse_hl_word(const std::string& text, const std::map<std::string, Complex>& labels) {
  HLWord word;
  std::string body = text;
  std::size_t offset = 0;
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first != std::string::npos && body[first] == '[') {
    if (body[last] != ']') throw ParseError(last, "unbalanced '[' in hyperlogarithm word");
    offset = first + 1;
    body = body.substr(first + 1, last - first - 1);
  }
  std::size_t start = 0;
  auto is_sep = [](char c) { return c == ',' || c == '|' || c == ';' || c == ' ' || c == '\t'; };
  while (start < body.size()) {
    while (start < body.size() && is_sep(body[start])) ++start;
    if (start >= body.size()) break;
    std::size_t end = start;
    while (end < body.size() && !is_sep(body[end])) ++end;
    std::string token = body.substr(start, end - start);
    if (token == "*" || token == "star") {
      word.push_back(HLLetter::star_letter());
    } else if (auto it = labels.find(token); it != labels.end()) {
      word.push_back(HLLetter::puncture(it->second));
    } else {
      try {
        word.push_back(HLLetter::puncture(parse_complex(token)));
      } catch (const ParseError&) {
        throw ParseError(offset + start, "unknown hyperlogarithm letter '" + token + "'");
      }
    }
    start = end;
  }
  return word;
}

Complex hl_eval(const HLWord& word, const Path& path, const IteratedIntegrator& integrator) {
  std::vector<FormSpec> forms;
  for (const HLLetter& l : word) {
    if (!l.star && integrator.punctures().index_of(l.s) < 0) {
      throw Error(ErrorCode::invalid_argument, "hyperlogarithm letter " + l.to_string() + " is not a configured puncture");
    }
    forms.push_back(form_of(l));
  }
  return integrator.integrate(forms, path);
}

Sect56Identity parse_sect56_identity(const std::string& id) {
  if (id == "i") return Sect56Identity::i;
  if (id == "ii") return Sect56Identity::ii;
  if (id == "iii") return Sect56Identity::iii;
  if (id == "iv") return Sect56Identity::iv;
  if (id == "v") return Sect56Identity::v;
  throw Error(ErrorCode::invalid_argument, "unknown identity '" + id + "' (expected i, ii, iii, iv or v)");
}

const char* to_string(Sect56Identity id) {
  switch (id) {
    case Sect56Identity::i: return "i";
    case Sect56Identity::ii: return "ii";
    case Sect56Identity::iii: return "iii";
    case Sect56Identity::iv: return "iv";
    case Sect56Identity::v: return "v";
  }
  return "?";
}

IdentityResidual verify_sect56(Sect56Identity id, const Path& to_z0, const Path& z0_to_z, const GammaEvaluator& gamma,
                               int n) {
  const IteratedIntegrator& integrator = gamma.integrator();
  if (integrator.punctures().representatives().size() != 1) {
    throw Error(ErrorCode::configuration, "the Gamma/hyperlogarithm catalogue needs S = {0}");
  }
  if (n < 0) throw Error(ErrorCode::invalid_argument, "identity order must be >= 0");
  Path head = gamma.normalize(to_z0);
  Path full = head.then(z0_to_z);
  const KroneckerTable& table = integrator.table();
  const Complex z0 = head.end();
  const Complex z = full.end();
  const HLLetter alpha = HLLetter::star_letter();
  const HLLetter beta = HLLetter::puncture(0.0);
  auto L = [&](const HLWord& w) { return hl_eval(w, z0_to_z, integrator); };
  IdentityResidual r;
  switch (id) {
    case Sect56Identity::i: {
      r.lhs = L(repeat(alpha, n));
      std::vector<Word> words;
      for (int j = 0; j <= n; ++j) words.emplace_back(static_cast<std::size_t>(j), Letter{0, 0.0});
      std::vector<Complex> gam = gamma.shuffle(words, full);
      r.rhs = 0.0;
      for (int j = 0; j <= n; ++j) r.rhs += std::pow(-z0, n - j) * inverse_factorial(n - j) * gam[static_cast<std::size_t>(j)];
      break;
    }
    case Sect56Identity::ii:
      r.lhs = L({beta});
      r.rhs = -table.g(1, z) + table.g(1, z0);
      break;
    case Sect56Identity::iii: {
      Word one{Letter{1, 0.0}};
      r.lhs = gamma.shuffle(one, full);
      r.rhs = -L({beta, alpha}) + table.g(1, z0) * L({alpha}) + gamma.shuffle(one, head);
      break;
    }
    case Sect56Identity::iv: {
      Complex g1 = table.g(1, z);
      Complex g10 = table.g(1, z0);
      r.lhs = std::pow(g1, n);
      r.rhs = 0.0;
      double ratio = 1.0;  // n!/(n-k)!
      for (int k = 0; k <= n; ++k) {
        if (k > 0) ratio *= n - k + 1;
        r.rhs += (k % 2 == 0 ? 1.0 : -1.0) * ratio * std::pow(g10, n - k) * L(repeat(beta, k));
      }
      break;
    }
    case Sect56Identity::v: {
      Word two{Letter{2, 0.0}};
      Complex g10 = table.g(1, z0);
      Complex e2 = table.context().eisenstein_series(2);
      r.lhs = gamma.shuffle(two, full);
      r.rhs = L({beta, beta, alpha}) - g10 * L({beta, alpha}) + 0.5 * (e2 + g10 * g10) * L({alpha}) -
              0.5 * L({beta}) + gamma.shuffle(two, head);
      break;
    }
  }
  r.residual = std::abs(r.lhs - r.rhs) / std::max(1.0, std::abs(r.lhs));
  return r;
}

std::vector<Complex> os_spanning_values(const KroneckerTable& table, const PunctureSet& punctures, int cap, Complex z) {
  const LatticeContext& ctx = table.context();
  std::vector<Complex> out{1.0};
  for (Complex s : punctures.representatives()) {
    if (cap >= 2) {
      std::vector<Complex> E = ctx.eisenstein_functions(cap, z - s);
      for (int k = 2; k <= cap; ++k) out.push_back(E[static_cast<std::size_t>(k)]);
    }
  }
  Complex g1 = table.g(1, z);
  for (Complex s : punctures.representatives()) {
    if (s == Complex(0.0, 0.0)) continue;
    out.push_back(table.g(1, z - s) - g1);
  }
  return out;
}

RankReport numeric_independence_check(const std::vector<Evaluator>& functions, const std::vector<Complex>& sample_points,
                                      const KroneckerTable& table, const PunctureSet& punctures,
                                      IndependenceOptions options) {
  std::vector<std::vector<Complex>> values(sample_points.size());
  for (std::size_t i = 0; i < sample_points.size(); ++i) {
    for (const auto& f : functions) values[i].push_back(f(sample_points[i]));
  }
  return numeric_independence_check(values, sample_points, table, punctures, options);
}

RankReport numeric_independence_check(const std::vector<std::vector<Complex>>& values,
                                      const std::vector<Complex>& sample_points, const KroneckerTable& table,
                                      const PunctureSet& punctures, IndependenceOptions options) {
  if (values.size() != sample_points.size() || values.empty()) {
    throw Error(ErrorCode::invalid_argument, "one row of values per sample point is required");
  }
  const std::size_t nf = values.front().size();
  for (const auto& row : values) {
    if (row.size() != nf) throw Error(ErrorCode::invalid_argument, "ragged value matrix");
  }
  for (std::size_t i = 0; i < sample_points.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(sample_points[i] - sample_points[j]) < 1e-9) {
        throw Error(ErrorCode::ill_conditioned, "sample points are not pairwise distinct");
      }
    }
  }
  std::vector<std::vector<Complex>> phi;
  for (Complex z : sample_points) phi.push_back(os_spanning_values(table, punctures, options.pole_degree_cap, z));
  const std::size_t nphi = phi.front().size();
  const auto rows = static_cast<Eigen::Index>(sample_points.size());
  const auto cols = static_cast<Eigen::Index>(nphi * nf);
  if (rows < 2 * cols) {
    throw Error(ErrorCode::ill_conditioned, "need at least twice as many samples as columns (" +
                                                std::to_string(rows) + " < 2 * " + std::to_string(cols) + ")");
  }
  auto normalized_singular_values = [](Eigen::MatrixXcd m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      double norm = m.col(c).norm();
      if (norm > 0.0) m.col(c) /= norm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    Eigen::VectorXd sv = svd.singularValues();
    if (sv.size() > 0 && sv(0) > 0.0) sv /= sv(0);
    return sv;
  };
  Eigen::MatrixXcd phi_matrix(rows, static_cast<Eigen::Index>(nphi));
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < phi_matrix.cols(); ++c) phi_matrix(r, c) = phi[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  Eigen::VectorXd phi_sv = normalized_singular_values(phi_matrix);
  if (phi_sv(phi_sv.size() - 1) < 1e-12) {
    throw Error(ErrorCode::ill_conditioned, "sample set cannot separate the O_S spanning functions");
  }
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& f = values[static_cast<std::size_t>(r)];
    const auto& p = phi[static_cast<std::size_t>(r)];
    for (std::size_t a = 0; a < nphi; ++a) {
      for (std::size_t b = 0; b < nf; ++b) m(r, static_cast<Eigen::Index>(a * nf + b)) = p[a] * f[b];
    }
  }
  Eigen::VectorXd sv = normalized_singular_values(m);
  RankReport report;
  report.columns = static_cast<int>(cols);
  report.samples = static_cast<int>(rows);
  report.threshold = options.threshold;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    report.singular_values.push_back(sv(k));
    if (sv(k) > options.threshold) ++report.rank;
  }
  report.smallest_relative = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
  report.independent = report.rank == report.columns;
  return report;
}

Complex contour_residue(const std::function<Complex(Complex)>& f, Complex center, double radius) {
  constexpr int points = 16;
  Complex total = 0.0;
  for (int k = 0; k < points; ++k) {
    Complex e = std::polar(1.0, 2.0 * std::numbers::pi * k / points);
    total += f(center + radius * e) * e;
  }
  return radius * total / static_cast<double>(points);
}

}  // namespace elliptikit
