#include "elliptikit/itint.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <tuple>

namespace elliptikit {

namespace {

constexpr int order = 20;

struct GaussRule {
  std::array<double, order> x{};
  std::array<double, order> w{};
  // a[i][j] = integral from -1 to x_i of the j-th Lagrange basis polynomial.
  std::array<std::array<double, order>, order> a{};
};

// P_0..P_(kmax) at x.
std::vector<double> legendre_values(int kmax, double x) {
  std::vector<double> p(static_cast<std::size_t>(kmax + 1));
  p[0] = 1.0;
  if (kmax >= 1) p[1] = x;
  for (int k = 1; k < kmax; ++k) {
    p[static_cast<std::size_t>(k + 1)] =
        ((2.0 * k + 1.0) * x * p[static_cast<std::size_t>(k)] - k * p[static_cast<std::size_t>(k - 1)]) / (k + 1.0);
  }
  return p;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule g;
    for (int i = 0; i < order; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
      for (int it = 0; it < 100; ++it) {
        auto p = legendre_values(order, x);
        double pn = p[order];
        double dp = order * (x * pn - p[order - 1]) / (x * x - 1.0);
        double dx = pn / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      auto p = legendre_values(order, x);
      double dp = order * (x * p[order] - p[order - 1]) / (x * x - 1.0);
      g.x[static_cast<std::size_t>(order - 1 - i)] = x;
      g.w[static_cast<std::size_t>(order - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    for (int i = 0; i < order; ++i) {
      auto pi_vals = legendre_values(order, g.x[static_cast<std::size_t>(i)]);
      std::array<double, order> integrals{};
      integrals[0] = g.x[static_cast<std::size_t>(i)] + 1.0;
      for (int k = 1; k < order; ++k) {
        integrals[static_cast<std::size_t>(k)] =
            (pi_vals[static_cast<std::size_t>(k + 1)] - pi_vals[static_cast<std::size_t>(k - 1)]) / (2.0 * k + 1.0);
      }
      for (int j = 0; j < order; ++j) {
        auto pj = legendre_values(order - 1, g.x[static_cast<std::size_t>(j)]);
        double s = 0.0;
        for (int k = 0; k < order; ++k) {
          s += (2.0 * k + 1.0) / 2.0 * pj[static_cast<std::size_t>(k)] * integrals[static_cast<std::size_t>(k)];
        }
        g.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.w[static_cast<std::size_t>(j)] * s;
      }
    }
    return g;
  }();
  return rule;
}

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

Complex e2_value(const LatticeContext& ctx, Complex u) {
  LatticePoint c = ctx.center(u);
  if (std::abs(c.reduced) < 0.25 && c.reduced != Complex(0.0, 0.0)) {
    return ctx.eisenstein_regular_parts(2, c.reduced)[2] + 1.0 / (c.reduced * c.reduced);
  }
  return ctx.eisenstein_function(2, u);
}

Complex g1_regular_value(const KroneckerTable& table, Complex u) {
  const LatticeContext& ctx = table.context();
  if (std::abs(u) < 0.25 && std::abs(u.imag()) < 0.5 * ctx.tau().imag()) {
    return ctx.eisenstein_regular_parts(1, u)[1];
  }
  return table.g_all(u)[1] - 1.0 / u;
}

// Distinct forms of a batch and how to evaluate them at a point.
class FormEvaluator {
 public:
  FormEvaluator(const KroneckerTable& table, std::vector<FormSpec> forms) : table_(&table), forms_(std::move(forms)) {
    for (const auto& f : forms_) {
      if (f.kind == FormSpec::Kind::kronecker) {
        if (f.n < 0 || f.n > table.max_n()) {
          throw Error(ErrorCode::invalid_argument, "form " + f.to_string() + " exceeds the Kronecker table range");
        }
        translation_slot(f.a);
      } else if (f.kind == FormSpec::Kind::g1_difference) {
        if (table.max_n() < 1) throw Error(ErrorCode::invalid_argument, "Kronecker table needs max_n >= 1");
        translation_slot(f.a);
        translation_slot(0.0);
      }
    }
  }

  void evaluate(Complex u, std::vector<Complex>& out) const {
    std::vector<std::vector<Complex>> g(translations_.size());
    for (std::size_t k = 0; k < translations_.size(); ++k) g[k] = table_->g_all(u - translations_[k]);
    out.resize(forms_.size());
    for (std::size_t k = 0; k < forms_.size(); ++k) {
      const FormSpec& f = forms_[k];
      switch (f.kind) {
        case FormSpec::Kind::dz: out[k] = 1.0; break;
        case FormSpec::Kind::e2: out[k] = e2_value(table_->context(), u); break;
        case FormSpec::Kind::kronecker:
          out[k] = g[static_cast<std::size_t>(find(f.a))][static_cast<std::size_t>(f.n)];
          break;
        case FormSpec::Kind::g1_difference:
          out[k] = g[static_cast<std::size_t>(find(f.a))][1] - g[static_cast<std::size_t>(find(0.0))][1];
          break;
        case FormSpec::Kind::g1_regular: out[k] = g1_regular_value(*table_, u); break;
      }
    }
  }

 private:
  void translation_slot(Complex a) {
    if (find(a) < 0) translations_.push_back(a);
  }
  int find(Complex a) const {
    for (std::size_t k = 0; k < translations_.size(); ++k) {
      if (translations_[k] == a) return static_cast<int>(k);
    }
    return -1;
  }

  const KroneckerTable* table_;
  std::vector<FormSpec> forms_;
  std::vector<Complex> translations_;
};

struct Trie {
  std::vector<int> parent{-1};
  std::vector<int> form{-1};
  std::vector<std::map<int, int>> children{{}};
  std::vector<int> word_node;
};

class TrieSolver {
 public:
  TrieSolver(const Trie& trie, const FormEvaluator& evaluator, const IntegrationOptions& options)
      : trie_(trie), evaluator_(evaluator), options_(options) {}

  // Advances node values y from u0 to u1.
  std::vector<Complex> advance(Complex u0, Complex u1, const std::vector<Complex>& y) const {
    std::vector<Complex> coarse = panel(u0, u1, y);
    return refine(u0, u1, y, coarse, 0);
  }

 private:
  std::vector<Complex> refine(Complex u0, Complex u1, const std::vector<Complex>& y, const std::vector<Complex>& coarse,
                              int depth) const {
    Complex mid = 0.5 * (u0 + u1);
    std::vector<Complex> left = panel(u0, mid, y);
    std::vector<Complex> fine = panel(mid, u1, left);
    bool ok = true;
    for (std::size_t k = 0; k < fine.size() && ok; ++k) {
      double err = std::abs(fine[k] - coarse[k]);
      if (!(err <= options_.abs_tol + options_.rel_tol * std::abs(fine[k]))) ok = false;
    }
    if (ok) return fine;
    if (depth >= options_.max_depth) {
      throw Error(ErrorCode::quadrature, "step size underflow on the piece from " + describe(u0) + " to " +
                                              describe(u1) + "; the integrand is not resolved");
    }
    std::vector<Complex> y_mid = refine(u0, mid, y, left, depth + 1);
    std::vector<Complex> right = panel(mid, u1, y_mid);
    return refine(mid, u1, y_mid, right, depth + 1);
  }

  std::vector<Complex> panel(Complex u0, Complex u1, const std::vector<Complex>& y) const {
    const GaussRule& rule = gauss_rule();
    Complex h = 0.5 * (u1 - u0);
    std::array<std::vector<Complex>, order> f;
    for (int i = 0; i < order; ++i) {
      Complex u = u0 + (rule.x[static_cast<std::size_t>(i)] + 1.0) * h;
      evaluator_.evaluate(u, f[static_cast<std::size_t>(i)]);
    }
    const std::size_t nodes = trie_.parent.size();
    std::vector<std::array<Complex, order>> values(nodes);
    std::vector<Complex> out(nodes);
    values[0].fill(1.0);
    out[0] = 1.0;
    for (std::size_t node = 1; node < nodes; ++node) {
      const auto& pv = values[static_cast<std::size_t>(trie_.parent[node])];
      auto form = static_cast<std::size_t>(trie_.form[node]);
      std::array<Complex, order> integrand;
      for (int j = 0; j < order; ++j) integrand[static_cast<std::size_t>(j)] = pv[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(j)][form];
      Complex total = 0.0;
      for (int j = 0; j < order; ++j) total += rule.w[static_cast<std::size_t>(j)] * integrand[static_cast<std::size_t>(j)];
      out[node] = y[node] + h * total;
      for (int i = 0; i < order; ++i) {
        Complex acc = 0.0;
        const auto& row = rule.a[static_cast<std::size_t>(i)];
        for (int j = 0; j < order; ++j) acc += row[static_cast<std::size_t>(j)] * integrand[static_cast<std::size_t>(j)];
        values[node][static_cast<std::size_t>(i)] = y[node] + h * acc;
      }
    }
    return out;
  }

  const Trie& trie_;
  const FormEvaluator& evaluator_;
  const IntegrationOptions& options_;
};

}  // namespace

std::string FormSpec::to_string() const {
  auto fmt = [](Complex z) {
    std::ostringstream os;
    os.precision(10);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
  };
  switch (kind) {
    case Kind::dz: return "dz";
    case Kind::e2: return "E2 dz";
    case Kind::g1_difference: return "(T_{" + fmt(a) + "} - id) g1 dz";
    case Kind::kronecker: return "omega(" + std::to_string(n) + ";" + fmt(a) + ")";
    case Kind::g1_regular: return "(g1 - 1/z) dz";
  }
  return "?";
}

bool operator<(const FormSpec& x, const FormSpec& y) {
  return std::make_tuple(static_cast<int>(x.kind), x.n, x.a.real(), x.a.imag()) <
         std::make_tuple(static_cast<int>(y.kind), y.n, y.a.real(), y.a.imag());
}

Complex evaluate_form(const FormSpec& form, const KroneckerTable& table, Complex u) {
  FormEvaluator ev(table, {form});
  std::vector<Complex> out;
  ev.evaluate(u, out);
  return out[0];
}

IteratedIntegrator::IteratedIntegrator(const KroneckerTable& table, const PunctureSet& punctures,
                                       IntegrationOptions options)
    : table_(&table), punctures_(&punctures), options_(options) {
  if (options_.abs_tol <= 0.0 || options_.rel_tol < 0.0) throw Error(ErrorCode::invalid_argument, "bad tolerances");
  if (options_.max_panel <= 0.0) throw Error(ErrorCode::invalid_argument, "max_panel must be positive");
  eps_path_ = options_.eps_path > 0.0 ? options_.eps_path : 1e-3 * std::min(1.0, std::abs(table.context().tau()));
}

std::vector<Complex> IteratedIntegrator::integrate(const std::vector<std::vector<FormSpec>>& words, const Path& path,
                                                   StartMode mode) const {
  path.validate(*punctures_, eps_path_, mode);
  std::vector<FormSpec> forms;
  std::map<FormSpec, int> form_index;
  Trie trie;
  for (const auto& word : words) {
    int node = 0;
    for (const FormSpec& f : word) {
      auto [fit, inserted] = form_index.emplace(f, static_cast<int>(forms.size()));
      if (inserted) forms.push_back(f);
      auto& kids = trie.children[static_cast<std::size_t>(node)];
      auto kit = kids.find(fit->second);
      if (kit == kids.end()) {
        int fresh = static_cast<int>(trie.parent.size());
        trie.parent.push_back(node);
        trie.form.push_back(fit->second);
        trie.children.emplace_back();
        kids.emplace(fit->second, fresh);
        node = fresh;
      } else {
        node = kit->second;
      }
    }
    trie.word_node.push_back(node);
  }
  FormEvaluator evaluator(*table_, forms);
  TrieSolver solver(trie, evaluator, options_);
  std::vector<Complex> y(trie.parent.size(), 0.0);
  y[0] = 1.0;
  const auto& v = path.vertices();
  for (std::size_t k = 1; k < v.size(); ++k) {
    Complex a = v[k - 1];
    Complex b = v[k];
    if (a == b) continue;
    int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / options_.max_panel)));
    for (int p = 0; p < pieces; ++p) {
      Complex u0 = a + (b - a) * (static_cast<double>(p) / pieces);
      Complex u1 = p + 1 == pieces ? b : a + (b - a) * (static_cast<double>(p + 1) / pieces);
      y = solver.advance(u0, u1, y);
    }
  }
  std::vector<Complex> out;
  out.reserve(words.size());
  for (int node : trie.word_node) out.push_back(y[static_cast<std::size_t>(node)]);
  return out;
}

Complex IteratedIntegrator::integrate(const std::vector<FormSpec>& word, const Path& path, StartMode mode) const {
  return integrate(std::vector<std::vector<FormSpec>>{word}, path, mode).front();
}

Complex iterated_integral(const std::vector<FormSpec>& forms, const Path& path, const IteratedIntegrator& integrator) {
  return integrator.integrate(forms, path);
}

Complex chen_compose(const std::vector<FormSpec>& forms, const Path& path1, const Path& path2,
                     const IteratedIntegrator& integrator) {
  if (std::abs(path1.end() - path2.start()) > 1e-14 * std::max(1.0, std::abs(path1.end()))) {
    throw Error(ErrorCode::endpoint_mismatch, "chen_compose: first path must end where the second starts");
  }
  std::vector<std::vector<FormSpec>> prefixes;
  std::vector<std::vector<FormSpec>> suffixes;
  for (std::size_t k = 0; k <= forms.size(); ++k) {
    prefixes.emplace_back(forms.begin(), forms.begin() + static_cast<std::ptrdiff_t>(k));
    suffixes.emplace_back(forms.begin() + static_cast<std::ptrdiff_t>(k), forms.end());
  }
  auto first = integrator.integrate(prefixes, path1);
  auto second = integrator.integrate(suffixes, path2);
  Complex total = 0.0;
  for (std::size_t k = 0; k <= forms.size(); ++k) total += first[k] * second[k];
  return total;
}

double holonomy_invariance_check(const std::vector<FormSpec>& forms, const Path& path_a, const Path& path_b,
                                 const IteratedIntegrator& integrator) {
  if (std::abs(path_a.start() - path_b.start()) > 1e-14 || std::abs(path_a.end() - path_b.end()) > 1e-14) {
    throw Error(ErrorCode::endpoint_mismatch, "holonomy check needs paths with common endpoints");
  }
  return std::abs(integrator.integrate(forms, path_a) - integrator.integrate(forms, path_b));
}

}  // namespace elliptikit
