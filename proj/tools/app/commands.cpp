#include "commands.hpp"

#include <cctype>

#include "elliptikit/diffalg.hpp"
#include "elliptikit/hyperlog.hpp"
#include "elliptikit/literals.hpp"

namespace elliptikit::app {

namespace {

using json = nlohmann::json;

json envelope(const std::string& command) { return json{{"schema", "elliptikit/1"}, {"command", command}}; }

// Replaces every letter's puncture by its representative in S.
Word canonical_word(const Word& w, const PunctureSet& punctures) {
  Word out = w;
  for (Letter& l : out) {
    int idx = punctures.index_of(l.a);
    if (idx < 0) {
      throw Error(ErrorCode::invalid_argument, "letter " + l.to_string() + " does not use a configured puncture");
    }
    l.a = punctures.representatives()[static_cast<std::size_t>(idx)];
  }
  return out;
}

Path path_or_default(const std::optional<std::string>& text, Complex start, std::optional<Complex> z) {
  if (!text) {
    if (!z) throw Error(ErrorCode::invalid_argument, "either --z or --path is required");
    return Path::segment(start, *z);
  }
  Path p(parse_vertices(*text));
  if (z && std::abs(p.end() - *z) > 1e-14) {
    throw Error(ErrorCode::endpoint_mismatch, "path ends at " + format_complex(p.end()) + ", not at z");
  }
  return p;
}

}  // namespace

json cmd_eval_g(const Session& s, int n, Complex z) {
  if (n < 0 || n > s.table().max_n()) {
    throw Error(ErrorCode::invalid_argument, "n must lie in [0, " + std::to_string(s.table().max_n()) + "]");
  }
  json out = envelope("eval-g");
  out["n"] = n;
  out["z"] = to_json(z);
  out["tau"] = to_json(s.ctx().tau());
  out["value"] = to_json(s.table().g(n, z));
  return out;
}

json cmd_eval_E(const Session& s, int r, Complex z) {
  if (r < 0 || r > s.ctx().r_max()) {
    throw Error(ErrorCode::invalid_argument, "r must lie in [0, " + std::to_string(s.ctx().r_max()) + "]");
  }
  json out = envelope("eval-E");
  out["r"] = r;
  out["z"] = to_json(z);
  out["tau"] = to_json(s.ctx().tau());
  out["value"] = to_json(s.ctx().eisenstein_function(r, z));
  if (r >= 2) out["e_r"] = to_json(s.ctx().eisenstein_series(r));
  return out;
}

json cmd_eval_hl(const Session& s, const std::string& word, Complex z0, std::optional<Complex> z,
                 const std::optional<std::string>& path) {
  HLWord w = parse_hl_word(word, s.config().all_labels());
  Path p = path_or_default(path, z0, z);
  if (std::abs(p.start() - z0) > 1e-14) throw Error(ErrorCode::endpoint_mismatch, "path does not start at z0");
  json out = envelope("eval-hl");
  json letters = json::array();
  for (const HLLetter& l : w) letters.push_back(l.to_string());
  out["word"] = letters;
  out["z0"] = to_json(z0);
  out["z"] = to_json(p.end());
  out["value"] = to_json(hl_eval(w, p, s.integrator()));
  return out;
}

json cmd_eval_gamma(const Session& s, const std::string& word, std::optional<Complex> z,
                    const std::optional<std::string>& path, const std::string& method) {
  if (method != "shuffle" && method != "tangential" && method != "both") {
    throw Error(ErrorCode::invalid_argument, "method must be shuffle, tangential or both");
  }
  if (!path && !z) throw Error(ErrorCode::invalid_argument, "either --z or --path is required");
  Word w = canonical_word(parse_word(word, s.config().all_labels()), s.punctures());
  Path p = path ? path_or_default(path, 0.0, z) : s.gamma().default_path(*z);
  json out = envelope("eval-gamma");
  out["word"] = to_string(w);
  out["z"] = to_json(p.end());
  out["method"] = method;
  Complex shuffled = 0.0;
  if (method != "tangential") {
    shuffled = s.gamma().shuffle(w, p);
    out["value"] = to_json(shuffled);
  }
  if (method != "shuffle") {
    TangentialConfig tcfg;
    tcfg.delta = s.gamma().delta();
    TangentialResult t = s.gamma().tangential(w, p, tcfg);
    json coeffs = json::array();
    for (Complex c : t.log_coefficients) coeffs.push_back(to_json(c));
    json tangential{{"value", to_json(t.value)}, {"log_coefficients", coeffs}, {"fit_residual", t.residual}};
    if (method == "both") {
      tangential["difference"] = std::abs(t.value - shuffled);
    } else {
      out["value"] = to_json(t.value);
    }
    out["tangential"] = tangential;
  }
  return out;
}

json cmd_reduce(const Session& s, const std::string& expr) {
  EllipticPoly u = parse_elliptic_poly(expr);
  ReductionResult r = reduce_mod_derivative(u);
  const CurveConstants k = curve_constants(s.ctx());
  json out = envelope("reduce");
  out["input"] = u.to_string();
  out["filtration_degree"] = filtration_degree(u);
  out["c"] = to_json(r.c.evaluate(k));
  out["c_exact"] = r.c.to_string();
  json lambdas = json::object();
  json exact = json::object();
  for (const auto& [n, lambda] : r.lambdas) {
    lambdas[std::to_string(n)] = to_json(lambda.evaluate(k));
    exact[std::to_string(n)] = lambda.to_string();
  }
  out["lambdas"] = lambdas;
  out["lambdas_exact"] = exact;
  out["primitive"] = r.primitive.to_string();
  out["constants"] = {{"e2", to_json(k.e2)}, {"g2", to_json(k.g2)}, {"g3", to_json(k.g3)}};
  return out;
}

json cmd_uniformize(const RunConfig& cfg, const BranchTriple& t) {
  UniformizeOptions opts;
  opts.lattice = cfg.lattice_options();
  UniformizationResult u = uniformize(t, opts);
  LatticeContext ctx(u.tau, opts.lattice);
  json out = envelope("uniformize");
  out["branch_points"] = {to_json(t.a1), to_json(t.a2), to_json(t.a3)};
  out["tau"] = to_json(u.tau);
  out["a"] = to_json(u.a);
  out["b"] = to_json(u.b);
  out["a_three_halves"] = to_json(u.a_three_halves);
  out["lambda"] = to_json(u.lambda_value);
  out["lambda_target"] = to_json(u.lambda_target);
  out["j"] = to_json(j_invariant(ctx));
  out["residuals"] = {u.residuals[0], u.residuals[1], u.residuals[2]};
  out["newton_iterations"] = u.newton_iterations;
  return out;
}

ShuffleElement<GaussRational> parse_shuffle_element(const std::string& text,
                                                    const std::map<std::string, Complex>& labels) {
  ShuffleElement<GaussRational> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) ++pos;
    return text.substr(start, pos - start);
  };
  bool first = true;
  skip();
  if (pos == text.size()) throw ParseError(0, "empty shuffle element");
  while (true) {
    skip();
    if (pos == text.size()) break;
    GaussRational sign(1);
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = GaussRational(-1);
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError(pos, "expected '+' or '-' between terms");
    }
    GaussRational coeff(1);
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
      std::size_t at = pos;
      Rational c = rational_from_decimal(digits());
      skip();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip();
        std::string den = digits();
        if (den.empty()) throw ParseError(pos, "expected a denominator");
        Rational d = rational_from_decimal(den);
        if (sgn(d) == 0) throw ParseError(at, "division by zero");
        c /= d;
      }
      skip();
      if (pos >= text.size() || text[pos] != '*') throw ParseError(pos, "expected '*' after a coefficient");
      ++pos;
      skip();
      coeff = GaussRational(c);
    }
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == 'G') ++pos;
    if (pos >= text.size() || text[pos] != '[') throw ParseError(pos, "expected a word literal");
    std::size_t close = text.find(']', pos);
    if (close == std::string::npos) throw ParseError(text.size(), "missing ']'");
    Word w;
    try {
      w = parse_word(text.substr(start, close + 1 - start), labels);
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), e.what());
    }
    out.add(w, sign * coeff);
    pos = close + 1;
    first = false;
  }
  return out;
}

json cmd_shuffle(const RunConfig& cfg, const std::string& op, const std::string& u_text,
                 const std::optional<std::string>& v_text) {
  const auto labels = cfg.all_labels();
  ShuffleElement<GaussRational> u = parse_shuffle_element(u_text, labels);
  json out = envelope("shuffle");
  out["op"] = op;
  out["u"] = to_string(u);
  if (op == "product") {
    if (!v_text) throw Error(ErrorCode::invalid_argument, "product needs --v");
    ShuffleElement<GaussRational> v = parse_shuffle_element(*v_text, labels);
    out["v"] = to_string(v);
    out["result"] = to_string(shuffle_product(u, v));
  } else if (op == "antipode") {
    out["result"] = to_string(antipode(u));
  } else if (op == "coproduct") {
    json terms = json::array();
    for (const auto& [ab, c] : coproduct(u)) {
      terms.push_back({{"left", to_string(ab.first)}, {"right", to_string(ab.second)}, {"coefficient", c.to_string()}});
    }
    out["result"] = terms;
  } else if (op == "decompose") {
    StarPolynomial<GaussRational> p = star_decompose(u);
    json coeffs = json::array();
    for (const auto& c : p) coeffs.push_back(to_string(c));
    out["coefficients"] = coeffs;
    out["result"] = to_string(p);
  } else if (op == "degree") {
    auto d = degree(u);
    out["result"] = d ? json(*d) : json("-infinity");
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown shuffle op '" + op + "'");
  }
  return out;
}

json error_json(const std::exception& e) {
  json err{{"message", e.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    err["code"] = to_string(p->code());
    err["position"] = p->position();
  } else if (const auto* s = dynamic_cast<const SingularityError*>(&e)) {
    err["code"] = to_string(s->code());
    err["point"] = to_json(s->point());
    err["nearest"] = to_json(s->nearest());
  } else if (const auto* x = dynamic_cast<const Error*>(&e)) {
    err["code"] = to_string(x->code());
  } else {
    err["code"] = "internal";
  }
  return json{{"schema", "elliptikit/1"}, {"error", err}};
}

}  // namespace elliptikit::app
