#include "elliptikit/gamma.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>

namespace elliptikit {

namespace {

Complex path_log(const Path& path) {
  const auto& v = path.vertices();
  Complex total = std::log(v[1]);
  for (std::size_t k = 2; k < v.size(); ++k) {
    if (v[k] == v[k - 1]) continue;
    total += std::log(v[k] / v[k - 1]);
  }
  return total;
}

std::vector<std::vector<FormSpec>> prefixes_of(const Word& word) {
  std::vector<std::vector<FormSpec>> out;
  std::vector<FormSpec> forms = forms_of(word);
  for (std::size_t k = 0; k <= forms.size(); ++k) out.emplace_back(forms.begin(), forms.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

std::vector<std::vector<FormSpec>> suffixes_of(const Word& word) {
  std::vector<std::vector<FormSpec>> out;
  std::vector<FormSpec> forms = forms_of(word);
  for (std::size_t k = 0; k <= forms.size(); ++k) out.emplace_back(forms.begin() + static_cast<std::ptrdiff_t>(k), forms.end());
  return out;
}

}  // namespace

FormSpec form_of(const Letter& letter) {
  if (letter.n < 0) throw Error(ErrorCode::invalid_argument, "letter index must be >= 0");
  return FormSpec::kronecker(letter.n, letter.a);
}

std::vector<FormSpec> forms_of(const Word& word) {
  std::vector<FormSpec> out;
  out.reserve(word.size());
  for (const Letter& l : word) out.push_back(form_of(l));
  return out;
}

GammaEvaluator::GammaEvaluator(const IteratedIntegrator& integrator, double delta)
    : integrator_(&integrator), delta_(delta) {
  if (!(delta > 0.0)) throw Error(ErrorCode::invalid_argument, "delta must be positive");
  double clearance = integrator.punctures().segment_distance(0.0, delta, 0.0, 1e-12);
  if (clearance < integrator.eps_path()) {
    throw Error(ErrorCode::configuration, "the segment (0, delta) meets a puncture; choose a smaller delta");
  }
}

Path GammaEvaluator::default_path(Complex z, const std::vector<Complex>& via) const {
  std::vector<Complex> v{0.0, Complex(0.5 * delta_, 0.0)};
  v.insert(v.end(), via.begin(), via.end());
  if (v.back() != z) v.push_back(z);
  return Path(std::move(v));
}

Path GammaEvaluator::normalize(const Path& path) const {
  const auto& v = path.vertices();
  if (v.front() != Complex(0.0, 0.0)) {
    throw Error(ErrorCode::invalid_path, "regularised paths must start at the tangential base point 0");
  }
  if (v.size() >= 2 && v[1].imag() == 0.0 && v[1].real() > 0.0 && v[1].real() <= delta_) return path;
  std::vector<Complex> out{0.0, Complex(0.5 * delta_, 0.0)};
  out.insert(out.end(), v.begin() + 1, v.end());
  if (out.size() == 2) throw Error(ErrorCode::invalid_path, "path to the tangential base point itself");
  return Path(std::move(out));
}

Complex GammaEvaluator::G(const Path& path) const {
  Path p = normalize(path);
  return integrator_->integrate({FormSpec::g1_regular()}, p, StartMode::at_puncture) + path_log(p);
}

std::vector<Complex> GammaEvaluator::shuffle(const std::vector<Word>& words, const Path& path) const {
  Path p = normalize(path);
  const PunctureSet& punctures = integrator_->punctures();
  std::vector<StarPolynomial<GaussRational>> decompositions;
  std::map<Word, std::size_t> regular_index;
  std::vector<std::vector<FormSpec>> batch;
  for (const Word& w : words) {
    for (const Letter& l : w) {
      if (punctures.index_of(l.a) < 0) {
        throw Error(ErrorCode::invalid_argument, "letter " + l.to_string() + " does not use a configured puncture");
      }
      if (l.n > integrator_->table().max_n()) {
        throw Error(ErrorCode::invalid_argument, "letter " + l.to_string() + " exceeds the Kronecker table range");
      }
    }
    decompositions.push_back(star_decompose(ShuffleElement<GaussRational>(w)));
    for (const auto& c : decompositions.back()) {
      for (const auto& [rw, coeff] : c.terms()) {
        if (regular_index.emplace(rw, batch.size()).second) batch.push_back(forms_of(rw));
      }
    }
  }
  bool needs_g = false;
  for (const auto& d : decompositions) needs_g = needs_g || d.size() > 1;
  std::size_t g_slot = batch.size();
  if (needs_g) batch.push_back({FormSpec::g1_regular()});
  std::vector<Complex> values = integrator_->integrate(batch, p, StartMode::at_puncture);
  Complex g_value = needs_g ? values[g_slot] + path_log(p) : Complex(0.0);
  std::vector<Complex> out;
  out.reserve(words.size());
  for (const auto& d : decompositions) {
    Complex total = 0.0;
    Complex g_power = 1.0;
    for (const auto& c : d) {
      Complex ck = 0.0;
      for (const auto& [rw, coeff] : c.terms()) ck += coeff.to_complex() * values[regular_index.at(rw)];
      total += ck * g_power;
      g_power *= g_value;
    }
    out.push_back(total);
  }
  return out;
}

Complex GammaEvaluator::shuffle(const Word& word, const Path& path) const {
  return shuffle(std::vector<Word>{word}, path).front();
}

Complex GammaEvaluator::shuffle(const ShuffleElement<GaussRational>& element, const Path& path) const {
  return shuffle(to_complex(element), path);
}

Complex GammaEvaluator::shuffle(const ShuffleElement<Complex>& element, const Path& path) const {
  std::vector<Word> words;
  std::vector<Complex> coeffs;
  for (const auto& [w, c] : element.terms()) {
    words.push_back(w);
    coeffs.push_back(c);
  }
  if (words.empty()) return 0.0;
  std::vector<Complex> values = shuffle(words, path);
  Complex total = 0.0;
  for (std::size_t k = 0; k < words.size(); ++k) total += coeffs[k] * values[k];
  return total;
}

TangentialResult GammaEvaluator::tangential(const Word& word, const Path& path, const TangentialConfig& config) const {
  Path p = normalize(path);
  const auto& v = p.vertices();
  Complex v1 = v[1];
  std::vector<double> samples = config.t_samples;
  if (samples.empty()) {
    for (int k = 0; k < 30; ++k) samples.push_back(0.5 * config.delta * std::ldexp(1.0, -k));
  }
  int degree_bound = config.fit_degree_cap >= 0 ? config.fit_degree_cap
                                                 : degree(ShuffleElement<GaussRational>(word)).value_or(0);
  // Correction terms t^m log^j t (m >= 1) can carry one log per (1;0) letter anywhere in the word.
  int log_letters = 0;
  for (const Letter& l : word) log_letters += l.is_log() ? 1 : 0;
  int correction_logs = std::max(degree_bound, log_letters);
  int m_max = std::max(0, config.correction_order);
  std::vector<std::pair<int, int>> basis;  // (m, j)
  for (int j = 0; j <= degree_bound; ++j) basis.emplace_back(0, j);
  for (int m = 1; m <= m_max; ++m) {
    for (int j = 0; j <= correction_logs; ++j) basis.emplace_back(m, j);
  }
  std::size_t unknowns = basis.size();
  if (samples.size() < unknowns + 2 || samples.size() < static_cast<std::size_t>(degree_bound + 3)) {
    throw Error(ErrorCode::configuration, "too few tangential samples for the requested fit");
  }
  for (double t : samples) {
    if (!(t > 0.0) || t > v1.real()) {
      throw Error(ErrorCode::configuration, "tangential samples must lie in (0, first path vertex]");
    }
  }
  // Chen splitting at v1: k_t(w)(z) = sum_k I_[t,v1](w[:k]) I_[v1..z](w[k:]).
  std::vector<Complex> tail(word.size() + 1, 0.0);
  tail[word.size()] = 1.0;
  if (v.size() > 2) {
    Path rest(std::vector<Complex>(v.begin() + 1, v.end()));
    tail = integrator_->integrate(suffixes_of(word), rest, StartMode::regular);
  } else {
    tail.assign(word.size() + 1, 0.0);
    tail[word.size()] = 1.0;
  }
  auto prefixes = prefixes_of(word);
  TangentialResult result;
  result.t_samples = samples;
  for (double t : samples) {
    std::vector<Complex> head(word.size() + 1, 0.0);
    head[0] = 1.0;
    if (t < v1.real()) head = integrator_->integrate(prefixes, Path::segment(Complex(t, 0.0), v1), StartMode::at_puncture);
    Complex value = 0.0;
    for (std::size_t k = 0; k <= word.size(); ++k) value += head[k] * tail[k];
    result.samples.push_back(value);
  }
  const auto rows = static_cast<Eigen::Index>(samples.size());
  const auto cols = static_cast<Eigen::Index>(unknowns);
  Eigen::MatrixXd A(rows, cols);
  Eigen::MatrixXd b(rows, 2);
  for (Eigen::Index r = 0; r < rows; ++r) {
    double t = samples[static_cast<std::size_t>(r)];
    double lt = std::log(t);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      A(r, static_cast<Eigen::Index>(c)) = std::pow(t, basis[c].first) * std::pow(lt, basis[c].second);
    }
    b(r, 0) = result.samples[static_cast<std::size_t>(r)].real();
    b(r, 1) = result.samples[static_cast<std::size_t>(r)].imag();
  }
  Eigen::VectorXd scale = A.colwise().norm().transpose();
  for (Eigen::Index c = 0; c < cols; ++c) A.col(c) /= scale(c);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  Eigen::MatrixXd x = qr.solve(b);
  Eigen::MatrixXd fitted = A * x;
  double largest = 0.0;
  double worst = 0.0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    largest = std::max(largest, std::hypot(b(r, 0), b(r, 1)));
    worst = std::max(worst, std::hypot(fitted(r, 0) - b(r, 0), fitted(r, 1) - b(r, 1)));
  }
  result.residual = largest > 0.0 ? worst / largest : worst;
  if (result.residual > config.residual_tolerance) {
    throw Error(ErrorCode::extrapolation, "tangential fit residual " + std::to_string(result.residual) +
                                              " exceeds tolerance " + std::to_string(config.residual_tolerance));
  }
  for (int j = 0; j <= degree_bound; ++j) {
    result.log_coefficients.emplace_back(x(j, 0) / scale(j), x(j, 1) / scale(j));
  }
  result.value = result.log_coefficients.front();
  return result;
}

double GammaEvaluator::derivative_check(const Word& word, const Path& path, double h) const {
  if (word.empty()) throw Error(ErrorCode::invalid_argument, "derivative check needs a non-empty word");
  Path p = normalize(path);
  Complex z = p.end();
  std::vector<Word> prefix_words;
  for (std::size_t k = 0; k <= word.size(); ++k) prefix_words.emplace_back(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Complex> at_z = shuffle(prefix_words, p);
  auto suffixes = suffixes_of(word);
  const double offsets[4] = {-2.0, -1.0, 1.0, 2.0};
  Complex f[4];
  for (int i = 0; i < 4; ++i) {
    std::vector<Complex> tail = integrator_->integrate(suffixes, Path::segment(z, z + offsets[i] * h));
    Complex value = 0.0;
    for (std::size_t k = 0; k <= word.size(); ++k) value += at_z[k] * tail[k];
    f[i] = value;
  }
  Complex fd = (f[0] - 8.0 * f[1] + 8.0 * f[2] - f[3]) / (12.0 * h);
  Complex rhs = evaluate_form(form_of(word.back()), integrator_->table(), z) * at_z[word.size() - 1];
  return std::abs(fd - rhs) / std::max(1.0, std::abs(rhs));
}

Complex GammaEvaluator::basepoint_transport(const Word& word, const Path& to_z0, const Path& z0_to_z) const {
  Path p0 = normalize(to_z0);
  if (std::abs(p0.end() - z0_to_z.start()) > 1e-14 * std::max(1.0, std::abs(p0.end()))) {
    throw Error(ErrorCode::endpoint_mismatch, "basepoint transport paths do not meet at z0");
  }
  std::vector<Word> prefix_words;
  for (std::size_t k = 0; k <= word.size(); ++k) prefix_words.emplace_back(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Complex> at_z0 = shuffle(prefix_words, p0);
  std::vector<Complex> tail = integrator_->integrate(suffixes_of(word), z0_to_z);
  Complex total = 0.0;
  for (std::size_t k = 0; k <= word.size(); ++k) total += at_z0[k] * tail[k];
  return total;
}

}  // namespace elliptikit
