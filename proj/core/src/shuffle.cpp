#include "elliptikit/shuffle.hpp"

#include <cctype>

#include "elliptikit/literals.hpp"

namespace elliptikit {

std::string Letter::to_string() const {
  std::string a_text = a == Complex(0.0, 0.0) ? "0" : format_complex(a);
  return "(" + std::to_string(n) + ";" + a_text + ")";
}

std::string to_string(const Word& w) {
  std::string out = "[";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "|";
    out += w[k].to_string();
  }
  return out + "]";
}

std::string to_string(const ShuffleElement<GaussRational, Letter>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    std::string word = w.empty() ? "1" : to_string(w);
    std::string coeff = c.to_string();
    std::string term;
    if (c == GaussRational(1)) {
      term = word;
    } else if (c == GaussRational(-1)) {
      term = "-" + word;
    } else {
      term = coeff + "*" + word;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string to_string(const StarPolynomial<GaussRational>& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = "(" + to_string(p[k]) + ")";
    if (k == 0) {
      out += c;
    } else {
      out += c + "*X" + (k > 1 ? "^" + std::to_string(k) : std::string());
    }
  }
  return out.empty() ? "0" : out;
}

Word parse_word(const std::string& text, const std::map<std::string, Complex>& labels) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos < text.size() && text[pos] == 'G') ++pos;
  skip_space();
  if (pos >= text.size() || text[pos] != '[') throw ParseError(pos, "expected '[' in word literal");
  std::size_t close = text.find(']', pos);
  if (close == std::string::npos) throw ParseError(text.size(), "missing ']' in word literal");
  for (std::size_t k = close + 1; k < text.size(); ++k) {
    if (!std::isspace(static_cast<unsigned char>(text[k]))) throw ParseError(k, "trailing characters after word");
  }
  std::string body = text.substr(pos + 1, close - pos - 1);
  std::size_t base = pos + 1;
  Word word;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(';', start);
    if (end == std::string::npos) end = body.size();
    std::string item = body.substr(start, end - start);
    std::size_t first = item.find_first_not_of(" \t");
    if (first != std::string::npos) {
      std::size_t comma = item.find(',');
      if (comma == std::string::npos) throw ParseError(base + start, "letter needs 'n,a'");
      std::string n_text = item.substr(0, comma);
      std::string a_text = item.substr(comma + 1);
      auto strip = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        std::size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      n_text = strip(n_text);
      a_text = strip(a_text);
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(n_text, &used);
        if (used != n_text.size()) throw std::invalid_argument("n");
      } catch (const std::exception&) {
        throw ParseError(base + start, "letter index must be an integer");
      }
      if (n < 0) throw ParseError(base + start, "letter index must be >= 0");
      Complex a;
      auto label = labels.find(a_text);
      if (label != labels.end()) {
        a = label->second;
      } else {
        try {
          a = parse_complex(a_text);
        } catch (const ParseError&) {
          throw ParseError(base + start + comma + 1, "unknown puncture '" + a_text + "'");
        }
      }
      word.push_back(Letter{n, a});
    }
    start = end + 1;
  }
  return word;
}

}  // namespace elliptikit
