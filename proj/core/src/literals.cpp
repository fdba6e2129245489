#include "elliptikit/literals.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace elliptikit {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_real(const std::string& text, std::size_t offset) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError(offset, "empty number");
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) throw ParseError(offset, "malformed number '" + t + "'");
  return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError(0, "empty complex literal");
  auto comma = t.find(',');
  if (comma != std::string::npos) {
    return {parse_real(t.substr(0, comma), 0), parse_real(t.substr(comma + 1), comma + 1)};
  }
  char last = t.back();
  if (last != 'i' && last != 'I' && last != 'j') return {parse_real(t, 0), 0.0};
  std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  im_part = trim(im_part);
  double im = 0.0;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    if (im_part.back() == '*') im_part.pop_back();
    im = parse_real(im_part, split == std::string::npos ? 0 : split);
  }
  double re = re_part.empty() ? 0.0 : parse_real(re_part, 0);
  return {re, im};
}

std::vector<Complex> parse_vertices(const std::string& text) {
  std::string t = trim(text);
  if (t.rfind("path:", 0) == 0) t = trim(t.substr(5));
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw ParseError(0, "path literal must be enclosed in brackets");
  }
  std::string body = t.substr(1, t.size() - 2);
  std::vector<Complex> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(';', start);
    if (end == std::string::npos) end = body.size();
    std::string item = trim(body.substr(start, end - start));
    if (!item.empty()) out.push_back(parse_complex(item));
    start = end + 1;
  }
  if (out.empty()) throw ParseError(0, "path needs at least one vertex");
  return out;
}

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace elliptikit
