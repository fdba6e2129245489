#pragma once

#include <string>
#include <vector>

#include "elliptikit/error.hpp"

namespace elliptikit {

// Accepts "RE+IMi", "IMi", "RE", "i" and "RE,IM".
Complex parse_complex(const std::string& text);
// "[re,im; re,im; ...]" with an optional "path:" prefix.
std::vector<Complex> parse_vertices(const std::string& text);
std::string format_complex(Complex z);

}  // namespace elliptikit
