#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace elliptikit {

using Complex = std::complex<double>;

enum class ErrorCode {
  invalid_argument,
  singularity,
  invalid_path,
  quadrature,
  extrapolation,
  ring_mismatch,
  endpoint_mismatch,
  configuration,
  parse,
  internal_consistency,
  no_convergence,
  ill_conditioned,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when an evaluation point is too close to a pole.
class SingularityError : public Error {
 public:
  SingularityError(Complex point, Complex nearest, const std::string& what);
  Complex point() const noexcept { return point_; }
  Complex nearest() const noexcept { return nearest_; }

 private:
  Complex point_;
  Complex nearest_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace elliptikit
