#include "elliptikit/error.hpp"

#include <sstream>

namespace elliptikit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::singularity: return "singularity";
    case ErrorCode::invalid_path: return "invalid_path";
    case ErrorCode::quadrature: return "quadrature";
    case ErrorCode::extrapolation: return "extrapolation";
    case ErrorCode::ring_mismatch: return "ring_mismatch";
    case ErrorCode::endpoint_mismatch: return "endpoint_mismatch";
    case ErrorCode::configuration: return "configuration";
    case ErrorCode::parse: return "parse";
    case ErrorCode::internal_consistency: return "internal_consistency";
    case ErrorCode::no_convergence: return "no_convergence";
    case ErrorCode::ill_conditioned: return "ill_conditioned";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {
std::string describe_singularity(Complex point, Complex nearest, const std::string& what) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": z = (" << point.real() << ", " << point.imag()
     << ") is too close to the pole at (" << nearest.real() << ", " << nearest.imag() << ")";
  return os.str();
}
}  // namespace

SingularityError::SingularityError(Complex point, Complex nearest, const std::string& what)
    : Error(ErrorCode::singularity, describe_singularity(point, nearest, what)),
      point_(point),
      nearest_(nearest) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorCode::parse, message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace elliptikit
