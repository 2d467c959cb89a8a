#include "morsekit/errors.hpp"

namespace morsekit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::aliasing: return "aliasing";
    case ErrorKind::quadrature: return "quadrature";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::argument: return "argument";
    case ErrorKind::parse: return "parse";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace morsekit
