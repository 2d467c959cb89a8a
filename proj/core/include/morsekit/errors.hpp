#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace morsekit {

enum class ErrorKind {
  domain,       // argument outside the mathematical domain of an operation
  aliasing,     // wavelet not resolved by the sampling grid
  quadrature,   // adaptive integration failed to converge
  convergence,  // root finder / iteration failed
  argument,     // malformed or inconsistent inputs
  parse,        // text input could not be parsed
  io,           // file system failure
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library error. Every failure raised by morsekit carries a kind so that
/// front ends can report it in a stable, machine-readable way.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace morsekit
