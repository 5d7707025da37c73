#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphinc {

enum class ErrorKind {
  CollinearInput,
  IdenticalSpheres,
  TooFewPoints,
  NotDegenerate,
  NotIncident,
  SizeGuard,
  InfeasibleCircle,
  ImaginarySphere,
  CoincidentPoints,
  NonPositiveValue,
  DuplicateEntry,
  DegreeTooHigh,
  InvalidInput,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported as sphinc::Error carrying a kind, so
// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sphinc
