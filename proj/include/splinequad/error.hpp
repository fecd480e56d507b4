#ifndef SPLINEQUAD_ERROR_HPP
#define SPLINEQUAD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace splinequad {

enum class ErrorKind {
  InvalidArgument,
  UnsupportedContinuity,
  HalfRuleUnsupported,
  SingularDenominator,
  RecursionPole,
  Indeterminate,
  NoConvergence,
  SpaceMismatch,
  MalformedDocument,
};

/// Single exception type for the library; `kind()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace splinequad

#endif  // SPLINEQUAD_ERROR_HPP
