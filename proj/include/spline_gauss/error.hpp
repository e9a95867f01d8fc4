#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spline_gauss {

enum class ErrorKind {
  InvalidArgument,
  NotIncreasing,
  NotSymmetric,
  NotStretched,
  InvalidRatio,
  ConvergenceFailure,
  IndexOutOfRange,
  DomainTooSmall,
  RecursionBreakdown,
  NoRootInInterval,
  ParseError,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Library error. Carries a machine-readable kind and, where one exists,
/// the offending knot / node / basis index.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::ptrdiff_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::ptrdiff_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::ptrdiff_t> index_;
};

}  // namespace spline_gauss
