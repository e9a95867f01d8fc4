#include "spline_gauss/error.hpp"

namespace spline_gauss {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotStretched: return "NotStretched";
    case ErrorKind::InvalidRatio: return "InvalidRatio";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DomainTooSmall: return "DomainTooSmall";
    case ErrorKind::RecursionBreakdown: return "RecursionBreakdown";
    case ErrorKind::NoRootInInterval: return "NoRootInInterval";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::ptrdiff_t> index) {
  std::string out(error_name(kind));
  if (index) out += " at index " + std::to_string(*index);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::ptrdiff_t> index)
    : std::runtime_error(decorate(kind, message, index)),
      kind_(kind),
      index_(index) {}

}  // namespace spline_gauss
