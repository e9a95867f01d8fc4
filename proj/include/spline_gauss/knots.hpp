#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace spline_gauss {

/// Relative (to b - a) slack allowed by knot validation.
struct KnotTolerances {
  double symmetry = 1e-12;
  double stretch = 1e-12;
};

/// A validated symmetrically stretched knot sequence a = x_0 < ... < x_n = b.
///
/// Every knot carries the implicit double multiplicity of the C1 cubic
/// spline space; only the distinct breakpoints are stored. The phantom knots
/// x_{-1} = 2 x_0 - x_1 and x_{n+1} = 2 x_n - x_{n-1} are derived on
/// construction and are available through x(-1) and x(n + 1).
///
/// Instances are immutable and can only be obtained from validate_knots()
/// or one of the generators below.
class KnotSequence {
 public:
  double a() const noexcept { return knots_.front(); }
  double b() const noexcept { return knots_.back(); }
  double length() const noexcept { return b() - a(); }

  /// Number of intervals n (the sequence holds n + 1 knots).
  int n() const noexcept { return static_cast<int>(knots_.size()) - 1; }

  std::span<const double> knots() const noexcept { return knots_; }
  double extended_left() const noexcept { return left_; }
  double extended_right() const noexcept { return right_; }

  /// Knot x_k for k in [-1, n + 1].
  double x(int k) const;

  /// Interval length h_k = x_k - x_{k-1} for k in [0, n + 1]; h_0 and
  /// h_{n+1} are taken against the phantom knots.
  double h(int k) const;

  /// h_1, ..., h_n.
  std::span<const double> intervals() const noexcept {
    return std::span<const double>(h_).subspan(1, knots_.size() - 1);
  }

  /// Index k in [1, n] of the interval [x_{k-1}, x_k) containing t; t at or
  /// beyond b maps to n and t below a maps to 1.
  int interval_of(double t) const noexcept;

  friend bool operator==(const KnotSequence&, const KnotSequence&) = default;

 private:
  explicit KnotSequence(std::vector<double> knots);

  friend KnotSequence validate_knots(std::vector<double>, double, double,
                                     KnotTolerances);

  std::vector<double> knots_;
  double left_ = 0.0;
  double right_ = 0.0;
  std::vector<double> h_;  // h_0 .. h_{n+1}
};

/// Checks ordering, symmetry and the stretching inequality
/// x_k - 2 x_{k+1} + x_{k+2} >= 0 on the left half. Throws Error with kind
/// NotIncreasing, NotSymmetric or NotStretched naming the offending index, or
/// InvalidArgument when the endpoints do not match [a, b].
KnotSequence validate_knots(std::vector<double> knots, double a, double b,
                            KnotTolerances tol = {});

/// n + 1 equally spaced knots on [a, b].
KnotSequence uniform_knots(int n, double a, double b);

/// N internal knots whose interval lengths grow by the ratio q from both
/// ends towards the midpoint. For an odd interval count the middle interval
/// continues the progression once more before mirroring. q = 1 reproduces
/// uniform_knots(N + 1, a, b) bit for bit.
KnotSequence geometric_knots(int internal, double q, double a, double b);

/// Roots of the degree-N Chebyshev polynomial of the first kind mapped to
/// (a, b), with the endpoints appended.
KnotSequence chebyshev_knots(int internal, double a, double b);

/// Roots of the degree-N Legendre polynomial mapped to (a, b), with the
/// endpoints appended.
KnotSequence legendre_knots(int internal, double a, double b);

}  // namespace spline_gauss
