#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "spline_gauss/rule.hpp"

namespace spline_gauss {

/// Order-4 Peano kernel of a rule on [a, b]:
///
///   K(t) = (t - a)^4 / 24 - 1/6 sum_i w_i (t - tau_i)_+^3
///
/// Left of the midpoint c this form is used as written. Right of c the
/// equivalent form (b - t)^4 / 24 - 1/6 sum_i w_i (tau_i - t)_+^3 is used, so
/// the integral over [a, b] is the remainder of (t - c)^4 / 24 even though
/// the rounded rule is not exactly cubic-exact.
///
/// Each half is evaluated from Taylor data anchored at the knots so every
/// term stays on the scale of the local interval; the direct formula cancels
/// badly for fine knot sequences.
class PeanoKernel {
 public:
  explicit PeanoKernel(const QuadratureRule& rule);

  double operator()(double t) const;
  // Same value before rounding to double.
  long double extended(double t) const;

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double centre() const noexcept { return centre_; }

 private:
  // Left-anchored form on increasing knots and nodes.
  struct Half {
    Half(std::vector<double> knots, std::vector<double> nodes,
         std::vector<double> weights);
    long double operator()(double t) const;

    std::vector<double> knots;
    std::vector<double> nodes;
    std::vector<double> weights;
    // K, K', K'', K''' at x_k (left limits), k = 0 .. n.
    std::vector<std::array<long double, 4>> anchors;
    // Index of the first node >= x_k, k = 0 .. n.
    std::vector<std::size_t> first_node;
  };

  static Half mirrored(const QuadratureRule& rule);

  double a_;
  double b_;
  double centre_;
  Half left_;
  // The rule reflected through t -> -t, evaluated at -t.
  Half right_;
};

double kernel_eval(const QuadratureRule& rule, double t);

/// Integral of the kernel over [a, b], integrated exactly with a 3-point
/// Gauss rule on each segment between consecutive nodes and the midpoint.
double constant_numeric(const QuadratureRule& rule);

/// (I(f) - Q(f)) / 24 for a monic quartic f, in extended precision. The
/// quartic is centred at the domain midpoint, which leaves f'''' = 24
/// unchanged and avoids cancelling against large powers of a, b.
double quartic_oracle(const QuadratureRule& rule);

/// The printed closed form of the error constant, evaluated with its index
/// ranges as written, next to the symmetric full-range form
///   1/720 sum_{k=1}^{n} h_k^5 - 1/24 sum_i w_i (x_{k-1} - tau_i)^2 (x_k - tau_i)^2
/// (k the interval holding tau_i) and the kernel integral. A form matches
/// when it is within 1e-10 relative plus 1e-16 (b - a)^5 of the integral.
struct ClosedFormConstant {
  double as_printed;
  double full_range;
  double numeric;
  bool as_printed_matches;
  bool full_range_matches;
};

ClosedFormConstant constant_closed_form(const QuadratureRule& rule);

struct ErrorConstant {
  ClosedFormConstant closed_form;
  double numeric;
  double quartic_oracle;
};

ErrorConstant error_constant(const QuadratureRule& rule);

struct KernelScanReport {
  std::size_t samples = 0;
  double min_value = 0.0;
  double min_location = 0.0;
  /// Sample points where |K| has a local minimum below the near-zero
  /// threshold 1e-10 (b - a)^4.
  std::vector<double> near_zeros;
  /// min_value >= -1e-13 (b - a)^4.
  bool nonnegative = false;
  /// Every near-zero lies within 1e-6 (b - a) of a knot.
  bool zeros_at_knots = false;

  bool passed() const noexcept { return nonnegative && zeros_at_knots; }
};

/// Samples the kernel on every segment between consecutive knots and nodes
/// (samples_per_segment >= 8 points each, segment ends included).
KernelScanReport kernel_sign_scan(const QuadratureRule& rule,
                                  int samples_per_segment);

/// "t,K4" rows on grid + 1 equally spaced points, preceded by a comment line
/// carrying the error constant.
void write_kernel_csv(std::ostream& out, const QuadratureRule& rule, int grid);

}  // namespace spline_gauss
