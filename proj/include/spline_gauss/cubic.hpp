#pragma once

#include <array>
#include <optional>

namespace spline_gauss {

/// c[0] t^3 + c[1] t^2 + c[2] t + c[3], evaluated in Horner form.
using CubicCoefficients = std::array<double, 4>;

double eval_cubic(const CubicCoefficients& c, double t) noexcept;

/// Largest root of the cubic strictly inside (lo, hi), or nullopt.
///
/// Brackets are isolated by scanning sign changes over a 64-cell grid that
/// is augmented with the critical points of the cubic, so two roots never
/// share a monotone cell. The selected bracket is refined by Newton steps
/// with a bisection fallback until |p(t)| <= 1e-14 * max|c_i| and, in
/// addition, the bracket is narrower than 1e-15 * (hi - lo) or the Newton
/// step has stalled at rounding level.
std::optional<double> largest_root_in(const CubicCoefficients& c, double lo,
                                      double hi);

}  // namespace spline_gauss
