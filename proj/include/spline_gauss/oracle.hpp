#pragma once

#include <cstdint>
#include <functional>

#include "spline_gauss/basis.hpp"
#include "spline_gauss/knots.hpp"
#include "spline_gauss/rule.hpp"

namespace spline_gauss {

// Ground truth that does not go through the rule construction: seeded
// random splines and composite Gauss-Legendre reference integrals.

/// 64-bit linear congruential generator
///   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
/// with uniform doubles taken from the top 53 bits. Chosen over <random>
/// distributions because its output is identical on every platform.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ = kMultiplier * state_ + kIncrement;
    return state_;
  }

  /// Uniform in [0, 1).
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

 private:
  std::uint64_t state_;
};

/// Spline with coefficients drawn uniformly from [-1, 1].
SplineFunction random_spline(const KnotSequence& knots, std::uint64_t seed);

enum class IntegralMethod { BasisLinearity, PiecewiseGauss, Adaptive };

struct ReferenceIntegral {
  double value;
  IntegralMethod method;
};

using Integrand = std::function<double(double)>;

inline constexpr int kDefaultPiecePoints = 5;

/// Composite Gauss-Legendre with per_piece_points nodes on every knot
/// interval; exact for piecewise polynomials of degree
/// <= 2 per_piece_points - 1.
ReferenceIntegral reference_integral(const Integrand& f,
                                     const KnotSequence& knots,
                                     int per_piece_points = kDefaultPiecePoints);

/// Spline integral by linearity over the basis integrals.
ReferenceIntegral reference_integral(const SplineFunction& s);

/// Repeats the composite rule with 5, 10, 20, ... points per piece until two
/// successive values agree to rel_tol (at most 160 points per piece).
ReferenceIntegral adaptive_reference_integral(const Integrand& f,
                                              const KnotSequence& knots,
                                              double rel_tol = 1e-15);

/// I(f) - Q(f) with I(f) from reference_integral over the rule's knots.
double remainder(const Integrand& f, const QuadratureRule& rule,
                 int per_piece_points = kDefaultPiecePoints);

}  // namespace spline_gauss
