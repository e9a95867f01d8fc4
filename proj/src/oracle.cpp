#include "spline_gauss/oracle.hpp"

#include <cmath>

#include "spline_gauss/error.hpp"
#include "spline_gauss/legendre.hpp"
#include "spline_gauss/summation.hpp"

namespace spline_gauss {

SplineFunction random_spline(const KnotSequence& knots, std::uint64_t seed) {
  Lcg64 rng(seed);
  std::vector<double> coeffs(static_cast<std::size_t>(basis_dimension(knots)));
  for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
  return SplineFunction(knots, std::move(coeffs));
}

ReferenceIntegral reference_integral(const Integrand& f,
                                     const KnotSequence& knots,
                                     int per_piece_points) {
  if (per_piece_points < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "reference integral needs at least 2 points per piece");
  }
  const GaussLegendre gl = gauss_legendre(per_piece_points);
  CompensatedSum sum;
  for (int k = 1; k <= knots.n(); ++k) {
    const double lo = knots.x(k - 1);
    const double hi = knots.x(k);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
      sum.add(half * gl.weights[q] * f(mid + half * gl.nodes[q]));
    }
  }
  return {sum.value(), IntegralMethod::PiecewiseGauss};
}

ReferenceIntegral reference_integral(const SplineFunction& s) {
  return {exact_integral(s), IntegralMethod::BasisLinearity};
}

ReferenceIntegral adaptive_reference_integral(const Integrand& f,
                                              const KnotSequence& knots,
                                              double rel_tol) {
  double prev = reference_integral(f, knots, 5).value;
  for (int points = 10; points <= 160; points *= 2) {
    const double cur = reference_integral(f, knots, points).value;
    if (std::abs(cur - prev) <= rel_tol * (1.0 + std::abs(cur))) {
      return {cur, IntegralMethod::Adaptive};
    }
    prev = cur;
  }
  return {prev, IntegralMethod::Adaptive};
}

double remainder(const Integrand& f, const QuadratureRule& rule,
                 int per_piece_points) {
  return reference_integral(f, rule.knots, per_piece_points).value -
         apply(rule, f);
}

}  // namespace spline_gauss
