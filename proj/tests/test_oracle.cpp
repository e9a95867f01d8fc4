#include <doctest.h>

#include <cmath>
#include <limits>

#include "spline_gauss/oracle.hpp"
#include "spline_gauss/peano.hpp"
#include "support.hpp"

using namespace spline_gauss;

TEST_CASE("generator is the documented recurrence") {
  Lcg64 g(0);
  CHECK(g.next() == 1442695040888963407ULL);
  CHECK(g.next() == 6364136223846793005ULL * 1442695040888963407ULL +
                        1442695040888963407ULL);
  Lcg64 u(12345);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("random splines are deterministic per seed") {
  const KnotSequence k = chebyshev_knots(8, 0, 1);
  const SplineFunction s1 = random_spline(k, 42);
  const SplineFunction s2 = random_spline(k, 42);
  CHECK(s1.coeffs() == s2.coeffs());
  CHECK(s1.coeffs() != random_spline(k, 43).coeffs());
  for (double c : s1.coeffs()) {
    CHECK(c >= -1.0);
    CHECK(c <= 1.0);
  }
  std::vector<double> neg(s1.coeffs());
  for (double& c : neg) c = -c;
  CHECK(exact_integral(SplineFunction(k, neg)) == -exact_integral(s1));
}

TEST_CASE("random splines are continuously differentiable") {
  const KnotSequence k = legendre_knots(10, 0, 1);
  const SplineFunction s = random_spline(k, 3);
  for (int i = 1; i < k.n(); ++i) {
    const double x = k.x(i);
    const double step = 0.1 * std::min(k.h(i), k.h(i + 1));
    const auto side = [&](int dir) {
      const auto d = [&](double h) { return dir * (s(x + dir * h) - s(x)) / h; };
      const double r1 = 2 * d(step / 2) - d(step);
      const double r2 = 2 * d(step / 4) - d(step / 2);
      return (4 * r2 - r1) / 3;
    };
    CHECK(std::abs(side(-1) - side(1)) <= 1e-8 / (step * step));
  }
}

TEST_CASE("reference integrals") {
  const KnotSequence k = geometric_knots(7, 1.5, 0, 1);
  SUBCASE("splines: composite Gauss against basis linearity") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const SplineFunction s = random_spline(k, seed);
      const ReferenceIntegral lin = reference_integral(s);
      CHECK(lin.method == IntegralMethod::BasisLinearity);
      CHECK(lin.value == exact_integral(s));
      for (int p : {2, 5}) {
        const ReferenceIntegral g = reference_integral(s, k, p);
        CHECK(g.method == IntegralMethod::PiecewiseGauss);
        CHECK(std::abs(g.value - lin.value) <= 1e-13 * std::max(1.0, std::abs(lin.value)));
      }
    }
  }
  SUBCASE("constants and monomials") {
    CHECK(reference_integral([](double) { return 1.0; }, k).value ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(reference_integral([](double t) { return t * t * t * t; }, k, 3).value ==
          doctest::Approx(0.2).epsilon(1e-15));
  }
  SUBCASE("adaptive") {
    const ReferenceIntegral a =
        adaptive_reference_integral([](double t) { return std::exp(t); }, k);
    CHECK(a.method == IntegralMethod::Adaptive);
    CHECK(a.value == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-15));
  }
  SUBCASE("fewer than two points per piece is refused") {
    CHECK_THROWS(reference_integral([](double) { return 1.0; }, k, 1));
  }
}

TEST_CASE("remainders") {
  const QuadratureRule r = compute_rule(chebyshev_knots(7, 0, 1));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SplineFunction s = random_spline(r.knots, seed);
    const double rem = remainder(s, r);
    CHECK(std::abs(rem) <= 1e-12 * (1 + std::abs(exact_integral(s))));
  }
  const auto t4 = [](double t) { return t * t * t * t; };
  // I(t^4) - Q(t^4) cancels two values near 0.2, so in double it is good to
  // a few ulps of 0.2; 1e-12 relative is reachable only for coarse rules.
  for (const QuadratureRule& coarse :
       {classical_two_point(0, 1), compute_rule(uniform_knots(2, 0, 1))}) {
    const double q = remainder(t4, coarse);
    CHECK(std::abs(q - 24 * constant_numeric(coarse)) <= 1e-12 * std::abs(q));
  }
  const double quartic = remainder(t4, r);
  const double floor = 16 * std::numeric_limits<double>::epsilon() * 0.2;
  CHECK(std::abs(quartic - 24 * constant_numeric(r)) <= floor);
  CHECK(std::abs(remainder([](double t) { return t * t * t; }, r)) <= 1e-15);
}

TEST_CASE("remainder decays at fourth order") {
  std::vector<double> rem;
  for (int n : {4, 8, 16, 32}) {
    rem.push_back(std::abs(
        remainder([](double t) { return std::exp(t); }, compute_rule(uniform_knots(n, 0, 1)))));
  }
  for (std::size_t i = 1; i < rem.size(); ++i) {
    const double ratio = rem[i - 1] / rem[i];
    CAPTURE(i);
    CHECK(ratio >= 12.0);
    CHECK(ratio <= 20.0);
  }
}
