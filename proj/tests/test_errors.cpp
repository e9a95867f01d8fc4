#include <doctest.h>

#include <cmath>
#include <sstream>

#include "spline_gauss/oracle.hpp"
#include "spline_gauss/peano.hpp"
#include "spline_gauss/rule.hpp"
#include "support.hpp"

using namespace spline_gauss;

namespace {

std::vector<QuadratureRule> sample_rules() {
  std::vector<QuadratureRule> out{
      compute_rule(uniform_knots(2, 0, 1)),
      compute_rule(uniform_knots(3, 0, 1)),
      compute_rule(uniform_knots(16, -1, 1)),
      compute_rule(chebyshev_knots(5, 0, 1)),
      compute_rule(legendre_knots(8, 2, 3)),
      compute_rule(geometric_knots(9, 2.0, 0, 1)),
      classical_two_point(-1, 1),
  };
  Lcg64 rng(61);
  for (int i = 0; i < 13; ++i) {
    const double a = rng.uniform(-2, 2);
    out.push_back(compute_rule(testing::random_stretched(
        rng, testing::random_n(rng, 2, 40), a, a + rng.uniform(0.5, 3))));
  }
  return out;
}

double pow4(double x) { return x * x * x * x; }

}  // namespace

TEST_CASE("kernel end values") {
  for (const QuadratureRule& r : sample_rules()) {
    const double l4 = pow4(r.knots.length());
    CHECK(kernel_eval(r, r.knots.a()) == 0.0);
    CHECK(std::abs(kernel_eval(r, r.knots.b())) <= 1e-13 * l4);
  }
}

TEST_CASE("kernel value from the direct formula") {
  const QuadratureRule r = compute_rule(uniform_knots(2, 0, 1));
  double direct = pow4(0.5) / 24;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.nodes[i] < 0.5) direct -= r.weights[i] * std::pow(0.5 - r.nodes[i], 3) / 6;
  }
  CHECK(kernel_eval(r, 0.5) == doctest::Approx(direct).epsilon(1e-12));
  // Remainder of the hinge (t - 0.5)_+^3 / 6.
  const auto hinge = [](double t) { return t > 0.5 ? std::pow(t - 0.5, 3) / 6 : 0.0; };
  const double rem = pow4(0.5) / 24 - apply(r, hinge);
  CHECK(kernel_eval(r, 0.5) == doctest::Approx(rem).epsilon(1e-12));
}

TEST_CASE("kernel is continuous across the midpoint") {
  for (const QuadratureRule& r : sample_rules()) {
    const PeanoKernel k(r);
    const double c = k.centre();
    const double below = std::nextafter(c, r.knots.a());
    CHECK(std::abs(k(c) - k(below)) <= 1e-14 * pow4(r.knots.length()));
  }
}

TEST_CASE("peano identity at random points") {
  Lcg64 rng(71);
  for (const QuadratureRule& r : sample_rules()) {
    const double l4 = pow4(r.knots.length());
    for (int i = 0; i < 50; ++i) {
      const double s = rng.uniform(r.knots.a(), r.knots.b());
      const auto hinge = [s](double t) {
        return t > s ? (t - s) * (t - s) * (t - s) / 6 : 0.0;
      };
      // The hinge is a cubic on each side of s; integrate it exactly.
      const double exact = pow4(r.knots.b() - s) / 24;
      const double rem = exact - apply(r, hinge);
      CHECK(std::abs(rem - kernel_eval(r, s)) <= 1e-12 * l4);
    }
  }
}

TEST_CASE("error constant agrees with the quartic remainder") {
  for (const QuadratureRule& r : sample_rules()) {
    const ErrorConstant c = error_constant(r);
    CHECK(c.numeric > 0.0);
    CHECK(c.quartic_oracle > 0.0);
    CHECK(std::abs(c.numeric - c.quartic_oracle) <= 1e-12 * c.quartic_oracle);
    CHECK(c.numeric == constant_numeric(r));
    CHECK(c.quartic_oracle == quartic_oracle(r));
  }
}

TEST_CASE("two-point Gauss constant") {
  // f'''' / 4320 (b - a)^5 for two-point Gauss: 32 / 4320 on [-1, 1].
  const double c = constant_numeric(classical_two_point(-1, 1));
  CHECK(c == doctest::Approx(2.0 / 270).epsilon(1e-14));
  CHECK(c == doctest::Approx(1.0 / 135).epsilon(1e-14));
}

TEST_CASE("constants shrink like h^4") {
  const double c4 = constant_numeric(compute_rule(uniform_knots(4, 0, 1)));
  const double c8 = constant_numeric(compute_rule(uniform_knots(8, 0, 1)));
  CHECK(c4 / c8 > 16 * 0.75);
  CHECK(c4 / c8 < 16 * 1.25);
}

TEST_CASE("closed forms") {
  SUBCASE("full-range form matches, printed form is reported") {
    for (const QuadratureRule& r : sample_rules()) {
      if (r.knots.n() < 2) continue;
      const ClosedFormConstant c = constant_closed_form(r);
      CHECK(c.full_range_matches);
      CHECK(c.numeric == constant_numeric(r));
    }
    const ClosedFormConstant u2 = constant_closed_form(compute_rule(uniform_knots(2, 0, 1)));
    CHECK(u2.as_printed_matches);
    const ClosedFormConstant u4 = constant_closed_form(compute_rule(uniform_knots(4, 0, 1)));
    CHECK_FALSE(u4.as_printed_matches);
    CHECK(u4.as_printed == doctest::Approx(2.30e-6).epsilon(0.01));
    CHECK(u4.numeric == doctest::Approx(3.656e-6).epsilon(0.001));
  }
  SUBCASE("degree-5 homogeneity") {
    const ClosedFormConstant unit = constant_closed_form(compute_rule(chebyshev_knots(7, 0, 1)));
    const ClosedFormConstant twice = constant_closed_form(compute_rule(chebyshev_knots(7, 0, 2)));
    CHECK(twice.as_printed == doctest::Approx(32 * unit.as_printed).epsilon(1e-12));
    CHECK(twice.full_range == doctest::Approx(32 * unit.full_range).epsilon(1e-12));
  }
}

TEST_CASE("remainder bound for sin") {
  for (const QuadratureRule& r :
       {compute_rule(uniform_knots(4, 0, 1)), compute_rule(chebyshev_knots(5, 0, 1)),
        compute_rule(geometric_knots(6, 1.5, 0, 1))}) {
    const double rem = std::abs(remainder([](double t) { return std::sin(t); }, r));
    const double bound = constant_numeric(r) * std::sin(1.0);
    CHECK(rem > 0.0);
    CHECK(rem / bound <= 1.0);
  }
}

TEST_CASE("kernel sign scan") {
  SUBCASE("chebyshev rule is nonnegative") {
    const QuadratureRule r = compute_rule(chebyshev_knots(5, 0, 1));
    const KernelScanReport rep = kernel_sign_scan(r, 10000 / 8);
    CHECK(rep.samples >= 10000);
    CHECK(rep.nonnegative);
    CHECK(rep.zeros_at_knots);
    CHECK(rep.passed());
  }
  SUBCASE("uniform kernel vanishes at the interior knots") {
    const QuadratureRule r = compute_rule(geometric_knots(5, 1.0, 0, 1));
    const KernelScanReport rep = kernel_sign_scan(r, 200);
    CHECK(rep.passed());
    CHECK(rep.near_zeros.size() >= 5);
    for (double z : rep.near_zeros) {
      double nearest = 1.0;
      for (double x : r.knots.knots()) nearest = std::min(nearest, std::abs(z - x));
      CHECK(nearest <= 1e-6);
    }
  }
  SUBCASE("two-point Gauss kernel is positive inside") {
    const QuadratureRule r = classical_two_point(0, 1);
    const KernelScanReport rep = kernel_sign_scan(r, 100);
    CHECK(rep.passed());
    for (double z : rep.near_zeros) CHECK((z <= 1e-6 || z >= 1.0 - 1e-6));
    for (double t = 0.01; t < 1.0; t += 0.01) CHECK(kernel_eval(r, t) > 0.0);
  }
  SUBCASE("a corrupted rule fails the scan") {
    QuadratureRule r = compute_rule(chebyshev_knots(5, 0, 1));
    r.weights[0] *= 1.5;
    CHECK_FALSE(kernel_sign_scan(r, 50).passed());
  }
  SUBCASE("too few samples") {
    CHECK_THROWS(kernel_sign_scan(classical_two_point(0, 1), 7));
  }
}

TEST_CASE("kernel csv") {
  const QuadratureRule r = compute_rule(uniform_knots(4, 0, 1));
  std::ostringstream out;
  write_kernel_csv(out, r, 10);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# constant_numeric=", 0) == 0);
  CHECK(std::stod(line.substr(19)) == constant_numeric(r));
  std::getline(in, line);
  CHECK(line == "t,K4");
  int rows = 0;
  double last_t = 0.0;
  while (std::getline(in, line)) {
    ++rows;
    last_t = std::stod(line.substr(0, line.find(',')));
  }
  CHECK(rows == 11);
  CHECK(last_t == 1.0);
  std::ostringstream bad;
  CHECK_THROWS(write_kernel_csv(bad, r, 1));
}
