#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spline_gauss/basis.hpp"
#include "spline_gauss/knots.hpp"
#include "spline_gauss/rule.hpp"

namespace spline_gauss {

/// 17 significant digits; parses back to the identical double.
std::string format_real(double v);

/// Fixed six decimals. Exact ties round to even.
std::string format_fixed6(double v);

// {"a":..., "b":..., "knots":[...]}. Phantom knots are never written; they
// are recomputed on load.
std::string knots_to_json(const KnotSequence& knots);
KnotSequence knots_from_json(std::string_view text);

/// Reads a knot list given either as the JSON object above, a JSON array, or
/// plain reals separated by whitespace and/or commas. The domain is taken
/// from the first and last entries. Throws Error(ParseError) on malformed
/// input and the usual validation errors otherwise.
KnotSequence read_knots(std::string_view text);

// {"knots":{...}, "coeffs":[...]}
std::string spline_to_json(const SplineFunction& s);
SplineFunction spline_from_json(std::string_view text);

// {"knots":[...], "nodes":[...], "weights":[...]}
std::string rule_to_json(const QuadratureRule& rule);

// Header "i,tau,omega", 1-based rows.
std::string rule_to_csv(const QuadratureRule& rule);

/// Table-style listing of the left half of the rule through the middle node:
/// one "tau omega" row per node, six decimals. With normalize the rule is
/// mapped to [0, 1] first.
std::string rule_to_pretty(const QuadratureRule& rule, bool normalize);

}  // namespace spline_gauss
