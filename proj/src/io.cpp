#include "spline_gauss/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <json.hpp>

#include "spline_gauss/error.hpp"

namespace spline_gauss {

namespace {

using nlohmann::json;

std::string real_array(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_real(values[i]);
  }
  out += ']';
  return out;
}

std::vector<double> reals_from(const json& j, const char* what) {
  if (!j.is_array()) {
    throw Error(ErrorKind::ParseError, std::string(what) + " must be an array");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw Error(ErrorKind::ParseError,
                  std::string(what) + " must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

KnotSequence knots_from(const json& j) {
  if (!j.is_object() || !j.contains("knots")) {
    throw Error(ErrorKind::ParseError, "expected an object with \"knots\"");
  }
  std::vector<double> knots = reals_from(j.at("knots"), "knots");
  if (knots.empty()) throw Error(ErrorKind::ParseError, "empty knot list");
  const auto end = [&](const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) {
      throw Error(ErrorKind::ParseError, std::string(key) + " must be a number");
    }
    return j.at(key).get<double>();
  };
  const double a = end("a", knots.front());
  const double b = end("b", knots.back());
  return validate_knots(std::move(knots), a, b);
}

std::vector<double> split_reals(std::string_view text) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    const std::string_view token = text.substr(i, j - i);
    double v = 0.0;
    const char* first = token.data();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::ParseError,
                  "not a real number: '" + std::string(token) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_fixed6(double v) {
  // glibc converts the exact binary value and breaks exact ties to even in
  // the default rounding mode.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string knots_to_json(const KnotSequence& knots) {
  const std::vector<double> xs(knots.knots().begin(), knots.knots().end());
  return "{\"a\":" + format_real(knots.a()) + ",\"b\":" +
         format_real(knots.b()) + ",\"knots\":" + real_array(xs) + "}";
}

KnotSequence knots_from_json(std::string_view text) {
  return knots_from(parse_json(text));
}

KnotSequence read_knots(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "no knots given");
  }
  std::vector<double> knots;
  if (text[start] == '{') return knots_from_json(text);
  if (text[start] == '[') {
    knots = reals_from(parse_json(text), "knots");
  } else {
    knots = split_reals(text);
  }
  if (knots.empty()) throw Error(ErrorKind::ParseError, "no knots given");
  const double a = knots.front();
  const double b = knots.back();
  return validate_knots(std::move(knots), a, b);
}

std::string spline_to_json(const SplineFunction& s) {
  return "{\"knots\":" + knots_to_json(s.knots()) +
         ",\"coeffs\":" + real_array(s.coeffs()) + "}";
}

SplineFunction spline_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("knots") || !j.contains("coeffs")) {
    throw Error(ErrorKind::ParseError,
                "expected an object with \"knots\" and \"coeffs\"");
  }
  return SplineFunction(knots_from(j.at("knots")),
                        reals_from(j.at("coeffs"), "coeffs"));
}

std::string rule_to_json(const QuadratureRule& rule) {
  const std::vector<double> xs(rule.knots.knots().begin(),
                               rule.knots.knots().end());
  return "{\"knots\":" + real_array(xs) + ",\"nodes\":" +
         real_array(rule.nodes) + ",\"weights\":" + real_array(rule.weights) +
         "}";
}

std::string rule_to_csv(const QuadratureRule& rule) {
  std::string out = "i,tau,omega\n";
  for (std::size_t i = 0; i < rule.size(); ++i) {
    out += std::to_string(i + 1) + ',' + format_real(rule.nodes[i]) + ',' +
           format_real(rule.weights[i]) + '\n';
  }
  return out;
}

std::string rule_to_pretty(const QuadratureRule& rule, bool normalize) {
  const double a = rule.knots.a();
  const double len = rule.knots.length();
  const std::size_t rows = rule.size() / 2 + rule.size() % 2;
  std::string out = "tau omega\n";
  for (std::size_t i = 0; i < rows; ++i) {
    const double tau = normalize ? (rule.nodes[i] - a) / len : rule.nodes[i];
    const double w = normalize ? rule.weights[i] / len : rule.weights[i];
    out += format_fixed6(tau) + ' ' + format_fixed6(w) + '\n';
  }
  return out;
}

}  // namespace spline_gauss
