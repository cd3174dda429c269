#pragma once

// JSON encodings. Rationals are {"num": "<decimal>", "den": "<decimal>"} in
// lowest terms with den > 0. Floats are written with 17 significant digits.

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "spinpoly/coefficients.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/rational.hpp"
#include "spinpoly/vandermonde.hpp"

namespace spinpoly {

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const BigRational& q) {
  return Json{{"num", numerator_string(q)}, {"den", denominator_string(q)}};
}

inline BigRational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string()) {
    throw InputError("rational must be an object with string fields num and den");
  }
  BigInteger num, den;
  if (num.set_str(j["num"].get<std::string>(), 10) != 0 || den.set_str(j["den"].get<std::string>(), 10) != 0) {
    throw InputError("rational fields must be decimal integers");
  }
  if (den <= 0) throw InputError("rational denominator must be positive");
  BigInteger g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) throw InputError("rational must be in lowest terms");
  return BigRational(num, den);
}

inline Json coefficient_to_json(const CoefficientPolynomial& poly) {
  Json terms = Json::array();
  for (const auto& [power, c] : poly.sine_coeffs) {
    terms.push_back(Json{{"power", power}, {"num", numerator_string(c)}, {"den", denominator_string(c)}});
  }
  return Json{{"two_j", poly.spin.two_j()}, {"k", poly.k}, {"epsilon", poly.epsilon}, {"terms", terms}};
}

inline CoefficientPolynomial coefficient_from_json(const Json& j) {
  try {
    CoefficientPolynomial poly{HalfInteger(j.at("two_j").get<int>()), j.at("k").get<int>(), j.at("epsilon").get<int>(), {}};
    if (poly.k < 0 || poly.k > poly.spin.two_j()) throw InputError("k out of range");
    if (poly.epsilon != epsilon(poly.spin, poly.k)) throw InputError("epsilon inconsistent with two_j and k");
    for (const auto& term : j.at("terms")) {
      const int power = term.at("power").get<int>();
      const BigRational c = rational_from_json(Json{{"num", term.at("num")}, {"den", term.at("den")}});
      if (sgn(c) == 0) continue;
      if (!poly.sine_coeffs.emplace(power, c).second) throw InputError("duplicate power in terms");
    }
    return poly;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed coefficient JSON: ") + e.what());
  }
}

inline Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json vandermonde_to_json(const VandermondeData& data) {
  Json duals = Json::array();
  for (const auto& d : data.duals) {
    Json diag = Json::array();
    for (const auto& q : d) diag.push_back(rational_to_json(q));
    duals.push_back(std::move(diag));
  }
  return Json{{"two_j", data.spin.two_j()},
              {"V", matrix_to_json(data.vandermonde.raw())},
              {"V_inv", matrix_to_json(data.inverse.raw())},
              {"T", duals},
              {"G", matrix_to_json(data.metric.raw())}};
}

/// %.17g; non-finite values have no JSON spelling and become null.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void write_json(const Json& j, std::ostream& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out << (std::isfinite(v) ? format_double(v) : "null");
      break;
    }
    case Json::value_t::array: {
      if (j.empty()) { out << "[]"; break; }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out << pad;
        write_json(j[i], out, indent, depth + 1);
        out << (i + 1 < j.size() ? ",\n" : "\n");
      }
      out << close_pad << ']';
      break;
    }
    case Json::value_t::object: {
      if (j.empty()) { out << "{}"; break; }
      out << "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out << pad << Json(it.key()).dump() << ": ";
        write_json(it.value(), out, indent, depth + 1);
        out << (i + 1 < j.size() ? ",\n" : "\n");
      }
      out << close_pad << '}';
      break;
    }
    default:
      out << j.dump();
  }
}

}  // namespace detail

inline void write_json(const Json& j, std::ostream& out) {
  detail::write_json(j, out, 2, 0);
  out << '\n';
}

}  // namespace spinpoly
