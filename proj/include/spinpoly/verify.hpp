#pragma once

// Verification suites over every identity the library implements. Each suite
// runs up to a maximum 2j and reports one check per (identity, spin).

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spinpoly/biorthogonal.hpp"
#include "spinpoly/central_factorials.hpp"
#include "spinpoly/coefficients.hpp"
#include "spinpoly/golden.hpp"
#include "spinpoly/parallel.hpp"
#include "spinpoly/rotation.hpp"
#include "spinpoly/serialize.hpp"
#include "spinpoly/spin_algebra.hpp"
#include "spinpoly/vandermonde.hpp"

namespace spinpoly {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::optional<double> deviation;
  std::optional<double> tolerance;
};

struct VerifyReport {
  std::string suite;
  int max_two_j = 0;
  std::vector<VerifyCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
  }
  std::size_t failed_count() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.passed; }));
  }
  std::optional<double> max_deviation() const {
    std::optional<double> out;
    for (const auto& c : checks)
      if (c.deviation) out = std::max(out.value_or(0.0), *c.deviation);
    return out;
  }
};

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"cfn", "routes", "lemmaB", "lemmaC", "ode", "duals", "biortho", "rotation"};
  return names;
}

namespace detail {

inline VerifyCheck exact_check(std::string name, bool ok) { return {std::move(name), ok, std::nullopt, std::nullopt}; }

inline VerifyCheck numeric_check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation <= tolerance, deviation, tolerance};
}

inline std::string spin_label(int two_j) { return " two_j=" + std::to_string(two_j); }

// Runs per_spin(two_j) for two_j in [first, last] in parallel, concatenating in order.
inline std::vector<VerifyCheck> per_spin_checks(int first, int last, int step,
                                                const std::function<std::vector<VerifyCheck>(int)>& per_spin) {
  std::vector<int> spins;
  for (int t = first; t <= last; t += step) spins.push_back(t);
  auto nested = parallel_map(spins.size(), [&](std::size_t i) { return per_spin(spins[i]); });
  std::vector<VerifyCheck> out;
  for (auto& group : nested)
    for (auto& c : group) out.push_back(std::move(c));
  return out;
}

inline std::vector<VerifyCheck> suite_cfn(int max_two_j) {
  const int max_m = std::max(4, max_two_j + 2);
  const CentralFactorialTable table = cfn_table(max_m);
  bool parity = true, diagonal = true, signs = true, agree = true;
  for (int m = 0; m <= max_m; ++m) {
    for (int n = 0; n <= m; ++n) {
      const BigRational t = table.at(m, n);
      if (t != cfn(m, n)) agree = false;
      if ((m + n) % 2 != 0 && sgn(t) != 0) parity = false;
      if (sgn(t) != 0 && ((m - n) / 2 % 2 == 0 ? sgn(t) < 0 : sgn(t) > 0)) signs = false;
    }
    if (table.at(m, m) != 1) diagonal = false;
  }
  std::vector<VerifyCheck> out{
      exact_check("cfn.parity max_m=" + std::to_string(max_m), parity),
      exact_check("cfn.diagonal max_m=" + std::to_string(max_m), diagonal),
      exact_check("cfn.sign_pattern max_m=" + std::to_string(max_m), signs),
      exact_check("cfn.table_matches_direct max_m=" + std::to_string(max_m), agree),
      exact_check("cfn.recurrence max_m=" + std::to_string(max_m), verify_cfn_recurrence(max_m)),
  };
  bool convolution = true, nonnegative = true;
  const int order = 20;
  const ArcsinSeries first = arcsin_power_series(1, order);
  for (int n = 0; n <= 6; ++n) {
    const ArcsinSeries s = arcsin_power_series(n, order);
    for (const auto& c : s.coeffs)
      if (sgn(c) < 0) nonnegative = false;
    if (n == 0) continue;
    const ArcsinSeries prev = arcsin_power_series(n - 1, order);
    for (int m = 0; m <= order; ++m) {
      BigRational conv = 0;
      for (int a = 0; a <= m; ++a) conv += first[a] * prev[m - a];
      if (conv != s[m]) convolution = false;
    }
  }
  out.push_back(exact_check("arcsin.convolution n<=6 order=20", convolution));
  out.push_back(exact_check("arcsin.nonnegative n<=6 order=20", nonnegative));
  return out;
}

inline std::vector<VerifyCheck> suite_routes(int max_two_j) {
  return per_spin_checks(0, max_two_j, 1, [](int two_j) {
    const HalfInteger spin(two_j);
    bool routes = true, nonneg = true, stable = true;
    double endpoint = 0;
    const double two_pi = 2 * std::numbers::pi;
    for (int k = 0; k <= two_j; ++k) {
      const CoefficientPolynomial a = coefficient(spin, k);
      if (!(coefficient_truncation_route(spin, k) == a)) routes = false;
      for (const auto& [m, c] : a.sine_coeffs) {
        if (sgn(c) < 0) nonneg = false;
        if (a.epsilon == 0 && m % 2 == 0 && k % 2 == 0 && closed_form_sine_coefficient(k, m / 2) != c) stable = false;
      }
      const double at_zero = evaluate_coefficient(a, 0.0);
      const double at_full = evaluate_coefficient(a, two_pi);
      const double expect_zero = k == 0 ? 1.0 : 0.0;
      const double expect_full = k == 0 ? (two_j % 2 == 0 ? 1.0 : -1.0) : 0.0;
      endpoint = std::max({endpoint, std::abs(at_zero - expect_zero), std::abs(at_full - expect_full)});
    }
    const bool top = coefficient(spin, two_j).sine_coeffs == SineSeries{{two_j, BigRational(1)}};
    const std::string label = spin_label(two_j);
    return std::vector<VerifyCheck>{
        exact_check("routes.truncation_equals_cfn" + label, routes),
        exact_check("routes.nonnegative" + label, nonneg),
        exact_check("routes.closed_form_a_kn" + label, stable),
        exact_check("routes.highest_coefficient" + label, top),
        numeric_check("routes.endpoints" + label, endpoint, 1e-12),
    };
  });
}

inline std::vector<VerifyCheck> suite_lemma_b(int max_two_j) {
  return per_spin_checks(0, max_two_j, 1, [](int two_j) {
    const HalfInteger spin(two_j);
    std::vector<VerifyCheck> out{exact_check("lemmaB.exact" + spin_label(two_j), verify_power_reduction_exact(spin))};
    if (two_j <= 10) {
      std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(two_j));
      double worst = 0;
      for (int i = 0; i < 5; ++i) worst = std::max(worst, power_reduction_residual(spin, Axis::random(rng)));
      out.push_back(numeric_check("lemmaB.random_axes" + spin_label(two_j), worst, 1e-9));
    }
    return out;
  });
}

inline std::vector<VerifyCheck> suite_lemma_c(int max_two_j) {
  return per_spin_checks(2, max_two_j, 2, [](int two_j) {
    const HalfInteger spin(two_j);
    const VandermondeData data = build_vandermonde(spin);
    const int j = two_j / 2;
    bool lemma = true, piecewise = true;
    for (int l = 1; l <= j; ++l)
      for (int n = l; n <= j; ++n)
        if (cfn_from_vandermonde(data, n, l) != cfn(2 * n, 2 * l)) lemma = false;
    for (int n = 1; n <= j; ++n)
      for (int m = 1; m <= 2 * j + 1; ++m)
        if (shifted_square_product(j, m, n) != shifted_square_product_piecewise(j, m, n)) piecewise = false;
    return std::vector<VerifyCheck>{exact_check("lemmaC.cfn_from_vandermonde" + spin_label(two_j), lemma),
                                    exact_check("lemmaC.piecewise_product" + spin_label(two_j), piecewise)};
  });
}

inline std::vector<VerifyCheck> suite_ode(int max_two_j) {
  return per_spin_checks(2, max_two_j, 2, [](int two_j) {
    bool ok = true;
    for (int k = 1; k <= two_j / 2; ++k) ok = ok && verify_second_order_ode(HalfInteger(two_j), k);
    return std::vector<VerifyCheck>{exact_check("ode.second_order" + spin_label(two_j), ok)};
  });
}

inline std::vector<VerifyCheck> suite_duals(int max_two_j) {
  return per_spin_checks(0, max_two_j, 1, [](int two_j) {
    const VandermondeData data = build_vandermonde(HalfInteger(two_j));
    const std::string label = spin_label(two_j);
    std::vector<VerifyCheck> out{
        exact_check("duals.inverse_exact" + label, (data.vandermonde.raw() * data.inverse.raw()).is_identity()),
        exact_check("duals.row_sums" + label, verify_inverse_row_sums(data)),
        exact_check("duals.row_symmetry" + label, verify_inverse_row_symmetry(data)),
        exact_check("duals.trace_orthonormal" + label, verify_dual_orthonormality(data)),
        exact_check("duals.metric_orthonormal" + label, verify_metric_orthonormality(data)),
        exact_check("duals.trace_forms" + label, verify_trace_identities(data)),
        exact_check("duals.projectors" + label, verify_projector_identities(data)),
    };
    for (const auto& ex : golden::examples())
      if (ex.two_j == two_j) out.push_back(exact_check("duals.reference_example" + label, golden::matches_example(data, ex)));
    return out;
  });
}

inline std::vector<VerifyCheck> suite_biortho(int max_two_j) {
  return per_spin_checks(0, max_two_j, 1, [](int two_j) {
    const HalfInteger spin(two_j);
    const std::string label = spin_label(two_j);
    bool generating = true;
    for (int n = first_index(spin); n <= last_index(spin); ++n)
      if (!(dual_function(spin, n) == dual_function_from_generating(spin, n))) generating = false;

    const VandermondeData data = build_vandermonde(spin);
    bool projection = true;
    for (int k = two_j % 2; k <= two_j; k += 2) {
      const CoefficientPolynomial a = coefficient(spin, k);
      for (int n = first_index(spin); n <= last_index(spin); ++n) {
        const int power = basis_function(spin, n).power;
        if (extract_coefficient_projection(data, k, n) != a.coefficient_at(power)) projection = false;
        if (spin.is_integer()) {
          const BigRational expected = 2 * n >= k ? closed_form_sine_coefficient(k, n) : BigRational(0);
          if (extract_coefficient_fourier(data, k, n) != expected) projection = false;
        }
      }
    }
    std::vector<VerifyCheck> out{
        exact_check("biortho.orthonormal" + label, verify_biorthonormality(spin)),
        exact_check("biortho.generating_functions" + label, generating),
        exact_check("biortho.coefficient_projection" + label, projection),
    };
    if (two_j <= 10) {
      double worst = 0;
      const int lo = first_index(spin), hi = last_index(spin);
      for (int a = lo; a <= hi; ++a) {
        const DualFunction g = dual_function(spin, a);
        for (int b = lo; b <= hi; ++b) {
          const int power = basis_function(spin, b).power;
          worst = std::max(worst, std::abs(quadrature_pairing(g, power) - pairing(g, power).get_d()));
        }
      }
      out.push_back(numeric_check("biortho.quadrature" + label, worst, 1e-8));
    }
    return out;
  });
}

inline std::vector<VerifyCheck> suite_rotation(int max_two_j) {
  return per_spin_checks(0, max_two_j, 1, [](int two_j) {
    const HalfInteger spin(two_j);
    const std::string label = spin_label(two_j);
    const double pi = std::numbers::pi;
    std::mt19937_64 rng(77 + static_cast<std::uint64_t>(two_j));
    std::uniform_real_distribution<double> angle(-4 * pi, 4 * pi);
    double oracle = 0, unitary = 0;
    for (int i = 0; i < 25; ++i) {
      const Axis axis = Axis::random(rng);
      const double theta = angle(rng);
      const ComplexMatrix poly = rotation_polynomial(spin, axis, theta).matrix;
      oracle = std::max(oracle, max_abs_difference(poly, rotation_reference(spin, axis, theta).matrix));
      unitary = std::max(unitary, unitarity_defect(poly));
    }
    const Axis axis = Axis::random(rng);
    const Eigen::Index dim = spin.dimension();
    const ComplexMatrix identity = ComplexMatrix::Identity(dim, dim);
    const double full_turn_sign = two_j % 2 == 0 ? 1.0 : -1.0;
    const double periodic = std::max(max_abs_difference(rotation_polynomial(spin, axis, 4 * pi).matrix, identity),
                                     max_abs_difference(rotation_polynomial(spin, axis, 2 * pi).matrix, full_turn_sign * identity));
    std::vector<VerifyCheck> out{
        numeric_check("rotation.oracle" + label, oracle, 1e-9 * (two_j + 1)),
        numeric_check("rotation.unitary" + label, unitary, 1e-9),
        numeric_check("rotation.periodicity" + label, periodic, 1e-9),
    };
    if (two_j <= 8) {
      const double t1 = angle(rng), t2 = angle(rng);
      const ComplexMatrix product = rotation_polynomial(spin, axis, t1).matrix * rotation_polynomial(spin, axis, t2).matrix;
      out.push_back(numeric_check("rotation.group_law" + label,
                                  max_abs_difference(product, rotation_polynomial(spin, axis, t1 + t2).matrix), 1e-9));
    }
    return out;
  });
}

}  // namespace detail

/// Runs one named suite ("all" runs every suite in order). Throws InputError on an unknown name.
inline VerifyReport run_verify(const std::string& suite, int max_two_j) {
  if (max_two_j < 0) throw InputError("max two_j must be non-negative");
  VerifyReport report{suite, max_two_j, {}};
  auto append = [&](std::vector<VerifyCheck> checks) {
    for (auto& c : checks) report.checks.push_back(std::move(c));
  };
  const bool all = suite == "all";
  bool known = all;
  auto wants = [&](const char* name) {
    const bool hit = all || suite == name;
    known = known || hit;
    return hit;
  };
  if (wants("cfn")) append(detail::suite_cfn(max_two_j));
  if (wants("routes")) append(detail::suite_routes(max_two_j));
  if (wants("lemmaB")) append(detail::suite_lemma_b(max_two_j));
  if (wants("lemmaC")) append(detail::suite_lemma_c(max_two_j));
  if (wants("ode")) append(detail::suite_ode(max_two_j));
  if (wants("duals")) append(detail::suite_duals(max_two_j));
  if (wants("biortho")) append(detail::suite_biortho(max_two_j));
  if (wants("rotation")) append(detail::suite_rotation(max_two_j));
  if (!known) throw InputError("unknown verification suite: " + suite);
  return report;
}

inline Json verify_report_to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (c.deviation) entry["deviation"] = *c.deviation;
    if (c.tolerance) entry["tolerance"] = *c.tolerance;
    checks.push_back(std::move(entry));
  }
  Json out{{"suite", report.suite},
           {"max_two_j", report.max_two_j},
           {"status", report.passed() ? "pass" : "fail"},
           {"checks_total", report.checks.size()},
           {"checks_failed", report.failed_count()}};
  const auto worst = report.max_deviation();
  out["max_deviation"] = worst ? Json(*worst) : Json(nullptr);
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace spinpoly
