// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "spinpoly/spinpoly.hpp"

using namespace spinpoly;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome rotation_identity() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-4 * kPi, 4 * kPi);
  double worst_ratio = 0;
  for (int two_j = 1; two_j <= 12; ++two_j) {
    for (int i = 0; i < 25; ++i) {
      const Axis axis = Axis::random(rng);
      const double dev = compare_rotation(HalfInteger(two_j), axis, angle(rng));
      worst_ratio = std::max(worst_ratio, dev / (1e-9 * (two_j + 1)));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst_ratio <= 1.0 && secs < 10.0,
          "max dev/(1e-9(2j+1)) = " + sci(worst_ratio) + ", " + sci(secs) + " s (limit 10 s)"};
}

Outcome route_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  int compared = 0;
  for (int two_j = 0; two_j <= 16; ++two_j)
    for (int k = 0; k <= two_j; ++k, ++compared)
      ok = ok && coefficient_truncation_route(HalfInteger(two_j), k) == coefficient(HalfInteger(two_j), k);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {ok && secs < 5.0, std::to_string(compared) + " coefficients, " + sci(secs) + " s (limit 5 s)"};
}

Outcome power_reduction() {
  bool exact = true;
  for (int two_j = 0; two_j <= 24; ++two_j) exact = exact && verify_power_reduction_exact(HalfInteger(two_j));
  std::mt19937_64 rng(3);
  double worst = 0;
  for (int two_j = 0; two_j <= 10; ++two_j)
    for (int i = 0; i < 5; ++i) worst = std::max(worst, power_reduction_residual(HalfInteger(two_j), Axis::random(rng)));
  return {exact && worst <= 1e-9, std::string("exact two_j<=24 ") + (exact ? "ok" : "FAILED") + ", float residual " + sci(worst) + " (tol 1e-9)"};
}

Outcome golden_matrices() {
  bool ok = golden::examples().size() == 4;
  for (const auto& ex : golden::examples()) ok = ok && golden::matches_example(build_vandermonde(HalfInteger(ex.two_j)), ex);
  const golden::ScaledMatrix g1{64, {{5, -2, -3}, {-2, 68, -2}, {-3, -2, 5}}};
  const golden::ScaledDiagonal t4{384, {1, -4, 6, -4, 1}};
  ok = ok && metric(HalfInteger(2)).raw() == g1.to_rational();
  ok = ok && dual_matrices(HalfInteger(4))[4] == t4.to_rational();
  return {ok, "V^-1, T_n, G for two_j in {1,2,3,4}"};
}

Outcome vandermonde_lemma() {
  bool ok = true;
  int cases = 0;
  for (int two_j = 2; two_j <= 16; two_j += 2) {
    const auto data = build_vandermonde(HalfInteger(two_j));
    for (int l = 1; l <= two_j / 2; ++l)
      for (int n = l; n <= two_j / 2; ++n, ++cases) ok = ok && cfn_from_vandermonde(data, n, l) == cfn(2 * n, 2 * l);
  }
  return {ok, std::to_string(cases) + " (two_j, n, l) cases"};
}

Outcome projector_identities() {
  bool ok = true;
  for (int two_j = 0; two_j <= 16; ++two_j) {
    const auto data = build_vandermonde(HalfInteger(two_j));
    ok = ok && verify_projector_identities(data) && verify_trace_identities(data);
  }
  return {ok, "B = V P V^T, P = V^-1 B V^-T, both trace forms, two_j<=16"};
}

Outcome biorthonormality() {
  bool exact = true;
  for (int two_j = 0; two_j <= 20; ++two_j) exact = exact && verify_biorthonormality(HalfInteger(two_j));
  double worst = 0;
  for (int two_j = 0; two_j <= 10; ++two_j) {
    const HalfInteger spin(two_j);
    for (int a = first_index(spin); a <= last_index(spin); ++a) {
      const auto g = dual_function(spin, a);
      for (int b = first_index(spin); b <= last_index(spin); ++b) {
        const int power = basis_function(spin, b).power;
        worst = std::max(worst, std::abs(quadrature_pairing(g, power) - pairing(g, power).get_d()));
      }
    }
  }
  return {exact && worst <= 1e-8, std::string("exact two_j<=20 ") + (exact ? "ok" : "FAILED") + ", quadrature " + sci(worst) + " (tol 1e-8)"};
}

Outcome second_order_ode() {
  bool ok = true;
  for (int two_j = 2; two_j <= 12; two_j += 2)
    for (int k = 1; k <= two_j / 2; ++k) ok = ok && verify_second_order_ode(HalfInteger(two_j), k);
  return {ok, "even two_j<=12, 1<=k<=j"};
}

Outcome generating_rows() {
  bool ok = true;
  const auto& rows = golden::generating_rows();
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto series = dual_truncation_series(static_cast<int>(n), 7);
    for (std::size_t m = 0; m < 8; ++m) ok = ok && series[m] == rows[n][m];
  }
  ok = ok && dual_truncation_series(2, 7) == std::vector<BigRational>{1, 6, 20, 50, 105, 196, 336, 540};
  return {ok, "n=0..6 through x^7"};
}

Outcome periodicity() {
  double worst_coeff = 0;
  bool exact_sign = true;
  for (int two_j = 0; two_j <= 24; ++two_j) {
    const HalfInteger spin(two_j);
    const auto a0 = coefficient(spin, 0);
    if (a0.epsilon == 1) {
      // cos(pi) times the constant term at s = 0
      exact_sign = exact_sign && a0.coefficient_at(0) == 1 && two_j % 2 == 1;
    } else {
      exact_sign = exact_sign && a0.sine_coeffs == SineSeries{{0, BigRational(1)}} && two_j % 2 == 0;
    }
    worst_coeff = std::max(worst_coeff, std::abs(evaluate_coefficient(a0, 2 * kPi) - (two_j % 2 ? -1.0 : 1.0)));
    for (int k = 1; k <= two_j; ++k) worst_coeff = std::max(worst_coeff, std::abs(evaluate_coefficient(coefficient(spin, k), 2 * kPi)));
  }
  std::mt19937_64 rng(10);
  double worst_turn = 0;
  for (int two_j = 0; two_j <= 12; ++two_j) {
    const Eigen::Index dim = two_j + 1;
    const ComplexMatrix u = rotation_polynomial(HalfInteger(two_j), Axis::random(rng), 4 * kPi).matrix;
    worst_turn = std::max(worst_turn, max_abs_difference(u, ComplexMatrix::Identity(dim, dim)));
  }
  return {exact_sign && worst_coeff <= 1e-12 && worst_turn <= 1e-9,
          "A_k(2pi) dev " + sci(worst_coeff) + " (tol 1e-12), R(4pi)-I " + sci(worst_turn) + " (tol 1e-9)"};
}

Outcome plot_reproduction() {
  std::ostringstream out, err;
  int code = cli::run_cli({"plotdata", "--two-j", "138", "--k", "0"}, out, err);
  bool constant = code == 0;
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    constant = constant && std::stod(line.substr(line.find(',') + 1)) == 1.0;
  }
  constant = constant && rows == 1024;

  std::ostringstream half, err2;
  code = cli::run_cli({"plotdata", "--two-j", "137", "--k", "0", "--theta-min", "0", "--theta-max", format_double(4 * kPi), "--samples", "9"}, half, err2);
  std::vector<double> values;
  std::istringstream hin(half.str());
  std::getline(hin, line);
  while (std::getline(hin, line)) values.push_back(std::stod(line.substr(line.find(',') + 1)));
  const bool ok_half = code == 0 && values.size() == 9;
  const double quarter = ok_half ? std::abs(values[1] - 1.0) : 1.0;  // theta = pi/2
  const double full = ok_half ? std::abs(values[4] + 1.0) : 1.0;  // theta = 2 pi
  return {constant && quarter <= 1e-12 && full <= 1e-12,
          std::string("two_j=138 A_0 ") + (constant ? "== 1" : "NOT constant") + "; two_j=137 |A_0(pi/2)-1| " + sci(quarter) +
              ", |A_0(2pi)+1| " + sci(full) + " (tol 1e-12)"};
}

Outcome benchmark() {
  const Json report = cli::run_bench({2, 8, 24, 60}, 3);
  bool ok = report["results"].size() == 4;
  double worst_ratio = 0;
  for (const auto& entry : report["results"]) {
    const double tol = 1e-8 * (entry["two_j"].get<int>() + 1);
    for (const auto& m : entry["methods"]) worst_ratio = std::max(worst_ratio, m["max_deviation"].get<double>() / tol);
  }
  ok = ok && worst_ratio <= 1.0;
  return {ok, "two_j in {2,8,24,60}, max dev/(1e-8(2j+1)) = " + sci(worst_ratio)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"rotation polynomial vs eigendecomposition", rotation_identity},
      {"coefficient routes agree exactly", route_equivalence},
      {"power reduction identity", power_reduction},
      {"reference Vandermonde inverses, duals, metrics", golden_matrices},
      {"central factorials from the Vandermonde inverse", vandermonde_lemma},
      {"projector and trace identities", projector_identities},
      {"biorthonormality and quadrature", biorthonormality},
      {"second-order equation", second_order_ode},
      {"generating-function rows", generating_rows},
      {"periodicity endpoints", periodicity},
      {"plot data for two_j 138 and 137", plot_reproduction},
      {"benchmark deviations", benchmark},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << "  [" << o.detail << "]\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
