#pragma once

// Angle-dependent coefficients A_k^[j](theta) of the spin matrix polynomial
//
//   exp(i theta n.J) = sum_{k=0}^{2j} A_k(theta) (2i n.J)^k / k!
//
// Every A_k is stored as cos(theta/2)^eps * sum_m c_m sin^m(theta/2) with
// exact non-negative c_m.

#include <cmath>
#include <map>
#include <vector>

#include "spinpoly/central_factorials.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/half_integer.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly {

/// Exact polynomial in s = sin(theta/2), keyed by exponent. Zero terms are never stored.
using SineSeries = std::map<int, BigRational>;

namespace detail {

inline void add_term(SineSeries& series, int power, const BigRational& value) {
  if (sgn(value) == 0) return;
  auto [it, inserted] = series.try_emplace(power, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) series.erase(it);
  }
}

inline void check_index(HalfInteger spin, int k) {
  if (k < 0 || k > spin.two_j()) throw DomainError("coefficient index k must satisfy 0 <= k <= 2j");
}

}  // namespace detail

struct CoefficientPolynomial {
  HalfInteger spin;
  int k = 0;
  int epsilon = 0;
  SineSeries sine_coeffs;

  BigRational coefficient_at(int power) const {
    auto it = sine_coeffs.find(power);
    return it == sine_coeffs.end() ? BigRational(0) : it->second;
  }

  friend bool operator==(const CoefficientPolynomial&, const CoefficientPolynomial&) = default;
};

/// 0 when 2j-k is even, 1 when odd.
inline int epsilon(HalfInteger spin, int k) {
  detail::check_index(spin, k);
  return (spin.two_j() - k) % 2;
}

/// A_k = k!/2^k sum_{m=k}^{2j} 2^m/m! |t(m,k)| s^m, valid for even 2j-k.
inline CoefficientPolynomial coefficient_cfn_route(HalfInteger spin, int k) {
  if (epsilon(spin, k) != 0) throw ParityError("central factorial route needs even 2j-k");
  CoefficientPolynomial poly{spin, k, 0, {}};
  const BigRational prefactor = BigRational(factorial(static_cast<unsigned long>(k))) * pow2(-k);
  for (int m = k; m <= spin.two_j(); m += 2) {
    BigRational c = prefactor * pow2(m) * cfn_abs(m, k);
    c /= BigRational(factorial(static_cast<unsigned long>(m)));
    detail::add_term(poly.sine_coeffs, m, c);
  }
  return poly;
}

/// A_{k-1} = (2/k) dA_k/dtheta applied to an even-case series, using
/// d/dtheta s^m = (m/2) s^{m-1} cos(theta/2).
inline CoefficientPolynomial differentiate_coefficient(const CoefficientPolynomial& poly) {
  if (poly.epsilon != 0) throw UnsupportedError("derivative relation applies to even 2j-k coefficients only");
  if (poly.k == 0) throw DomainError("no coefficient below k = 0");
  CoefficientPolynomial out{poly.spin, poly.k - 1, 1, {}};
  for (const auto& [m, c] : poly.sine_coeffs) {
    if (m == 0) continue;
    detail::add_term(out.sine_coeffs, m - 1, c * ratio(m, poly.k));
  }
  return out;
}

inline CoefficientPolynomial coefficient(HalfInteger spin, int k) {
  if (epsilon(spin, k) == 0) return coefficient_cfn_route(spin, k);
  return differentiate_coefficient(coefficient_cfn_route(spin, k + 1));
}

/// All A_0 ... A_2j for one spin.
inline std::vector<CoefficientPolynomial> all_coefficients(HalfInteger spin) {
  std::vector<CoefficientPolynomial> out;
  out.reserve(static_cast<std::size_t>(spin.dimension()));
  for (int k = 0; k <= spin.two_j(); ++k) out.push_back(coefficient(spin, k));
  return out;
}

/// Builds A_k from the truncated series
///   sin^k cos^eps Trunc_{floor(j-k/2)}[ (1-x)^{-eps/2} (arcsin(sqrt x)/sqrt x)^k ],  x = sin^2(theta/2).
inline CoefficientPolynomial coefficient_truncation_route(HalfInteger spin, int k) {
  const int eps = epsilon(spin, k);
  const int order = (spin.two_j() - k) / 2;  // floor(j - k/2)

  // x-series of (arcsin sqrt x / sqrt x)^k: coefficient of x^p is that of z^{k+2p} in (arcsin z)^k.
  const ArcsinSeries arcsin = arcsin_power_series(k, k + 2 * order);
  std::vector<BigRational> arcsin_x(static_cast<std::size_t>(order) + 1);
  for (int p = 0; p <= order; ++p) arcsin_x[static_cast<std::size_t>(p)] = arcsin[k + 2 * p];

  // x-series of (1-x)^{-eps/2}: binom(2p,p)/4^p for eps = 1, the constant 1 otherwise.
  std::vector<BigRational> prefactor(static_cast<std::size_t>(order) + 1);
  for (int p = 0; p <= order; ++p) {
    if (eps == 0) {
      prefactor[static_cast<std::size_t>(p)] = p == 0 ? 1 : 0;
    } else {
      prefactor[static_cast<std::size_t>(p)] = BigRational(binomial(2 * p, p)) * pow2(-2 * p);
    }
  }

  CoefficientPolynomial poly{spin, k, eps, {}};
  for (int p = 0; p <= order; ++p) {
    BigRational c = 0;
    for (int q = 0; q <= p; ++q) {
      c += prefactor[static_cast<std::size_t>(q)] * arcsin_x[static_cast<std::size_t>(p - q)];
    }
    detail::add_term(poly.sine_coeffs, k + 2 * p, c);
  }
  return poly;
}

/// a_{k,n} = 2^{2n-k} k!/(2n)! |t(2n,k)|, the coefficient of sin^{2n}(theta/2)
/// in A_k for even k; independent of j apart from the range of n.
inline BigRational closed_form_sine_coefficient(int k, int n) {
  if (k < 0 || n < 0) throw DomainError("indices must be non-negative");
  if (2 * n < k) return 0;
  BigRational c = pow2(2 * n - k) * BigRational(factorial(static_cast<unsigned long>(k))) * cfn_abs(2 * n, k);
  c /= BigRational(factorial(static_cast<unsigned long>(2 * n)));
  return c;
}

/// Double-precision view of a coefficient. All terms are non-negative so
/// the sum carries no cancellation.
class CoefficientEvaluator {
 public:
  explicit CoefficientEvaluator(const CoefficientPolynomial& poly) : epsilon_(poly.epsilon) {
    const int top = poly.sine_coeffs.empty() ? 0 : poly.sine_coeffs.rbegin()->first;
    dense_.assign(static_cast<std::size_t>(top) + 1, 0.0);
    for (const auto& [m, c] : poly.sine_coeffs) dense_[static_cast<std::size_t>(m)] = c.get_d();
  }

  double operator()(double theta) const {
    const double s = std::sin(theta / 2);
    double acc = 0;
    for (auto it = dense_.rbegin(); it != dense_.rend(); ++it) acc = acc * s + *it;
    return epsilon_ ? acc * std::cos(theta / 2) : acc;
  }

 private:
  int epsilon_;
  std::vector<double> dense_;
};

inline double evaluate_coefficient(const CoefficientPolynomial& poly, double theta) {
  return CoefficientEvaluator(poly)(theta);
}

/// Second theta-derivative of an even-case series in s:
///   d^2/dtheta^2 s^m = m(m-1)/4 s^{m-2} - m^2/4 s^m.
inline SineSeries second_derivative(const SineSeries& series) {
  SineSeries out;
  for (const auto& [m, c] : series) {
    if (m >= 2) detail::add_term(out, m - 2, c * ratio(m * (m - 1), 4));
    detail::add_term(out, m, -c * ratio(m * m, 4));
  }
  return out;
}

/// Exact check of
///   A_{2k-2} = 4/(2k(2k-1)) A_{2k}'' + (-4)^{j-k+1} t(2+2j, 2k) (2k-2)!/(2j)! A_{2j}
/// for integer j and 1 <= k <= j, using the signed t(2+2j, 2k).
inline bool verify_second_order_ode(HalfInteger spin, int k) {
  if (!spin.is_integer()) throw DomainError("second-order equation is stated for integer j");
  const int j = spin.two_j() / 2;
  if (k < 1 || k > j) throw DomainError("second-order equation needs 1 <= k <= j");

  const SineSeries target = coefficient(spin, 2 * k - 2).sine_coeffs;
  const SineSeries curvature = second_derivative(coefficient(spin, 2 * k).sine_coeffs);
  const SineSeries top = coefficient(spin, 2 * j).sine_coeffs;

  const BigRational curvature_scale = ratio(4, 2 * k * (2 * k - 1));
  BigRational top_scale = BigRational(pow_int(-4, static_cast<unsigned long>(j - k + 1))) * cfn(2 + 2 * j, 2 * k);
  top_scale *= BigRational(factorial(static_cast<unsigned long>(2 * k - 2)));
  top_scale /= BigRational(factorial(static_cast<unsigned long>(2 * j)));

  SineSeries rhs;
  for (const auto& [m, c] : curvature) detail::add_term(rhs, m, curvature_scale * c);
  for (const auto& [m, c] : top) detail::add_term(rhs, m, top_scale * c);
  return rhs == target;
}

}  // namespace spinpoly
