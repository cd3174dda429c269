#pragma once

// Finite biorthogonal systems: powers of sin(theta/2) paired with cosine
// combinations, normalized so that (1/2pi) int_{-pi}^{pi} g_m f_n = delta_{m,n}.
//
//   integer j:       f_n = sin^{2n}(theta/2),    n = 0..j
//   semi-integer j:  f_n = sin^{2n-1}(theta/2),  n = 1..j+1/2
//
// Duals for n > 0 are (-4)^n [sin(theta/2)] sum_{k=n}^{cap} (k/n) binom(k+n-1, 2n-1) cos(k theta),
// with cap = j (integer) or j+1/2 (semi-integer), and g_0 = 1 + 2 sum_{k=1}^{j} cos(k theta).

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "spinpoly/errors.hpp"
#include "spinpoly/half_integer.hpp"
#include "spinpoly/rational.hpp"
#include "spinpoly/vandermonde.hpp"

namespace spinpoly {

struct BasisFunction {
  HalfInteger spin;
  int n = 0;
  int power = 0;  // exponent of sin(theta/2)
};

struct DualFunction {
  HalfInteger spin;
  int n = 0;
  std::map<int, BigRational> cos_coeffs;  // harmonic -> full coefficient, including (-4)^n
  bool half_sine_factor = false;          // extra sin(theta/2) factor (odd-power system)

  friend bool operator==(const DualFunction&, const DualFunction&) = default;
};

/// Largest harmonic in the duals of this spin's native system: j or j+1/2.
inline int harmonic_cap(HalfInteger spin) { return (spin.two_j() + 1) / 2; }

/// Index range of the native system: [0, j] or [1, j+1/2].
inline int first_index(HalfInteger spin) { return spin.is_integer() ? 0 : 1; }
inline int last_index(HalfInteger spin) { return harmonic_cap(spin); }

inline BasisFunction basis_function(HalfInteger spin, int n) {
  if (n < first_index(spin) || n > last_index(spin)) throw DomainError("basis index outside the system");
  return {spin, n, spin.is_integer() ? 2 * n : 2 * n - 1};
}

/// Bracket coefficient (k/n) binom(k+n-1, 2n-1) of harmonic k in dual n; n = 0 gives 1, 2, 2, ...
inline BigRational dual_bracket_coefficient(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 2;
  return ratio(k, n) * BigRational(binomial(k + n - 1, 2 * n - 1));
}

/// A dual with harmonics n..cap; used for both the native and the interlaced systems.
inline DualFunction system_dual(HalfInteger spin, int n, int cap, bool half_sine) {
  DualFunction g{spin, n, {}, half_sine};
  const BigRational scale = BigRational(pow_int(-4, static_cast<unsigned long>(n)));
  for (int k = n; k <= cap; ++k) g.cos_coeffs.emplace(k, scale * dual_bracket_coefficient(n, k));
  return g;
}

inline DualFunction dual_function(HalfInteger spin, int n) {
  if (n < first_index(spin) || n > last_index(spin)) throw DomainError("dual index outside the system");
  return system_dual(spin, n, harmonic_cap(spin), !spin.is_integer());
}

/// Taylor coefficients of (1+x)/(1-x)^{2n+1} through x^order.
inline std::vector<BigRational> dual_truncation_series(int n, int order) {
  if (n < 0 || order < 0) throw DomainError("indices must be non-negative");
  // (1-x)^{-(2n+1)} = sum_m binom(m+2n, 2n) x^m, then multiply by (1+x).
  std::vector<BigRational> inverse_power(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) inverse_power[static_cast<std::size_t>(m)] = BigRational(binomial(m + 2 * n, 2 * n));
  std::vector<BigRational> out(inverse_power);
  for (int m = 1; m <= order; ++m) out[static_cast<std::size_t>(m)] += inverse_power[static_cast<std::size_t>(m - 1)];
  return out;
}

/// Re Trunc_cap[(-4w)^n (1+w)/(1-w)^{1+2n}] at w = e^{i theta}, as a dual function.
inline DualFunction dual_function_from_generating(HalfInteger spin, int n) {
  if (n < first_index(spin) || n > last_index(spin)) throw DomainError("dual index outside the system");
  const int cap = harmonic_cap(spin);
  const std::vector<BigRational> series = dual_truncation_series(n, cap - n);
  DualFunction g{spin, n, {}, !spin.is_integer()};
  const BigRational scale = BigRational(pow_int(-4, static_cast<unsigned long>(n)));
  for (int m = 0; m <= cap - n; ++m) g.cos_coeffs.emplace(n + m, scale * series[static_cast<std::size_t>(m)]);
  return g;
}

/// r with int_{-pi}^{pi} cos(m theta) sin^{2p}(theta/2) dtheta = 2 pi r:
/// (-1)^m binom(2p, p+m) / 4^p for m <= p, zero beyond.
inline BigRational cos_sine_integral(int m, int p) {
  if (m < 0) m = -m;
  if (p < 0) throw DomainError("sine power must be non-negative");
  if (m > p) return 0;
  BigRational r = BigRational(binomial(2 * p, p + m)) * pow2(-2 * p);
  return m % 2 == 0 ? r : BigRational(-r);
}

/// (1/2pi) int_{-pi}^{pi} g(theta) sin^power(theta/2) dtheta, exactly.
/// Odd total sine powers integrate to zero by reflection symmetry.
inline BigRational pairing(const DualFunction& g, int power) {
  const int total = power + (g.half_sine_factor ? 1 : 0);
  if (total % 2 != 0) return 0;
  BigRational sum = 0;
  for (const auto& [k, c] : g.cos_coeffs) sum += c * cos_sine_integral(k, total / 2);
  return sum;
}

inline double evaluate_dual(const DualFunction& g, double theta) {
  double v = 0;
  for (const auto& [k, c] : g.cos_coeffs) v += c.get_d() * std::cos(k * theta);
  return g.half_sine_factor ? v * std::sin(theta / 2) : v;
}

/// Trapezoidal estimate of the same pairing on `intervals` uniform panels.
inline double quadrature_pairing(const DualFunction& g, int power, int intervals = 8192) {
  const double pi = std::numbers::pi;
  const double h = 2 * pi / intervals;
  double sum = 0;
  for (int i = 0; i <= intervals; ++i) {
    const double theta = -pi + i * h;
    const double weight = (i == 0 || i == intervals) ? 0.5 : 1.0;
    sum += weight * evaluate_dual(g, theta) * std::pow(std::sin(theta / 2), power);
  }
  return sum * h / (2 * pi);
}

/// Pairing matrix of the native system, rows = duals, columns = functions.
inline RationalMatrix native_pairing_matrix(HalfInteger spin) {
  const int lo = first_index(spin), hi = last_index(spin);
  const std::size_t size = static_cast<std::size_t>(hi - lo + 1);
  RationalMatrix m(size, size);
  for (int a = lo; a <= hi; ++a) {
    const DualFunction g = dual_function(spin, a);
    for (int b = lo; b <= hi; ++b) m(static_cast<std::size_t>(a - lo), static_cast<std::size_t>(b - lo)) = pairing(g, basis_function(spin, b).power);
  }
  return m;
}

/// Dual attached to sin^power in the interlaced system covering powers 0..max_power.
inline DualFunction interlaced_dual(int max_power, int power) {
  const HalfInteger label(max_power);
  if (power % 2 == 0) return system_dual(label, power / 2, max_power / 2, false);
  return system_dual(label, (power + 1) / 2, (max_power + 1) / 2, true);
}

/// Pairing matrix of the combined even+odd system for powers 0..2j.
inline RationalMatrix interlaced_pairing_matrix(HalfInteger spin) {
  const int top = spin.two_j();
  RationalMatrix m(static_cast<std::size_t>(top) + 1, static_cast<std::size_t>(top) + 1);
  for (int a = 0; a <= top; ++a) {
    const DualFunction g = interlaced_dual(top, a);
    for (int b = 0; b <= top; ++b) m(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = pairing(g, b);
  }
  return m;
}

/// Native system is biorthonormal and the interlaced even/odd system is too,
/// so each system's duals annihilate the other parity's powers.
inline bool verify_biorthonormality(HalfInteger spin) {
  return native_pairing_matrix(spin).is_identity() && interlaced_pairing_matrix(spin).is_identity();
}

/// a_{k,n} for integer j and even k from the inverted Vandermonde matrix:
///   n = 0:  (-1)^{k/2} k! sum_c (V^{-1})_{k+1,c}
///   n > 0:  (-4)^n (-1)^{k/2} k! sum_{m=1}^{j+1-n} (V^{-1})_{k+1,m} (j+1-m)/n binom(j+n-m, 2n-1)
inline BigRational extract_coefficient_fourier(const VandermondeData& data, int k, int n) {
  const HalfInteger spin = data.spin;
  if (!spin.is_integer()) throw DomainError("Fourier extraction is stated for integer j");
  const int j = spin.two_j() / 2;
  if (k < 0 || k % 2 != 0 || k > spin.two_j()) throw DomainError("k must be even with 0 <= k <= 2j");
  if (n < 0 || n > j) throw DomainError("n must satisfy 0 <= n <= j");
  const BigRational phase = BigRational((k / 2) % 2 == 0 ? 1 : -1) * BigRational(factorial(static_cast<unsigned long>(k)));
  BigRational sum = 0;
  if (n == 0) {
    for (int c = 1; c <= spin.dimension(); ++c) sum += data.inverse(k + 1, c);
    return phase * sum;
  }
  for (int m = 1; m <= j + 1 - n; ++m) {
    sum += data.inverse(k + 1, m) * ratio(j + 1 - m, n) * BigRational(binomial(j + n - m, 2 * n - 1));
  }
  return BigRational(pow_int(-4, static_cast<unsigned long>(n))) * phase * sum;
}

inline BigRational extract_coefficient_fourier(HalfInteger spin, int k, int n) {
  return extract_coefficient_fourier(build_vandermonde(spin), k, n);
}

namespace detail {

struct GaussianRational {
  BigRational re = 0;
  BigRational im = 0;
};

}  // namespace detail

/// Coefficient of f_n in A_k, by projecting
///   A_k(theta) = (-i)^k k! sum_r (V^{-1})_{k+1,r} e^{i m_r theta}
/// onto the native dual g_n with exact Fourier means. Works for both
/// parities (2j-k even); frequencies are tracked doubled so that the
/// half-integer m_r and the sin(theta/2) factor stay integral.
inline BigRational extract_coefficient_projection(const VandermondeData& data, int k, int n) {
  const HalfInteger spin = data.spin;
  if (k < 0 || k > spin.two_j() || (spin.two_j() - k) % 2 != 0) throw DomainError("projection needs 0 <= k <= 2j with 2j-k even");
  const DualFunction g = dual_function(spin, n);

  // Mean of e^{i (F/2) theta} over [-pi, pi] is delta_{F,0} for even F.
  auto mean = [](long doubled) -> int {
    if (doubled % 2 != 0) throw UnsupportedError("half-integer net frequency in projection");
    return doubled == 0 ? 1 : 0;
  };

  detail::GaussianRational total;
  for (int r = 1; r <= spin.dimension(); ++r) {
    const long two_m = spin.two_j() - 2L * (r - 1);
    const BigRational& weight = data.inverse(k + 1, r);
    if (sgn(weight) == 0) continue;
    for (const auto& [harmonic, c] : g.cos_coeffs) {
      for (int sign : {+1, -1}) {
        const long freq = two_m + sign * 2L * harmonic;
        const BigRational half_c = c / 2;
        if (!g.half_sine_factor) {
          total.re += weight * half_c * mean(freq);
        } else {
          // sin(theta/2) = (-i/2)(e^{i theta/2} - e^{-i theta/2})
          const int net = mean(freq + 1) - mean(freq - 1);
          total.im -= weight * half_c * ratio(net, 2);
        }
      }
    }
  }

  // multiply by (-i)^k k!
  const BigRational kfact = BigRational(factorial(static_cast<unsigned long>(k)));
  detail::GaussianRational out;
  switch (k % 4) {
    case 0: out = {total.re, total.im}; break;
    case 1: out = {total.im, -total.re}; break;
    case 2: out = {-total.re, -total.im}; break;
    default: out = {-total.im, total.re}; break;
  }
  if (sgn(out.im) != 0) throw UnsupportedError("projection produced a non-real coefficient");
  return out.re * kfact;
}

}  // namespace spinpoly
