#pragma once

// Central factorial numbers of the first kind t(m, n) and the Taylor
// coefficients of powers of arcsin built from them.
//
//   even m = 2a:  prod_{l=0}^{a-1} (x^2 - l^2)          = sum_k t(2a, 2k) x^{2k}
//   odd  m = 2a+1: x prod_{l=0}^{a-1} (x^2 - (l+1/2)^2) = sum_k t(2a+1, 2k+1) x^{2k+1}
//
// t(0,0) = 1 and t(m,0) = 0 for m > 0.

#include <map>
#include <mutex>
#include <vector>

#include "spinpoly/errors.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly {

namespace detail {

// Row m of t(m, .) as a dense vector indexed by n = 0..m.
inline std::vector<BigRational> expand_central_factorial_row(int m) {
  // Coefficients of the product in y = x^2, lowest power first.
  std::vector<BigRational> poly{1};
  const bool odd = (m % 2) != 0;
  const int factors = odd ? (m - 1) / 2 : m / 2;
  for (int l = 0; l < factors; ++l) {
    BigRational root = odd ? BigRational((2 * l + 1) * (2 * l + 1), 4) : BigRational(l * l);
    std::vector<BigRational> next(poly.size() + 1);
    for (std::size_t p = 0; p < poly.size(); ++p) {
      next[p + 1] += poly[p];
      next[p] -= root * poly[p];
    }
    poly = std::move(next);
  }
  std::vector<BigRational> row(static_cast<std::size_t>(m) + 1);
  for (std::size_t p = 0; p < poly.size(); ++p) {
    const std::size_t n = odd ? 2 * p + 1 : 2 * p;
    if (n <= static_cast<std::size_t>(m)) row[n] = poly[p];
  }
  return row;
}

class CentralFactorialCache {
 public:
  const std::vector<BigRational>& row(int m) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = rows_.find(m);
    if (it == rows_.end()) it = rows_.emplace(m, expand_central_factorial_row(m)).first;
    return it->second;
  }

 private:
  std::mutex mutex_;
  std::map<int, std::vector<BigRational>> rows_;
};

inline CentralFactorialCache& central_factorial_cache() {
  static CentralFactorialCache cache;
  return cache;
}

}  // namespace detail

/// t(m, n). Zero for mixed parity and for n > m.
inline BigRational cfn(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("central factorial indices must be non-negative");
  if (n > m || ((m + n) % 2) != 0) return 0;
  return detail::central_factorial_cache().row(m)[static_cast<std::size_t>(n)];
}

/// |t(m, n)|
inline BigRational cfn_abs(int m, int n) {
  BigRational v = cfn(m, n);
  return abs(v);
}

/// All t(m, n) for 0 <= n <= m <= max_m.
class CentralFactorialTable {
 public:
  CentralFactorialTable() = default;
  explicit CentralFactorialTable(int max_m) : max_m_(max_m) {
    if (max_m < 0) throw DomainError("max_m must be non-negative");
    rows_.reserve(static_cast<std::size_t>(max_m) + 1);
    for (int m = 0; m <= max_m; ++m) rows_.push_back(detail::expand_central_factorial_row(m));
  }

  int max_m() const { return max_m_; }

  /// t(m, n), zero outside the triangle n <= m.
  BigRational at(int m, int n) const {
    if (m < 0 || n < 0 || m > max_m_) throw DomainError("central factorial index outside table");
    if (n > m) return 0;
    return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
  }

  // Overwrites one entry. Used to inject faults when testing the checkers.
  void set(int m, int n, const BigRational& value) {
    if (m < 0 || n < 0 || m > max_m_ || n > m) throw DomainError("central factorial index outside table");
    rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = value;
  }

 private:
  int max_m_ = -1;
  std::vector<std::vector<BigRational>> rows_;
};

inline CentralFactorialTable cfn_table(int max_m) { return CentralFactorialTable(max_m); }

/// Checks t(m, 2k-2) = t(m+2, 2k) + m^2/4 t(m, 2k) for every even m with
/// m + 2 <= table.max_m() and every k >= 1 with 2k <= m + 2.
inline bool verify_cfn_recurrence(const CentralFactorialTable& table) {
  for (int m = 0; m + 2 <= table.max_m(); m += 2) {
    for (int k = 1; 2 * k <= m + 2; ++k) {
      const BigRational lhs = table.at(m, 2 * k - 2);
      const BigRational rhs = table.at(m + 2, 2 * k) + ratio(m * m, 4) * table.at(m, 2 * k);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

inline bool verify_cfn_recurrence(int max_m) {
  if (max_m < 4) throw DomainError("recurrence check needs max_m >= 4");
  return verify_cfn_recurrence(cfn_table(max_m + 2));
}

/// Taylor coefficients of (arcsin z)^power through z^order.
struct ArcsinSeries {
  int power = 0;
  int order = 0;
  std::vector<BigRational> coeffs;  // coeffs[m] multiplies z^m

  const BigRational& operator[](int m) const { return coeffs[static_cast<std::size_t>(m)]; }
};

inline ArcsinSeries arcsin_power_series(int power, int order) {
  if (power < 0) throw DomainError("arcsin power must be non-negative");
  if (order < power) throw DomainError("series order must be at least the power");
  ArcsinSeries s{power, order, std::vector<BigRational>(static_cast<std::size_t>(order) + 1)};
  const BigRational prefactor = BigRational(factorial(static_cast<unsigned long>(power))) * pow2(-power);
  for (int m = power; m <= order; m += 2) {
    BigRational c = prefactor * cfn_abs(m, power) * pow2(m);
    c /= BigRational(factorial(static_cast<unsigned long>(m)));
    s.coeffs[static_cast<std::size_t>(m)] = c;
  }
  return s;
}

}  // namespace spinpoly
