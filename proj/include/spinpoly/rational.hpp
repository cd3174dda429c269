#pragma once

#include <gmpxx.h>

#include "spinpoly/errors.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinpoly {

/// Exact arbitrary-precision rational. Always kept canonical (gcd(num,den)=1, den>0).
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline BigInteger factorial(unsigned long n) {
  BigInteger r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// binom(n, k) for integer n, zero when k < 0 or k > n >= 0.
inline BigInteger binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInteger pow_int(long base, unsigned long exp) {
  BigInteger r;
  BigInteger b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

/// 2^e for any integer e (negative exponents give 1/2^|e|).
inline BigRational pow2(long e) {
  BigRational r = 1;
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

/// num/den in lowest terms. mpq_class(num, den) alone leaves the value
/// uncanonicalized, which breaks arithmetic and comparison.
inline BigRational ratio(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw DomainError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string numerator_string(const BigRational& q) { return q.get_num().get_str(); }
inline std::string denominator_string(const BigRational& q) { return q.get_den().get_str(); }

/// Parse "p" or "p/q"; result canonicalized.
inline BigRational parse_rational(const std::string& text) {
  BigRational q;
  try {
    q = BigRational(text, 10);
  } catch (const std::invalid_argument&) {
    throw InputError("not a rational number: " + text);
  }
  if (q.get_den() == 0) throw InputError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// A dense row-major exact matrix. Indexing is 0-based; the 1-based
/// convention of the Vandermonde module lives in its accessors.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows_, b.cols_);
    BigRational tmp;
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigRational& lhs = a(r, k);
        if (sgn(lhs) == 0) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          if (sgn(b(k, c)) == 0) continue;
          tmp = lhs * b(k, c);
          out(r, c) += tmp;
        }
      }
    }
    return out;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  BigRational trace() const {
    BigRational t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> data_;
};

}  // namespace spinpoly
