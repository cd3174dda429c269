#pragma once

// Exact Vandermonde matrix on the spectrum of S = 2 J_z, its inverse, the
// trace-dual diagonal matrices T_n, the metric G, and the projector pair
// (B, P).
//
// Rows and columns are indexed 1..2j+1 in every accessor here.

#include <string>
#include <vector>

#include "spinpoly/central_factorials.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/half_integer.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly {

/// Square exact matrix addressed with 1-based (row, column).
class OneBasedMatrix {
 public:
  OneBasedMatrix() = default;
  explicit OneBasedMatrix(RationalMatrix m) : m_(std::move(m)) {}

  int size() const { return static_cast<int>(m_.rows()); }
  const BigRational& operator()(int row, int col) const {
    check(row, col);
    return m_(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
  }
  BigRational& operator()(int row, int col) {
    check(row, col);
    return m_(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
  }
  const RationalMatrix& raw() const { return m_; }
  RationalMatrix& raw() { return m_; }

  friend bool operator==(const OneBasedMatrix&, const OneBasedMatrix&) = default;

 private:
  void check(int row, int col) const {
    if (row < 1 || col < 1 || row > size() || col > static_cast<int>(m_.cols()))
      throw DomainError("index (" + std::to_string(row) + ", " + std::to_string(col) + ") outside 1.." + std::to_string(size()));
  }

  RationalMatrix m_;
};

/// Diagonal of T_n, entries k = 1..2j+1 (stored 0-based).
using DiagonalVector = std::vector<BigRational>;

struct VandermondeData {
  HalfInteger spin;
  OneBasedMatrix vandermonde;  // V_{r,c} = (2j - 2(r-1))^{c-1}
  OneBasedMatrix inverse;
  std::vector<DiagonalVector> duals;  // duals[n] = diag(T_n)
  OneBasedMatrix metric;              // G = V^{-T} V^{-1}
};

struct ProjectorPair {
  OneBasedMatrix all_ones;   // B
  OneBasedMatrix projector;  // P, single 1 in slot (1,1)
};

/// Spectrum nodes of S = 2 J_z in row order: 2j, 2j-2, ..., -2j.
inline std::vector<long> spectrum_nodes(HalfInteger spin) {
  std::vector<long> nodes;
  for (int r = 0; r <= spin.two_j(); ++r) nodes.push_back(spin.two_j() - 2L * r);
  return nodes;
}

inline OneBasedMatrix vandermonde_matrix(HalfInteger spin) {
  const std::vector<long> nodes = spectrum_nodes(spin);
  const std::size_t n = nodes.size();
  RationalMatrix v(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    BigInteger power = 1;
    for (std::size_t c = 0; c < n; ++c) {
      v(r, c) = BigRational(power);
      power *= nodes[r];
    }
  }
  return OneBasedMatrix(std::move(v));
}

/// Column r of V^{-1} holds the monomial coefficients of the Lagrange basis
/// polynomial L_r(x) = prod_{s != r} (x - x_s)/(x_r - x_s).
inline OneBasedMatrix vandermonde_inverse(HalfInteger spin) {
  const std::vector<long> nodes = spectrum_nodes(spin);
  const std::size_t n = nodes.size();

  // master(x) = prod_s (x - x_s), lowest power first
  std::vector<BigInteger> master{1};
  for (long x : nodes) {
    std::vector<BigInteger> next(master.size() + 1);
    for (std::size_t p = 0; p < master.size(); ++p) {
      next[p + 1] += master[p];
      next[p] -= master[p] * x;
    }
    master = std::move(next);
  }

  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    // synthetic division master(x) / (x - x_r)
    std::vector<BigInteger> quotient(n);
    BigInteger carry = 0;
    for (std::size_t p = n; p-- > 0;) {
      carry = master[p + 1] + carry * nodes[r];
      quotient[p] = carry;
    }
    BigInteger denom = 1;
    for (std::size_t s = 0; s < n; ++s)
      if (s != r) denom *= nodes[r] - nodes[s];
    for (std::size_t c = 0; c < n; ++c) {
      BigRational entry(quotient[c], denom);
      entry.canonicalize();
      inv(c, r) = entry;
    }
  }
  return OneBasedMatrix(std::move(inv));
}

/// (T_{n-1})_{kk} = (V^{-1})_{n,k}
inline std::vector<DiagonalVector> duals_from_inverse(const OneBasedMatrix& inverse) {
  std::vector<DiagonalVector> duals;
  for (int n = 1; n <= inverse.size(); ++n) {
    DiagonalVector d;
    for (int k = 1; k <= inverse.size(); ++k) d.push_back(inverse(n, k));
    duals.push_back(std::move(d));
  }
  return duals;
}

inline OneBasedMatrix metric_from_inverse(const OneBasedMatrix& inverse) {
  return OneBasedMatrix(inverse.raw().transpose() * inverse.raw());
}

inline VandermondeData build_vandermonde(HalfInteger spin) {
  VandermondeData data{spin, vandermonde_matrix(spin), vandermonde_inverse(spin), {}, {}};
  data.duals = duals_from_inverse(data.inverse);
  data.metric = metric_from_inverse(data.inverse);
  return data;
}

inline std::vector<DiagonalVector> dual_matrices(HalfInteger spin) { return build_vandermonde(spin).duals; }

inline OneBasedMatrix metric(HalfInteger spin) { return build_vandermonde(spin).metric; }

inline ProjectorPair projector_pair(HalfInteger spin) {
  const std::size_t n = static_cast<std::size_t>(spin.dimension());
  RationalMatrix b(n, n), p(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b(r, c) = 1;
  p(0, 0) = 1;
  return {OneBasedMatrix(std::move(b)), OneBasedMatrix(std::move(p))};
}

/// Diagonal of S^m for S = 2 J_z; equals column m+1 of V.
inline DiagonalVector spin_power_diagonal(HalfInteger spin, int m) {
  DiagonalVector d;
  for (long x : spectrum_nodes(spin)) d.push_back(BigRational(pow_int(x, static_cast<unsigned long>(m))));
  return d;
}

/// Trace(T_n S^m) = delta_{n,m} for all n, m <= 2j.
inline bool verify_dual_orthonormality(const VandermondeData& data) {
  const int dim = data.spin.dimension();
  for (int m = 0; m < dim; ++m) {
    const DiagonalVector power = spin_power_diagonal(data.spin, m);
    for (int n = 0; n < dim; ++n) {
      BigRational trace = 0;
      for (int k = 0; k < dim; ++k) trace += data.duals[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * power[static_cast<std::size_t>(k)];
      if (trace != (n == m ? 1 : 0)) return false;
    }
  }
  return true;
}

/// delta_{m,n} = sum_{k,l} (S^m)_kk G_kl (S^n)_ll
inline bool verify_metric_orthonormality(const VandermondeData& data) {
  const int dim = data.spin.dimension();
  std::vector<DiagonalVector> powers;
  for (int m = 0; m < dim; ++m) powers.push_back(spin_power_diagonal(data.spin, m));
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      BigRational sum = 0;
      for (int k = 1; k <= dim; ++k)
        for (int l = 1; l <= dim; ++l)
          sum += powers[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)] * data.metric(k, l) *
                 powers[static_cast<std::size_t>(n)][static_cast<std::size_t>(l - 1)];
      if (sum != (m == n ? 1 : 0)) return false;
    }
  }
  return true;
}

/// Both trace forms of the biorthonormality:
///   delta_{m,n} = Trace(B S^m G S^n)
///   delta_{m,n} = Trace[(V^{-1} S^n V) P (V^{-1} S^m V)^T]
/// with every matrix formed explicitly.
inline bool verify_trace_identities(const VandermondeData& data) {
  const std::size_t dim = static_cast<std::size_t>(data.spin.dimension());
  const ProjectorPair bp = projector_pair(data.spin);
  const RationalMatrix& v = data.vandermonde.raw();
  const RationalMatrix& inv = data.inverse.raw();
  const RationalMatrix& g = data.metric.raw();

  std::vector<RationalMatrix> powers;
  std::vector<RationalMatrix> conjugated;  // V^{-1} S^n V
  for (std::size_t n = 0; n < dim; ++n) {
    RationalMatrix s(dim, dim);
    const DiagonalVector d = spin_power_diagonal(data.spin, static_cast<int>(n));
    for (std::size_t k = 0; k < dim; ++k) s(k, k) = d[k];
    conjugated.push_back(inv * (s * v));
    powers.push_back(std::move(s));
  }

  // Trace(X Y) without forming X Y.
  auto trace_of_product = [dim](const RationalMatrix& x, const RationalMatrix& y) {
    BigRational t = 0;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) t += x(a, b) * y(b, a);
    return t;
  };

  for (std::size_t m = 0; m < dim; ++m) {
    const RationalMatrix bsm = bp.all_ones.raw() * powers[m];
    const RationalMatrix conj_m_t = conjugated[m].transpose();
    for (std::size_t n = 0; n < dim; ++n) {
      const BigRational expected = m == n ? 1 : 0;
      if (trace_of_product(bsm * g, powers[n]) != expected) return false;
      if (trace_of_product(conjugated[n] * bp.projector.raw(), conj_m_t) != expected) return false;
    }
  }
  return true;
}

/// B = V P V^T and P = V^{-1} B V^{-T}, plus P^2 = P.
inline bool verify_projector_identities(const VandermondeData& data) {
  const ProjectorPair bp = projector_pair(data.spin);
  const RationalMatrix& v = data.vandermonde.raw();
  const RationalMatrix& inv = data.inverse.raw();
  const RationalMatrix& b = bp.all_ones.raw();
  const RationalMatrix& p = bp.projector.raw();
  return v * p * v.transpose() == b && inv * b * inv.transpose() == p && p * p == p;
}

/// t(2n, 2l) = (2n)! 2^{2l} sum_{m=1}^{j+1-n} (V^{-1})_{2l+1,m} (j+1-m)/n binom(j+n-m, 2n-1)
inline BigRational cfn_from_vandermonde(const VandermondeData& data, int n, int l) {
  if (!data.spin.is_integer()) throw DomainError("lemma is stated for integer j");
  const int j = data.spin.two_j() / 2;
  if (l < 1 || l > j || n < l || n > j) throw DomainError("lemma needs 1 <= l <= n <= j");
  BigRational sum = 0;
  for (int m = 1; m <= j + 1 - n; ++m) {
    sum += data.inverse(2 * l + 1, m) * ratio(j + 1 - m, n) * BigRational(binomial(j + n - m, 2 * n - 1));
  }
  return sum * BigRational(factorial(static_cast<unsigned long>(2 * n))) * pow2(2 * l);
}

inline BigRational cfn_from_vandermonde(HalfInteger spin, int n, int l) {
  return cfn_from_vandermonde(build_vandermonde(spin), n, l);
}

/// prod_{k=0}^{n-1} ((j+1-m)^2 - k^2), directly.
inline BigInteger shifted_square_product(int j, int m, int n) {
  BigInteger p = 1;
  const long x = j + 1 - m;
  for (int k = 0; k < n; ++k) p *= x * x - static_cast<long>(k) * k;
  return p;
}

/// The same product in piecewise factorial-ratio form.
inline BigInteger shifted_square_product_piecewise(int j, int m, int n) {
  if (m >= 1 && m <= j + 1 - n) {
    return BigInteger(j + 1 - m) * factorial(static_cast<unsigned long>(j + n - m)) /
           factorial(static_cast<unsigned long>(j + 1 - n - m));
  }
  if (m >= j + 1 + n && m <= 2 * j + 1) {
    return BigInteger(m - 1 - j) * factorial(static_cast<unsigned long>(m + n - j - 2)) /
           factorial(static_cast<unsigned long>(m - n - j - 1));
  }
  return 0;
}

/// sum_c (V^{-1})_{r,c} = delta_{r,1}
inline bool verify_inverse_row_sums(const VandermondeData& data) {
  const int dim = data.spin.dimension();
  for (int r = 1; r <= dim; ++r) {
    BigRational sum = 0;
    for (int c = 1; c <= dim; ++c) sum += data.inverse(r, c);
    if (sum != (r == 1 ? 1 : 0)) return false;
  }
  return true;
}

/// Odd rows of V^{-1} are left-right symmetric, even rows antisymmetric.
inline bool verify_inverse_row_symmetry(const VandermondeData& data) {
  const int dim = data.spin.dimension();
  for (int r = 1; r <= dim; ++r) {
    for (int c = 1; c <= dim; ++c) {
      const BigRational& left = data.inverse(r, c);
      const BigRational& right = data.inverse(r, dim + 1 - c);
      if (r % 2 == 1 ? left != right : left != -right) return false;
    }
  }
  return true;
}

}  // namespace spinpoly
