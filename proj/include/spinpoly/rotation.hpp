#pragma once

// exp(i theta n.J) assembled from the coefficient polynomials, plus an
// independent eigendecomposition oracle.
//
// The polynomial sum cancels heavily for large j (individual terms grow
// like (pi j)^k / k! while the result is unitary), so the Horner
// evaluation switches from double to MPFR with enough guard bits when the
// estimated rounding error would exceed ~1e-13.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "spinpoly/coefficients.hpp"
#include "spinpoly/detail/mpfr.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/spin_algebra.hpp"

namespace spinpoly {

struct RotationResult {
  HalfInteger spin;
  Axis axis;
  double theta = 0;
  ComplexMatrix matrix;
};

/// max |U^dagger U - I|
inline double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix defect = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return defect.size() == 0 ? 0.0 : defect.cwiseAbs().maxCoeff();
}

inline double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

namespace detail {

// Exact A_k / k! for every k, cached per spin.
inline const std::vector<CoefficientPolynomial>& scaled_coefficients(HalfInteger spin) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<CoefficientPolynomial>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[spin.two_j()];
  if (!slot) {
    std::vector<CoefficientPolynomial> polys = all_coefficients(spin);
    for (auto& p : polys) {
      const BigRational inv_fact = 1 / BigRational(factorial(static_cast<unsigned long>(p.k)));
      for (auto& [m, c] : p.sine_coeffs) c *= inv_fact;
    }
    slot = std::make_unique<const std::vector<CoefficientPolynomial>>(std::move(polys));
  }
  return *slot;
}

// log2 of sum_k |A_k(theta)|/k! (2j)^k, an upper estimate of the largest
// intermediate magnitude in the Horner recursion.
inline double log2_term_scale(HalfInteger spin, double theta) {
  const auto& polys = scaled_coefficients(spin);
  const double radius = spin.two_j();
  std::vector<double> logs;
  for (const auto& p : polys) {
    const double a = std::abs(CoefficientEvaluator(p)(theta));
    if (a == 0) continue;
    logs.push_back(std::log2(a) + (radius > 0 ? p.k * std::log2(radius) : (p.k == 0 ? 0.0 : -1e300)));
  }
  if (logs.empty()) return 0;
  const double top = *std::max_element(logs.begin(), logs.end());
  double acc = 0;
  for (double l : logs) acc += std::exp2(l - top);
  return top + std::log2(acc);
}

}  // namespace detail

/// Bits of working precision the polynomial route needs at this angle.
/// 53 means plain double suffices.
inline int polynomial_working_bits(HalfInteger spin, double theta) {
  const double scale = std::max(0.0, detail::log2_term_scale(spin, theta));
  const double dim = spin.dimension();
  const double growth = std::log2(dim * dim);
  if (scale + growth - 53 <= std::log2(1e-13)) return 53;
  return static_cast<int>(std::ceil(scale + growth)) + 53 + 24;
}

namespace detail {

inline ComplexMatrix horner_double(HalfInteger spin, const Axis& axis, double theta) {
  const auto& polys = scaled_coefficients(spin);
  const Eigen::Index dim = spin.dimension();
  const ComplexMatrix generator = std::complex<double>(0, 2) * axis_dot_J(spin, axis).entries;
  ComplexMatrix acc = ComplexMatrix::Identity(dim, dim) * CoefficientEvaluator(polys.back())(theta);
  for (int k = spin.two_j() - 1; k >= 0; --k) {
    acc = acc * generator;
    acc.diagonal().array() += CoefficientEvaluator(polys[static_cast<std::size_t>(k)])(theta);
  }
  return acc;
}

// Dense complex matrix of MPFR numbers, row-major, split real/imag.
struct MpfrMatrix {
  Eigen::Index dim;
  std::vector<Mpfr> re;
  std::vector<Mpfr> im;
  MpfrMatrix(Eigen::Index n, mpfr_prec_t bits)
      : dim(n), re(static_cast<std::size_t>(n * n), Mpfr(bits)), im(static_cast<std::size_t>(n * n), Mpfr(bits)) {}
  std::size_t at(Eigen::Index r, Eigen::Index c) const { return static_cast<std::size_t>(r * dim + c); }
};

inline Mpfr evaluate_mpfr(const CoefficientPolynomial& poly, const Mpfr& s, const Mpfr& c, mpfr_prec_t bits) {
  Mpfr acc(bits), coeff(bits);
  const int top = poly.sine_coeffs.empty() ? 0 : poly.sine_coeffs.rbegin()->first;
  for (int m = top; m >= 0; --m) {
    mpfr_mul(acc.get(), acc.get(), s.get(), MPFR_RNDN);
    auto it = poly.sine_coeffs.find(m);
    if (it != poly.sine_coeffs.end()) {
      mpfr_set_q(coeff.get(), it->second.get_mpq_t(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), coeff.get(), MPFR_RNDN);
    }
  }
  if (poly.epsilon) mpfr_mul(acc.get(), acc.get(), c.get(), MPFR_RNDN);
  return acc;
}

// The generator X = 2i n.J is tridiagonal in the J_z basis:
//   X(r,r)   = i n_z 2m_r
//   X(r-1,r) = n_y a_r + i n_x a_r
//   X(r,r-1) = -n_y a_r + i n_x a_r,    a_r = sqrt(j(j+1) - m_r(m_r+1))
inline ComplexMatrix horner_mpfr(HalfInteger spin, const Axis& axis, double theta, mpfr_prec_t bits) {
  const auto& polys = scaled_coefficients(spin);
  const Eigen::Index dim = spin.dimension();
  const int two_j = spin.two_j();

  Mpfr half_theta(bits), s(bits), c(bits);
  mpfr_set_d(half_theta.get(), theta, MPFR_RNDN);
  mpfr_div_ui(half_theta.get(), half_theta.get(), 2, MPFR_RNDN);
  mpfr_sin_cos(s.get(), c.get(), half_theta.get(), MPFR_RNDN);

  std::vector<Mpfr> coeffs;
  coeffs.reserve(polys.size());
  for (const auto& p : polys) coeffs.push_back(evaluate_mpfr(p, s, c, bits));

  Mpfr nx(bits), ny(bits), nz(bits);
  mpfr_set_d(nx.get(), axis.x(), MPFR_RNDN);
  mpfr_set_d(ny.get(), axis.y(), MPFR_RNDN);
  mpfr_set_d(nz.get(), axis.z(), MPFR_RNDN);
  // The polynomial equals the exponential only on the exact spectrum, and its
  // slope off the nodes is as large as the cancellation it suffers, so a unit
  // axis that is unit only to double rounding must be renormalized here.
  {
    Mpfr norm(bits), sq(bits);
    mpfr_sqr(norm.get(), nx.get(), MPFR_RNDN);
    mpfr_sqr(sq.get(), ny.get(), MPFR_RNDN);
    mpfr_add(norm.get(), norm.get(), sq.get(), MPFR_RNDN);
    mpfr_sqr(sq.get(), nz.get(), MPFR_RNDN);
    mpfr_add(norm.get(), norm.get(), sq.get(), MPFR_RNDN);
    mpfr_sqrt(norm.get(), norm.get(), MPFR_RNDN);
    mpfr_div(nx.get(), nx.get(), norm.get(), MPFR_RNDN);
    mpfr_div(ny.get(), ny.get(), norm.get(), MPFR_RNDN);
    mpfr_div(nz.get(), nz.get(), norm.get(), MPFR_RNDN);
  }

  std::vector<Mpfr> diag_im(static_cast<std::size_t>(dim), Mpfr(bits));
  std::vector<Mpfr> upper_re(static_cast<std::size_t>(dim), Mpfr(bits)), upper_im(static_cast<std::size_t>(dim), Mpfr(bits));
  std::vector<Mpfr> lower_re(static_cast<std::size_t>(dim), Mpfr(bits)), lower_im(static_cast<std::size_t>(dim), Mpfr(bits));
  Mpfr a(bits);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const long two_m = two_j - 2 * static_cast<long>(r);
    const auto ur = static_cast<std::size_t>(r);
    mpfr_mul_si(diag_im[ur].get(), nz.get(), two_m, MPFR_RNDN);
    if (r > 0) {
      mpfr_set_si(a.get(), two_j * (two_j + 2) - two_m * (two_m + 2), MPFR_RNDN);
      mpfr_sqrt(a.get(), a.get(), MPFR_RNDN);
      mpfr_div_ui(a.get(), a.get(), 2, MPFR_RNDN);
      mpfr_mul(upper_re[ur].get(), ny.get(), a.get(), MPFR_RNDN);
      mpfr_mul(upper_im[ur].get(), nx.get(), a.get(), MPFR_RNDN);
      mpfr_neg(lower_re[ur].get(), upper_re[ur].get(), MPFR_RNDN);
      mpfr_set(lower_im[ur].get(), upper_im[ur].get(), MPFR_RNDN);
    }
  }

  MpfrMatrix acc(dim, bits), next(dim, bits);
  for (Eigen::Index r = 0; r < dim; ++r) mpfr_set(acc.re[acc.at(r, r)].get(), coeffs.back().get(), MPFR_RNDN);

  Mpfr t1(bits), t2(bits);
  // (p + iq)(x + iy) accumulated into (re, im)
  auto mul_add = [&](Mpfr& re, Mpfr& im, const Mpfr& p, const Mpfr& q, const Mpfr* x, const Mpfr& y) {
    if (x) {
      mpfr_mul(t1.get(), p.get(), x->get(), MPFR_RNDN);
      mpfr_add(re.get(), re.get(), t1.get(), MPFR_RNDN);
      mpfr_mul(t2.get(), q.get(), x->get(), MPFR_RNDN);
      mpfr_add(im.get(), im.get(), t2.get(), MPFR_RNDN);
    }
    mpfr_mul(t1.get(), q.get(), y.get(), MPFR_RNDN);
    mpfr_sub(re.get(), re.get(), t1.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), p.get(), y.get(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), t2.get(), MPFR_RNDN);
  };

  for (int k = two_j - 1; k >= 0; --k) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index col = 0; col < dim; ++col) {
        Mpfr& re = next.re[next.at(r, col)];
        Mpfr& im = next.im[next.at(r, col)];
        mpfr_set_zero(re.get(), 1);
        mpfr_set_zero(im.get(), 1);
        const auto uc = static_cast<std::size_t>(col);
        // column col of X has entries at rows col-1 (upper), col (diag), col+1 (lower)
        mul_add(re, im, acc.re[acc.at(r, col)], acc.im[acc.at(r, col)], nullptr, diag_im[uc]);
        if (col > 0) {
          mul_add(re, im, acc.re[acc.at(r, col - 1)], acc.im[acc.at(r, col - 1)], &upper_re[uc], upper_im[uc]);
        }
        if (col + 1 < dim) {
          const auto below = static_cast<std::size_t>(col + 1);
          mul_add(re, im, acc.re[acc.at(r, col + 1)], acc.im[acc.at(r, col + 1)], &lower_re[below], lower_im[below]);
        }
      }
      mpfr_add(next.re[next.at(r, r)].get(), next.re[next.at(r, r)].get(), coeffs[static_cast<std::size_t>(k)].get(), MPFR_RNDN);
    }
    std::swap(acc, next);
  }

  ComplexMatrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index col = 0; col < dim; ++col)
      out(r, col) = {acc.re[acc.at(r, col)].to_double(), acc.im[acc.at(r, col)].to_double()};
  return out;
}

}  // namespace detail

/// sum_{k=0}^{2j} A_k(theta)/k! (2i n.J)^k by Horner's scheme.
/// working_bits = 0 picks the precision automatically; 53 forces double.
inline RotationResult rotation_polynomial(HalfInteger spin, const Axis& axis, double theta, int working_bits = 0) {
  const int bits = working_bits > 0 ? working_bits : polynomial_working_bits(spin, theta);
  RotationResult result{spin, axis, theta, {}};
  result.matrix = bits <= 53 ? detail::horner_double(spin, axis, theta)
                             : detail::horner_mpfr(spin, axis, theta, static_cast<mpfr_prec_t>(bits));
  return result;
}

/// Q diag(e^{i theta m}) Q^dagger from the Hermitian eigendecomposition of n.J,
/// with eigenvalues snapped to the exact spectrum {-j, ..., j}.
inline RotationResult rotation_reference(HalfInteger spin, const Axis& axis, double theta) {
  const SpinMatrix generator = axis_dot_J(spin, axis);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(generator.entries);
  if (solver.info() != Eigen::Success) throw OracleFailure("eigendecomposition did not converge");
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();  // ascending
  const Eigen::Index dim = spin.dimension();
  Eigen::VectorXcd phases(dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const double exact = (-spin.two_j() + 2.0 * static_cast<double>(r)) / 2.0;
    if (!(std::abs(eigenvalues(r) - exact) <= 1e-8)) {
      throw OracleFailure("eigenvalue " + std::to_string(eigenvalues(r)) + " deviates from spectrum value " +
                          std::to_string(exact));
    }
    phases(r) = std::polar(1.0, theta * exact);
  }
  const ComplexMatrix& q = solver.eigenvectors();
  return {spin, axis, theta, q * phases.asDiagonal() * q.adjoint()};
}

/// Scaling-and-squaring Pade exponential of i theta n.J (Eigen's MatrixFunctions).
/// Third, independent route; used by the benchmark as the common reference.
inline RotationResult rotation_scaling_squaring(HalfInteger spin, const Axis& axis, double theta) {
  const ComplexMatrix generator = std::complex<double>(0, theta) * axis_dot_J(spin, axis).entries;
  return {spin, axis, theta, generator.exp()};
}

/// max-abs entrywise difference between the polynomial and the oracle.
inline double compare_rotation(HalfInteger spin, const Axis& axis, double theta) {
  return max_abs_difference(rotation_polynomial(spin, axis, theta).matrix,
                            rotation_reference(spin, axis, theta).matrix);
}

}  // namespace spinpoly
