#pragma once

// Spin matrices J_x, J_y, J_z for arbitrary j in the basis m = +j, ..., -j,
// and the power-reduction identity of the generator S = 2 n.J:
//
//   S^{2j+1} = - sum_{m=0}^{2j} 2^{1+2j-m} t(2+2j, 1+m) S^m

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>

#include "spinpoly/central_factorials.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/half_integer.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly {

using ComplexMatrix = Eigen::MatrixXcd;

/// Unit rotation axis (direction cosines).
class Axis {
 public:
  static constexpr double kTolerance = 1e-12;

  Axis() = default;
  Axis(double x, double y, double z) : x_(x), y_(y), z_(z) {
    const double norm2 = x * x + y * y + z * z;
    if (!(std::abs(norm2 - 1.0) <= kTolerance)) throw InputError("rotation axis must be a unit vector");
  }

  /// Scales an arbitrary non-zero direction to unit length.
  static Axis from_direction(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!(norm > 0) || !std::isfinite(norm)) throw InputError("rotation axis must be a non-zero finite vector");
    return Axis(x / norm, y / norm, z / norm);
  }

  /// Uniformly distributed on the sphere.
  template <class Rng>
  static Axis random(Rng& rng) {
    std::normal_distribution<double> normal;
    for (;;) {
      const double x = normal(rng), y = normal(rng), z = normal(rng);
      const double norm = std::sqrt(x * x + y * y + z * z);
      if (norm > 1e-6) return from_direction(x, y, z);
    }
  }

  static Axis z_axis() { return Axis(0, 0, 1); }

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

 private:
  double x_ = 0;
  double y_ = 0;
  double z_ = 1;
};

struct SpinMatrix {
  HalfInteger spin;
  ComplexMatrix entries;

  Eigen::Index dimension() const { return entries.rows(); }
};

struct SpinTriple {
  SpinMatrix x;
  SpinMatrix y;
  SpinMatrix z;
};

/// Ladder-operator construction. Row/column r carries m = j - r.
inline SpinTriple spin_triple(HalfInteger spin) {
  const Eigen::Index dim = spin.dimension();
  const int two_j = spin.two_j();
  ComplexMatrix jz = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix raise = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const int two_m = two_j - 2 * static_cast<int>(r);
    jz(r, r) = two_m / 2.0;
    if (r > 0) {
      // <m+1| J_+ |m> = sqrt(j(j+1) - m(m+1)), written in doubled integers.
      const double radicand = (two_j * (two_j + 2) - two_m * (two_m + 2)) / 4.0;
      raise(r - 1, r) = std::sqrt(radicand);
    }
  }
  const ComplexMatrix lower = raise.adjoint();
  const std::complex<double> i(0, 1);
  SpinTriple t{{spin, (raise + lower) / 2.0}, {spin, (raise - lower) / (2.0 * i)}, {spin, jz}};
  return t;
}

/// n_x J_x + n_y J_y + n_z J_z.
inline SpinMatrix axis_dot_J(HalfInteger spin, const Axis& axis) {
  const SpinTriple t = spin_triple(spin);
  return {spin, axis.x() * t.x.entries + axis.y() * t.y.entries + axis.z() * t.z.entries};
}

/// Coefficients c_m of S^{2j+1} = sum_m c_m S^m, c_m = -2^{1+2j-m} t(2+2j, 1+m).
inline std::vector<BigRational> power_reduction_coefficients(HalfInteger spin) {
  const int two_j = spin.two_j();
  std::vector<BigRational> c(static_cast<std::size_t>(two_j) + 1);
  for (int m = 0; m <= two_j; ++m) c[static_cast<std::size_t>(m)] = -pow2(1 + two_j - m) * cfn(2 + two_j, 1 + m);
  return c;
}

/// Exact check on S = 2 J_z = diag(2j, 2j-2, ..., -2j).
inline bool verify_power_reduction_exact(HalfInteger spin) {
  const int two_j = spin.two_j();
  const std::vector<BigRational> c = power_reduction_coefficients(spin);
  for (int r = 0; r <= two_j; ++r) {
    const long eigen = two_j - 2 * r;
    BigRational rhs = 0;
    BigInteger power = 1;
    for (int m = 0; m <= two_j; ++m) {
      rhs += c[static_cast<std::size_t>(m)] * BigRational(power);
      power *= eigen;
    }
    if (BigRational(power) != rhs) return false;  // power == eigen^{2j+1} here
  }
  return true;
}

/// Residual of the identity for S = 2 n.J in floating point, relative to max|S^{2j+1}|.
inline double power_reduction_residual(HalfInteger spin, const Axis& axis) {
  const ComplexMatrix s = 2.0 * axis_dot_J(spin, axis).entries;
  const std::vector<BigRational> c = power_reduction_coefficients(spin);
  const Eigen::Index dim = s.rows();
  ComplexMatrix power = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix rhs = ComplexMatrix::Zero(dim, dim);
  for (int m = 0; m <= spin.two_j(); ++m) {
    rhs += c[static_cast<std::size_t>(m)].get_d() * power;
    power = power * s;
  }
  const double scale = std::max(1.0, power.cwiseAbs().maxCoeff());
  return (power - rhs).cwiseAbs().maxCoeff() / scale;
}

/// Exact z-axis check plus one random-axis floating check (relative residual <= 1e-9).
inline bool verify_power_reduction(HalfInteger spin, std::uint64_t seed = 0x5eed) {
  if (!verify_power_reduction_exact(spin)) return false;
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(spin.two_j()));
  return power_reduction_residual(spin, Axis::random(rng)) <= 1e-9;
}

}  // namespace spinpoly
