#include <gtest/gtest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "spinpoly/biorthogonal.hpp"
#include "spinpoly/coefficients.hpp"
#include "spinpoly/golden.hpp"

using namespace spinpoly;

namespace {

BigRational q(const char* text) { return parse_rational(text); }

std::map<int, BigRational> cosines(std::initializer_list<std::pair<int, long>> terms) {
  std::map<int, BigRational> out;
  for (const auto& [k, v] : terms) out[k] = v;
  return out;
}

}  // namespace

TEST(Basis, IndexRanges) {
  EXPECT_EQ(first_index(HalfInteger(4)), 0);
  EXPECT_EQ(last_index(HalfInteger(4)), 2);
  EXPECT_EQ(first_index(HalfInteger(5)), 1);
  EXPECT_EQ(last_index(HalfInteger(5)), 3);
  EXPECT_EQ(basis_function(HalfInteger(4), 2).power, 4);
  EXPECT_EQ(basis_function(HalfInteger(5), 3).power, 5);
  EXPECT_THROW(basis_function(HalfInteger(5), 0), DomainError);
  EXPECT_THROW(basis_function(HalfInteger(4), 3), DomainError);
}

TEST(Duals, TableRows) {
  const auto g42 = dual_function(HalfInteger(4), 2);
  EXPECT_EQ(g42.cos_coeffs, cosines({{2, 16}}));
  EXPECT_FALSE(g42.half_sine_factor);
  EXPECT_EQ(dual_function(HalfInteger(4), 1).cos_coeffs, cosines({{1, -4}, {2, -16}}));
  const auto g51 = dual_function(HalfInteger(5), 1);
  EXPECT_EQ(g51.cos_coeffs, cosines({{1, -4}, {2, -16}, {3, -36}}));
  EXPECT_TRUE(g51.half_sine_factor);
  EXPECT_EQ(dual_function(HalfInteger(6), 0).cos_coeffs, cosines({{0, 1}, {1, 2}, {2, 2}, {3, 2}}));
  EXPECT_THROW(dual_function(HalfInteger(5), 0), DomainError);
  EXPECT_THROW(dual_function(HalfInteger(4), 3), DomainError);
}

TEST(Duals, LeadingCoefficient) {
  for (int two_j = 0; two_j <= 20; ++two_j) {
    const HalfInteger spin(two_j);
    for (int n = first_index(spin); n <= last_index(spin); ++n) {
      const auto g = dual_function(spin, n);
      EXPECT_EQ(g.cos_coeffs.begin()->first, n);
      EXPECT_EQ(g.cos_coeffs.begin()->second, BigRational(pow_int(-4, static_cast<unsigned long>(n))));
      EXPECT_EQ(g.cos_coeffs.rbegin()->first, harmonic_cap(spin));
    }
  }
}

TEST(GeneratingFunctions, ReferenceRows) {
  EXPECT_EQ(dual_truncation_series(2, 3), (std::vector<BigRational>{1, 6, 20, 50}));
  EXPECT_EQ(dual_truncation_series(1, 3), (std::vector<BigRational>{1, 4, 9, 16}));
  EXPECT_EQ(dual_truncation_series(0, 3), (std::vector<BigRational>{1, 2, 2, 2}));
  const auto& rows = golden::generating_rows();
  for (int n = 0; n < static_cast<int>(rows.size()); ++n) {
    const auto series = dual_truncation_series(n, 7);
    for (int m = 0; m <= 7; ++m) EXPECT_EQ(series[static_cast<std::size_t>(m)], rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]);
  }
}

TEST(GeneratingFunctions, MatchSymbolicSeries) {
  for (const auto& e : oracle::kGeneratingRows) EXPECT_EQ(dual_truncation_series(e.n, 7)[static_cast<std::size_t>(e.power)], q(e.value));
}

TEST(GeneratingFunctions, EntriesAreBracketCoefficients) {
  for (int n = 0; n <= 8; ++n) {
    const auto series = dual_truncation_series(n, 10);
    for (int m = 0; m <= 10; ++m) EXPECT_EQ(series[static_cast<std::size_t>(m)], dual_bracket_coefficient(n, n + m)) << n << "," << m;
  }
  for (int two_j = 0; two_j <= 20; ++two_j) {
    const HalfInteger spin(two_j);
    for (int n = first_index(spin); n <= last_index(spin); ++n) EXPECT_EQ(dual_function(spin, n), dual_function_from_generating(spin, n));
  }
}

TEST(CosSineIntegral, Examples) {
  EXPECT_EQ(cos_sine_integral(0, 1), q("1/2"));
  EXPECT_EQ(cos_sine_integral(1, 1), q("-1/4"));
  EXPECT_EQ(cos_sine_integral(3, 1), 0);
  EXPECT_THROW(cos_sine_integral(0, -1), DomainError);
}

TEST(CosSineIntegral, MatchesSymbolicIntegration) {
  for (const auto& e : oracle::kCosSineIntegrals) EXPECT_EQ(cos_sine_integral(e.m, e.p), q(e.value)) << e.m << "," << e.p;
}

TEST(Biorthonormality, Examples) {
  EXPECT_TRUE(verify_biorthonormality(HalfInteger(4)));
  EXPECT_TRUE(verify_biorthonormality(HalfInteger(5)));
  EXPECT_EQ(pairing(dual_function(HalfInteger(4), 1), 2), 1);
  for (int two_j = 2; two_j <= 12; two_j += 2) EXPECT_EQ(pairing(dual_function(HalfInteger(two_j), 1), 0), 0);
}

TEST(Biorthonormality, BothParitiesThroughTwoJ20) {
  for (int two_j = 0; two_j <= 20; ++two_j) {
    EXPECT_TRUE(native_pairing_matrix(HalfInteger(two_j)).is_identity()) << two_j;
    EXPECT_TRUE(interlaced_pairing_matrix(HalfInteger(two_j)).is_identity()) << two_j;
  }
}

TEST(Biorthonormality, OddDualsAnnihilateEvenPowers) {
  for (int two_j = 1; two_j <= 15; two_j += 2) {
    const HalfInteger spin(two_j);
    for (int n = first_index(spin); n <= last_index(spin); ++n)
      for (int p = 0; p <= two_j; p += 2) EXPECT_EQ(pairing(dual_function(spin, n), p), 0);
  }
}

TEST(Biorthonormality, QuadratureAgrees) {
  for (int two_j = 0; two_j <= 10; ++two_j) {
    const HalfInteger spin(two_j);
    for (int a = first_index(spin); a <= last_index(spin); ++a) {
      const auto g = dual_function(spin, a);
      for (int b = first_index(spin); b <= last_index(spin); ++b) {
        const int power = basis_function(spin, b).power;
        EXPECT_NEAR(quadrature_pairing(g, power), pairing(g, power).get_d(), 1e-8) << two_j << " " << a << "," << b;
      }
    }
  }
}

TEST(Extraction, Examples) {
  EXPECT_EQ(extract_coefficient_fourier(HalfInteger(2), 0, 0), 1);
  EXPECT_EQ(extract_coefficient_fourier(HalfInteger(2), 2, 0), 0);
  EXPECT_EQ(extract_coefficient_fourier(HalfInteger(4), 2, 2), q("1/3"));
  EXPECT_THROW(extract_coefficient_fourier(HalfInteger(4), 1, 1), DomainError);
  EXPECT_THROW(extract_coefficient_fourier(HalfInteger(5), 1, 1), DomainError);
}

TEST(Extraction, FourierMatchesClosedForm) {
  for (int two_j = 0; two_j <= 16; two_j += 2) {
    const auto data = build_vandermonde(HalfInteger(two_j));
    for (int k = 0; k <= two_j; k += 2)
      for (int n = 0; n <= two_j / 2; ++n) {
        const BigRational expected = 2 * n >= k ? closed_form_sine_coefficient(k, n) : BigRational(0);
        EXPECT_EQ(extract_coefficient_fourier(data, k, n), expected) << two_j << "," << k << "," << n;
      }
  }
}

// Same projection carried over to the odd system for half-integer spins.
TEST(Extraction, ProjectionMatchesCoefficientsBothParities) {
  for (int two_j = 0; two_j <= 15; ++two_j) {
    const HalfInteger spin(two_j);
    const auto data = build_vandermonde(spin);
    for (int k = two_j % 2; k <= two_j; k += 2) {
      const auto a = coefficient(spin, k);
      for (int n = first_index(spin); n <= last_index(spin); ++n)
        EXPECT_EQ(extract_coefficient_projection(data, k, n), a.coefficient_at(basis_function(spin, n).power))
            << two_j << "," << k << "," << n;
    }
  }
  EXPECT_THROW(extract_coefficient_projection(build_vandermonde(HalfInteger(5)), 0, 1), DomainError);
}
