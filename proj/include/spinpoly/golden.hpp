#pragma once

// Reference matrices for j = 1/2, 1, 3/2, 2: V^{-1}, the duals T_n
// and the metric G, each as (common denominator, integer numerators).

#include <vector>

#include "spinpoly/rational.hpp"
#include "spinpoly/vandermonde.hpp"

namespace spinpoly::golden {

struct ScaledMatrix {
  long denominator;
  std::vector<std::vector<long>> numerators;

  RationalMatrix to_rational() const {
    RationalMatrix m(numerators.size(), numerators.front().size());
    for (std::size_t r = 0; r < numerators.size(); ++r)
      for (std::size_t c = 0; c < numerators[r].size(); ++c) {
        m(r, c) = BigRational(numerators[r][c], denominator);
        m(r, c).canonicalize();
      }
    return m;
  }
};

struct ScaledDiagonal {
  long denominator;
  std::vector<long> numerators;

  DiagonalVector to_rational() const {
    DiagonalVector d;
    for (long v : numerators) {
      BigRational q(v, denominator);
      q.canonicalize();
      d.push_back(q);
    }
    return d;
  }
};

struct SpinExample {
  int two_j;
  ScaledMatrix inverse;
  std::vector<ScaledDiagonal> duals;
  ScaledMatrix metric;
};

inline const std::vector<SpinExample>& examples() {
  static const std::vector<SpinExample> data{
      {1,
       {2, {{1, 1}, {1, -1}}},
       {{2, {1, 1}}, {2, {1, -1}}},
       {2, {{1, 0}, {0, 1}}}},
      {2,
       {8, {{0, 8, 0}, {2, 0, -2}, {1, -2, 1}}},
       {{1, {0, 1, 0}}, {4, {1, 0, -1}}, {8, {1, -2, 1}}},
       {64, {{5, -2, -3}, {-2, 68, -2}, {-3, -2, 5}}}},
      {3,
       {48, {{-3, 27, 27, -3}, {-1, 27, -27, 1}, {3, -3, -3, 3}, {1, -3, 3, -1}}},
       {{16, {-1, 9, 9, -1}}, {48, {-1, 27, -27, 1}}, {16, {1, -1, -1, 1}}, {48, {1, -3, 3, -1}}},
       {48 * 48, {{20, -120, -60, 16}, {-120, 1476, 0, -60}, {-60, 0, 1476, -120}, {16, -60, -120, 20}}}},
      {4,
       {384,
        {{0, 0, 384, 0, 0},
         {-16, 128, 0, -128, 16},
         {-4, 64, -120, 64, -4},
         {4, -8, 0, 8, -4},
         {1, -4, 6, -4, 1}}},
       {{1, {0, 0, 1, 0, 0}},
        {24, {-1, 8, 0, -8, 1}},
        {96, {-1, 16, -30, 16, -1}},
        {96, {1, -2, 0, 2, -1}},
        {384, {1, -4, 6, -4, 1}}},
       {384 * 384,
        {{289, -2340, 486, 1820, -255},
         {-2340, 20560, -7704, -12336, 1820},
         {486, -7704, 161892, -7704, 486},
         {1820, -12336, -7704, 20560, -2340},
         {-255, 1820, 486, -2340, 289}}}},
  };
  return data;
}

/// Bracket rows of the generating functions (1+x)/(1-x)^{2n+1}, n = 0..6, through x^7.
inline const std::vector<std::vector<long>>& generating_rows() {
  static const std::vector<std::vector<long>> rows{
      {1, 2, 2, 2, 2, 2, 2, 2},
      {1, 4, 9, 16, 25, 36, 49, 64},
      {1, 6, 20, 50, 105, 196, 336, 540},
      {1, 8, 35, 112, 294, 672, 1386, 2640},
      {1, 10, 54, 210, 660, 1782, 4290, 9438},
      {1, 12, 77, 352, 1287, 4004, 11011, 27456},
      {1, 14, 104, 546, 2275, 8008, 24752, 68952},
  };
  return rows;
}

/// Checks V^{-1}, T_n and G of `data` against the reference example for the same spin.
inline bool matches_example(const VandermondeData& data, const SpinExample& ex) {
  if (data.spin.two_j() != ex.two_j) return false;
  if (!(data.inverse.raw() == ex.inverse.to_rational())) return false;
  if (!(data.metric.raw() == ex.metric.to_rational())) return false;
  if (data.duals.size() != ex.duals.size()) return false;
  for (std::size_t n = 0; n < ex.duals.size(); ++n)
    if (data.duals[n] != ex.duals[n].to_rational()) return false;
  return true;
}

}  // namespace spinpoly::golden
