#pragma once

#include <compare>
#include <string>

#include "spinpoly/errors.hpp"

namespace spinpoly {

/// Spin quantum number j stored losslessly as the integer 2j.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(int two_j) : two_j_(two_j) {
    if (two_j < 0) throw InputError("spin 2j must be non-negative");
  }

  constexpr int two_j() const { return two_j_; }
  constexpr int dimension() const { return two_j_ + 1; }
  constexpr bool is_integer() const { return two_j_ % 2 == 0; }
  constexpr double value() const { return two_j_ / 2.0; }

  /// floor(j), i.e. j for integer spin and j-1/2 for semi-integer.
  constexpr int floor_j() const { return two_j_ / 2; }

  std::string to_string() const {
    return is_integer() ? std::to_string(two_j_ / 2) : std::to_string(two_j_) + "/2";
  }

  friend constexpr auto operator<=>(const HalfInteger&, const HalfInteger&) = default;

 private:
  int two_j_ = 0;
};

}  // namespace spinpoly
