#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <utility>

namespace spinpoly::detail {

// Minimal owning handle for an mpfr_t with a fixed precision.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(value_, bits); mpfr_set_zero(value_, 1); }
  Mpfr(const Mpfr& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& other) noexcept : Mpfr(mpfr_get_prec(other.value_)) { mpfr_swap(value_, other.value_); }
  Mpfr& operator=(const Mpfr& other) {
    if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
    return *this;
  }
  Mpfr& operator=(Mpfr&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

}  // namespace spinpoly::detail
