#pragma once

#include <mpfr.h>

#include "ratarc/rational.hpp"

namespace ratarc {

/// Owning MPFR value with a fixed precision.
class MpFloat {
 public:
  explicit MpFloat(mpfr_prec_t bits);
  MpFloat(const BigRational& q, mpfr_prec_t bits);
  MpFloat(const MpFloat& other);
  MpFloat(MpFloat&& other) noexcept;
  MpFloat& operator=(const MpFloat& other);
  MpFloat& operator=(MpFloat&& other) noexcept;
  ~MpFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  /// Exact rational value of the binary float.
  BigRational to_rational() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
  bool owns_ = true;
};

mpfr_prec_t bits_for_digits(int decimal_digits);

MpFloat mp_exp(const BigRational& x, mpfr_prec_t bits);

/// floor(e^T) for rational T. e^T is transcendental for T != 0, so a
/// 256-bit evaluation never straddles an integer for the magnitudes used here.
BigInt floor_exp(const BigRational& T);

}  // namespace ratarc
