#include "ratarc/mp.hpp"

#include <cmath>
#include <utility>

namespace ratarc {

MpFloat::MpFloat(mpfr_prec_t bits) { mpfr_init2(value_, bits); mpfr_set_zero(value_, 1); }

MpFloat::MpFloat(const BigRational& q, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

MpFloat::MpFloat(const MpFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpFloat::MpFloat(MpFloat&& other) noexcept {
  value_[0] = other.value_[0];
  other.owns_ = false;
}

MpFloat& MpFloat::operator=(const MpFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

MpFloat& MpFloat::operator=(MpFloat&& other) noexcept {
  if (this != &other) {
    std::swap(value_[0], other.value_[0]);
    std::swap(owns_, other.owns_);
  }
  return *this;
}

MpFloat::~MpFloat() {
  if (owns_) mpfr_clear(value_);
}

BigRational MpFloat::to_rational() const {
  BigInt mantissa;
  const mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  BigRational q(mantissa);
  if (exponent >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return q;
}

mpfr_prec_t bits_for_digits(int decimal_digits) {
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873623)) + 8;
}

MpFloat mp_exp(const BigRational& x, mpfr_prec_t bits) {
  MpFloat arg(x, bits + 16);
  MpFloat out(bits);
  mpfr_exp(out.get(), arg.get(), MPFR_RNDN);
  return out;
}

BigInt floor_exp(const BigRational& T) {
  if (sgn(T) == 0) return BigInt(1);
  MpFloat e = mp_exp(T, 256);
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), e.get(), MPFR_RNDD);
  return out;
}

}  // namespace ratarc
