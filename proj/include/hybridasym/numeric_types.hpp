#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hybridasym {

namespace mp = boost::multiprecision;

using Integer  = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

// Arbitrary-precision real.  Precision is taken from the thread-local
// default at construction time; see PrecisionContext below.
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline Integer numerator(const Rational& q)   { return Integer(mp::numerator(q)); }
inline Integer denominator(const Rational& q) { return Integer(mp::denominator(q)); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline long to_long(const Integer& n) { return n.convert_to<long>(); }

inline BigFloat to_bigfloat(const Rational& q) {
  return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

// Working precision in decimal digits.  The context travels explicitly
// through every computation; entering a scope pins the thread-local
// default that newly constructed BigFloats pick up.
struct PrecisionContext {
  unsigned digits = 50;

  // Guard digits used internally so that results are good to ~10^(2-P).
  unsigned working_digits() const { return digits + 12; }
  BigFloat epsilon() const {
    return mp::pow(BigFloat(10), -static_cast<int>(digits));
  }
  // Tolerance for cross-route validation (10^(-P/2) per the design envelope).
  BigFloat cross_check_tolerance() const {
    return mp::pow(BigFloat(10), -static_cast<int>(digits / 2));
  }
};

class ScopedPrecision {
 public:
  explicit ScopedPrecision(const PrecisionContext& ctx)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(ctx.working_digits());
  }
  explicit ScopedPrecision(unsigned decimal_digits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(decimal_digits);
  }
  ~ScopedPrecision() { BigFloat::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

// Minimal complex scalar over BigFloat.  std::complex is not usable with
// a multiprecision value type, and mpc is not assumed present.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigFloat r) : re(std::move(r)), im(0) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(int r) : re(r), im(0) {}
  BigComplex(long r) : re(r), im(0) {}
  BigComplex(const Rational& q) : re(to_bigfloat(q)), im(0) {}

  bool is_real(const BigFloat& tol) const { return mp::abs(im) <= tol; }

  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
  BigComplex& operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  BigComplex& operator*=(const BigFloat& s) { re *= s; im *= s; return *this; }
  BigComplex& operator/=(const BigFloat& s) { re /= s; im /= s; return *this; }
};

inline BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
inline BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
inline BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re, -a.im); }
inline BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
inline BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }
inline BigComplex operator*(const BigFloat& s, BigComplex a) { return a *= s; }
inline BigComplex conj(const BigComplex& a) { return BigComplex(a.re, -a.im); }
inline BigFloat norm(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
inline BigFloat abs(const BigComplex& a) { return mp::sqrt(norm(a)); }

inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat d = norm(b);
  if (d == 0) throw std::domain_error("BigComplex: division by zero");
  return BigComplex((a.re * b.re + a.im * b.im) / d,
                    (a.im * b.re - a.re * b.im) / d);
}
inline BigComplex operator/(BigComplex a, const BigFloat& s) { return a /= s; }

inline bool operator==(const BigComplex& a, const BigComplex& b) {
  return a.re == b.re && a.im == b.im;
}

inline BigFloat arg(const BigComplex& a) { return mp::atan2(a.im, a.re); }

inline BigComplex exp(const BigComplex& a) {
  BigFloat m = mp::exp(a.re);
  return BigComplex(m * mp::cos(a.im), m * mp::sin(a.im));
}

// Principal branch.
inline BigComplex log(const BigComplex& a) {
  return BigComplex(mp::log(abs(a)), arg(a));
}

inline BigComplex sqrt(const BigComplex& a) {
  if (a.im == 0 && a.re >= 0) return BigComplex(mp::sqrt(a.re));
  BigFloat m = abs(a);
  BigFloat t = arg(a) / 2;
  m = mp::sqrt(m);
  return BigComplex(m * mp::cos(t), m * mp::sin(t));
}

inline BigComplex pow(const BigComplex& a, const BigFloat& p) {
  if (a.im == 0 && a.re > 0) return BigComplex(mp::pow(a.re, p));
  return exp(log(a) * BigComplex(p));
}

inline BigComplex pow(BigComplex base, long e) {
  if (e < 0) return BigComplex(BigFloat(1)) / pow(base, -e);
  BigComplex r(BigFloat(1));
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline BigComplex inv(const BigComplex& a) { return BigComplex(BigFloat(1)) / a; }

}  // namespace hybridasym
