#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hybridasym/number_theory.hpp"
#include "hybridasym/numeric_types.hpp"

namespace hybridasym {

inline unsigned current_digits() { return BigFloat::default_precision(); }

inline BigFloat working_epsilon(int extra = 4) {
  return mp::pow(BigFloat(10), -long(current_digits()) + extra);
}

inline BigFloat const_pi() {
  BigFloat x;
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

inline BigFloat const_euler_gamma() {
  BigFloat x;
  mpfr_const_euler(x.backend().data(), MPFR_RNDN);
  return x;
}

inline BigFloat const_log(long k) { return mp::log(BigFloat(k)); }

// --- Independent routes for the base constants -----------------------------

// atan(1/q) by Taylor series; only sensible for integer q >= 2.
inline BigFloat atan_inverse_integer(long q) {
  BigFloat eps = working_epsilon(-4);
  BigFloat invq2 = BigFloat(1) / (BigFloat(q) * BigFloat(q));
  BigFloat power = BigFloat(1) / BigFloat(q);
  BigFloat acc(0);
  for (long k = 0;; ++k) {
    BigFloat term = power / (2 * k + 1);
    acc += (k % 2 == 0) ? term : -term;
    if (mp::abs(term) < eps) break;
    power *= invq2;
  }
  return acc;
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
inline BigFloat pi_machin() {
  return 16 * atan_inverse_integer(5) - 4 * atan_inverse_integer(239);
}

// Euler-Maclaurin route: gamma = H_n - log n - 1/(2n) + sum B_2j/(2j n^2j).
inline BigFloat euler_gamma_harmonic() {
  const long n = 120;
  BigFloat eps = working_epsilon(-4);
  BigFloat h = to_bigfloat(harmonic_number(n));
  BigFloat acc = h - mp::log(BigFloat(n)) - BigFloat(1) / (2 * n);
  BigFloat n2 = BigFloat(n) * BigFloat(n);
  BigFloat npow = n2;
  for (long j = 1; j < 200; ++j) {
    BigFloat term = to_bigfloat(bernoulli(2 * j)) / (2 * j) / npow;
    acc += term;
    if (mp::abs(term) < eps) break;
    npow *= n2;
  }
  return acc;
}

// --- sin(pi x), cos(pi x) with exact argument reduction --------------------

inline BigFloat sin_pi(const BigFloat& x) {
  BigFloat n = mp::round(x);
  BigFloat f = x - n;
  if (f == 0) return BigFloat(0);
  BigFloat s = mp::sin(const_pi() * f);
  bool odd = mpfr_integer_p(n.backend().data()) &&
             !mpfr_zero_p(n.backend().data()) &&
             (mp::fmod(n, BigFloat(2)) != 0);
  return odd ? -s : s;
}

inline BigFloat cos_pi(const BigFloat& x) {
  BigFloat n = mp::round(x);
  BigFloat f = x - n;
  BigFloat c = mp::cos(const_pi() * f);
  bool odd = !mpfr_zero_p(n.backend().data()) && (mp::fmod(n, BigFloat(2)) != 0);
  return odd ? -c : c;
}

// sin(pi z) for complex z: sin(pi x)cosh(pi y) + i cos(pi x)sinh(pi y).
inline BigComplex sin_pi(const BigComplex& z) {
  if (z.im == 0) return BigComplex(sin_pi(z.re));
  BigFloat py = const_pi() * z.im;
  return BigComplex(sin_pi(z.re) * mp::cosh(py), cos_pi(z.re) * mp::sinh(py));
}

inline bool is_nonpositive_integer(const BigFloat& x) {
  return x <= 0 && mpfr_integer_p(x.backend().data());
}

// --- Gamma ------------------------------------------------------------------

inline BigFloat gamma_real(const BigFloat& x) {
  if (is_nonpositive_integer(x))
    throw std::domain_error("gamma: pole at nonpositive integer");
  return mp::tgamma(x);
}

inline BigFloat log_gamma_real(const BigFloat& x) {
  if (is_nonpositive_integer(x))
    throw std::domain_error("log_gamma: pole at nonpositive integer");
  return mp::lgamma(x);
}

namespace detail {

// Stirling series for log Gamma, valid once |w| is large enough with
// Re(w) > 0.  Number of terms and the shift threshold scale with the
// working precision.
inline BigComplex log_gamma_stirling(const BigComplex& w) {
  BigFloat eps = working_epsilon(-6);
  BigComplex lw = log(w);
  BigComplex acc = (w - BigComplex(BigFloat(1) / 2)) * lw - w +
                   BigComplex(mp::log(2 * const_pi()) / 2);
  BigComplex w2 = inv(w * w);
  BigComplex wpow = inv(w);
  for (long j = 1; j < 4000; ++j) {
    BigFloat b = to_bigfloat(bernoulli(2 * j)) / ((2 * j) * (2 * j - 1));
    BigComplex term = wpow * b;
    acc += term;
    if (abs(term) < eps) break;
    wpow *= w2;
  }
  return acc;
}

inline BigFloat stirling_threshold() {
  return BigFloat(current_digits() + 10) * BigFloat(2302585) / 1000000 /
             (2 * const_pi()) + 4;
}

}  // namespace detail

// Gamma for complex arguments: reflection into Re(z) >= 1/2, then an
// integer shift to the Stirling regime.
inline BigComplex gamma(const BigComplex& z) {
  if (z.im == 0 && is_nonpositive_integer(z.re))
    throw std::domain_error("gamma: pole at nonpositive integer");
  if (z.re < BigFloat(1) / 2) {
    BigComplex s = sin_pi(z);
    return BigComplex(const_pi()) / (s * gamma(BigComplex(BigFloat(1)) - z));
  }
  BigFloat sigma = detail::stirling_threshold();
  BigComplex w = z;
  BigComplex shift_product(BigFloat(1));
  while (abs(w) < sigma) {
    shift_product *= w;
    w += BigComplex(BigFloat(1));
  }
  return exp(detail::log_gamma_stirling(w)) / shift_product;
}

// --- Polygamma ----------------------------------------------------------------

// psi^(m)(z) by upward recurrence into the asymptotic regime.
inline BigComplex polygamma(int m, const BigComplex& z) {
  if (m < 0) throw std::invalid_argument("polygamma: order must be >= 0");
  if (z.im == 0 && is_nonpositive_integer(z.re))
    throw std::domain_error("polygamma: pole at nonpositive integer");
  BigFloat sigma = detail::stirling_threshold() + m;
  long shift = 0;
  if (z.re < sigma) {
    BigFloat delta = sigma - z.re;
    shift = delta.convert_to<long>() + 1;
  }
  BigComplex w = z + BigComplex(BigFloat(shift));
  BigFloat eps = working_epsilon(-6);

  BigComplex acc;
  BigComplex iw = inv(w);
  if (m == 0) {
    acc = log(w) - iw * (BigFloat(1) / 2);
    BigComplex w2 = iw * iw;
    BigComplex wpow = w2;
    for (long j = 1; j < 4000; ++j) {
      BigComplex term = wpow * (to_bigfloat(bernoulli(2 * j)) / (2 * j));
      acc -= term;
      if (abs(term) < eps) break;
      wpow *= w2;
    }
  } else {
    // (-1)^(m-1) [ (m-1)!/w^m + m!/(2w^{m+1}) + sum B_2j (2j+m-1)!/((2j)! w^{2j+m}) ]
    BigFloat fm1 = to_bigfloat(Rational(factorial(m - 1)));
    BigComplex wm = pow(iw, long(m));
    acc = wm * fm1 + wm * iw * (fm1 * m / 2);
    BigComplex w2 = iw * iw;
    BigComplex wpow = wm * w2;
    for (long j = 1; j < 4000; ++j) {
      Rational coef = bernoulli(2 * j) *
                      Rational(factorial(2 * j + m - 1)) / Rational(factorial(2 * j));
      BigComplex term = wpow * to_bigfloat(coef);
      acc += term;
      if (abs(term) < eps) break;
      wpow *= w2;
    }
    if (m % 2 == 0) acc = -acc;
  }
  // Undo the shift: psi^(m)(z) = psi^(m)(z + K) - sum_{j<K} (-1)^m m!/(z+j)^{m+1}.
  if (shift > 0) {
    BigFloat mf = to_bigfloat(Rational(factorial(m)));
    BigComplex corr(BigFloat(0));
    for (long j = 0; j < shift; ++j)
      corr += pow(inv(z + BigComplex(BigFloat(j))), long(m) + 1);
    corr *= mf;
    if (m % 2 == 1) corr = -corr;
    acc -= corr;
  }
  return acc;
}

inline BigFloat polygamma_real(int m, const BigFloat& x) {
  return polygamma(m, BigComplex(x)).re;
}

inline BigFloat digamma(const BigFloat& x) { return polygamma_real(0, x); }

// --- Riemann zeta ---------------------------------------------------------------

namespace detail {

// Borwein's Chebyshev-accelerated alternating series; s real, s >= 1/2.
inline BigFloat zeta_borwein(const BigFloat& s) {
  long P = long(current_digits());
  long n = long((double(P) + 8.0) * 2.302585 / 1.762747) + 4;
  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), computed exactly.
  std::vector<BigFloat> d(std::size_t(n) + 1);
  Rational u(1);  // u_0
  Rational partial = u;
  d[0] = to_bigfloat(partial);
  for (long i = 1; i <= n; ++i) {
    u *= Rational(4) * (n + i - 1) * (n - i + 1);
    u /= Rational(2 * i) * (2 * i - 1);
    partial += u;
    d[std::size_t(i)] = to_bigfloat(partial);
  }
  BigFloat sum(0);
  for (long k = 0; k < n; ++k) {
    BigFloat term = (d[std::size_t(k)] - d[std::size_t(n)]) *
                    mp::pow(BigFloat(k + 1), -s);
    sum += (k % 2 == 0) ? term : -term;
  }
  BigFloat denom = d[std::size_t(n)] * (BigFloat(1) - mp::pow(BigFloat(2), 1 - s));
  return -sum / denom;
}

}  // namespace detail

inline BigFloat zeta(const BigFloat& s) {
  if (s == 1) throw std::domain_error("zeta: pole at s = 1");
  if (s == 0) return BigFloat(-1) / 2;  // sin factor and zeta(1) pole cancel
  if (s >= BigFloat(1) / 2) return detail::zeta_borwein(s);
  // Functional equation; sin_pi vanishes exactly at even nonpositive integers.
  BigFloat sp = sin_pi(s / 2);
  if (sp == 0) return BigFloat(0);
  return mp::pow(BigFloat(2), s) * mp::pow(const_pi(), s - 1) * sp *
         gamma_real(1 - s) * detail::zeta_borwein(1 - s);
}

// zeta at integer arguments, exact at nonpositive ones, cached per precision.
inline BigFloat zeta_integer(long n) {
  if (n == 1) throw std::domain_error("zeta: pole at s = 1");
  thread_local std::map<std::pair<long, unsigned>, BigFloat> cache;
  auto key = std::make_pair(n, current_digits());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BigFloat v;
  if (n == 0) {
    v = BigFloat(-1) / 2;
  } else if (n < 0) {
    // zeta(-k) = -B_{k+1}/(k+1)
    v = -to_bigfloat(bernoulli(-n + 1)) / BigFloat(-n + 1);
  } else {
    v = detail::zeta_borwein(BigFloat(n));
  }
  cache[key] = v;
  return v;
}

// Exact rational values of zeta at nonpositive integers.
inline Rational zeta_nonpositive(long n) {
  if (n > 0) throw std::invalid_argument("zeta_nonpositive: wants n <= 0");
  if (n == 0) return Rational(-1, 2);
  return -bernoulli(-n + 1) / Rational(-n + 1);
}

// --- Hurwitz zeta (real s > 1, a > 0), Euler-Maclaurin ----------------------

inline BigFloat hurwitz_zeta(const BigFloat& s, const BigFloat& a) {
  if (s <= 1) throw std::domain_error("hurwitz_zeta: needs s > 1");
  if (a <= 0) throw std::domain_error("hurwitz_zeta: needs a > 0");
  BigFloat eps = working_epsilon(-6);
  long N = long(current_digits()) / 2 + 12;
  for (int attempt = 0; attempt < 6; ++attempt, N *= 2) {
    BigFloat acc(0);
    for (long k = 0; k < N; ++k) acc += mp::pow(a + k, -s);
    BigFloat w = a + N;
    acc += mp::pow(w, 1 - s) / (s - 1);
    acc += mp::pow(w, -s) / 2;
    // sum_j B_2j/(2j)! (s)_{2j-1} w^{-s-2j+1}
    BigFloat pochhammer = s;  // (s)_1
    BigFloat wpow = mp::pow(w, -s - 1);
    bool converged = false;
    BigFloat prev_term(0);
    for (long j = 1; j < 300; ++j) {
      BigFloat term =
          to_bigfloat(bernoulli(2 * j) / Rational(factorial(2 * j))) *
          pochhammer * wpow;
      acc += term;
      if (mp::abs(term) < eps * (1 + mp::abs(acc))) { converged = true; break; }
      if (j > 2 && mp::abs(term) > mp::abs(prev_term)) break;  // diverging tail
      prev_term = term;
      pochhammer *= (s + 2 * j - 1) * (s + 2 * j);
      wpow /= w * w;
    }
    if (converged) return acc;
  }
  throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin did not converge");
}

// --- Upper incomplete gamma, continued fraction (Re s > 0) -------------------

inline BigComplex upper_incomplete_gamma(const BigFloat& a, const BigComplex& s) {
  if (s.re <= 0)
    throw std::domain_error("upper_incomplete_gamma: needs Re(s) > 0");
  BigFloat eps = working_epsilon(-6);
  BigFloat tiny = mp::pow(BigFloat(10), -long(current_digits()) * 3);
  BigComplex b = s + BigComplex(BigFloat(1) - a);
  BigComplex c = inv(BigComplex(tiny));
  BigComplex d = inv(b);
  BigComplex f = d;
  for (long i = 1; i < 100000; ++i) {
    BigFloat an = -BigFloat(i) * (BigFloat(i) - a);
    b += BigComplex(BigFloat(2));
    d = b + d * an;
    if (abs(d) < tiny) d = BigComplex(tiny);
    c = b + BigComplex(an) / c;
    if (abs(c) < tiny) c = BigComplex(tiny);
    d = inv(d);
    BigComplex delta = c * d;
    f *= delta;
    if (abs(delta - BigComplex(BigFloat(1))) < eps)
      return exp(BigComplex(-s.re, -s.im) + log(s) * a) * f;
  }
  throw std::runtime_error("upper_incomplete_gamma: continued fraction stalled");
}

// Sectioned exponential exp_d(x) = sum_{n>=0} x^{dn}/(dn)!.
inline BigComplex sectioned_exp(long d, const BigComplex& x) {
  if (d < 1) throw std::invalid_argument("sectioned_exp: d must be >= 1");
  BigFloat eps = working_epsilon(-4);
  BigComplex xd = pow(x, d);
  BigComplex term(BigFloat(1));
  BigComplex acc = term;
  for (long n = 1; n < 100000; ++n) {
    term *= xd;
    for (long j = d * (n - 1) + 1; j <= d * n; ++j) term /= BigFloat(j);
    acc += term;
    if (abs(term) < eps * (1 + abs(acc))) break;
  }
  return acc;
}

struct BaseConstants {
  BigFloat pi;
  BigFloat euler_gamma;
  BigFloat log2;
  BigFloat log3;
};

inline BaseConstants base_constants() {
  return BaseConstants{const_pi(), const_euler_gamma(), const_log(2), const_log(3)};
}

}  // namespace hybridasym
