#pragma once

#include <stdexcept>

#include "hybridasym/log_power_series.hpp"
#include "hybridasym/number_theory.hpp"
#include "hybridasym/numeric_types.hpp"
#include "hybridasym/root_of_unity.hpp"
#include "hybridasym/special_functions.hpp"
#include "hybridasym/truncated_series.hpp"

namespace hybridasym {

namespace detail {

inline BigFloat zeta_at(const Rational& s) {
  if (is_integer(s)) return zeta_integer(to_long(numerator(s)));
  return zeta(to_bigfloat(s));
}

inline long ceil_rational(const Rational& t) {
  Integer n = numerator(t), d = denominator(t);
  Integer q = n / d;
  if (q * d < n) q += 1;
  return to_long(q);
}

}  // namespace detail

// Li_nu at a root of unity w != 1, through the exact tau-series
// representations (convergent for |tau| < 2 pi, and |tau| <= pi here).
// Negative integer indices are rational functions of w.
inline BigComplex polylog_at_root_uncached(const Rational& nu, const RootOfUnity& w) {
  if (w.is_one())
    throw std::domain_error("polylog_at_root: w = 1 is the singular point");
  BigComplex wv = w.value();
  if (is_integer(nu)) {
    long m = to_long(numerator(nu));
    if (m <= 0) {
      // Li_0 = w/(1-w); Li_{-i} = sum_j A(i,j) w^{i-j} / (1-w)^{i+1}
      BigComplex one_minus = BigComplex(BigFloat(1)) - wv;
      if (m == 0) return wv / one_minus;
      long i = -m;
      BigComplex num(BigFloat(0));
      for (long j = 0; j < i; ++j)
        num += BigComplex(to_bigfloat(Rational(eulerian(i, j)))) * pow(wv, i - j);
      return num / pow(one_minus, i + 1);
    }
    if (m == 1) return -log(BigComplex(BigFloat(1)) - wv);
    // Zagier-Cohen exact form
    BigComplex tau = -log(wv);
    BigFloat eps = working_epsilon(-6);
    BigComplex acc(BigFloat(0));
    // special term tau^{m-1}(log tau - H_{m-1})/(m-1)!, negligible for large m
    BigFloat special_mag = mp::pow(abs(tau), m - 1) /
                           to_bigfloat(Rational(factorial(m - 1)));
    bool special_negligible = special_mag * (m + 4) < eps;
    long quiet_gate = special_negligible ? 4 : m + 4;
    if (!special_negligible) {
      BigComplex tpow(BigFloat(1));
      for (long i = 0; i < m - 1; ++i) tpow *= tau;
      BigComplex special = tpow *
                           (log(tau) - BigComplex(to_bigfloat(harmonic_number(m - 1)))) *
                           to_bigfloat(Rational(1) / Rational(factorial(m - 1)));
      if (m % 2 == 1) special = -special;
      acc = special;
    }
    // regular sum over j != m-1
    BigComplex tj(BigFloat(1));
    Rational jfact(1);
    int quiet = 0;
    for (long j = 0; j < 5000; ++j) {
      if (j > 0) {
        tj *= tau;
        jfact *= j;
      }
      if (j != m - 1) {
        BigComplex term = tj * (zeta_integer(m - j) / to_bigfloat(jfact));
        if (j % 2 == 1) term = -term;
        acc += term;
        // zeta vanishes at negative even integers; require several quiet
        // terms in a row before declaring convergence
        quiet = (abs(term) < eps * (1 + abs(acc))) ? quiet + 1 : 0;
        if (j > quiet_gate && quiet >= 4) return acc;
      }
    }
    throw std::runtime_error("polylog_at_root: tau series stalled");
  }
  // noninteger index: Gamma(1-nu) tau^{nu-1} + sum_j zeta(nu-j) (-tau)^j / j!
  BigFloat nuf = to_bigfloat(nu);
  BigComplex tau = -log(wv);
  BigFloat eps = working_epsilon(-6);
  BigComplex acc = pow(tau, nuf - 1) * BigComplex(gamma_real(1 - nuf));
  BigComplex tj(BigFloat(1));
  Rational jfact(1);
  int quiet = 0;
  for (long j = 0; j < 5000; ++j) {
    if (j > 0) {
      tj *= tau;
      jfact *= j;
    }
    BigComplex term = tj * (zeta(nuf - j) / to_bigfloat(jfact));
    if (j % 2 == 1) term = -term;
    acc += term;
    quiet = (abs(term) < eps * (1 + abs(acc))) ? quiet + 1 : 0;
    if (j > 4 && quiet >= 4) return acc;
  }
  throw std::runtime_error("polylog_at_root: tau series stalled");
}

inline BigComplex polylog_at_root(const Rational& nu, const RootOfUnity& w) {
  thread_local std::map<std::tuple<Rational, long, long, unsigned>, BigComplex> cache;
  auto key = std::make_tuple(nu, w.order(), w.index(), current_digits());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BigComplex v = polylog_at_root_uncached(nu, w);
  cache.emplace(key, v);
  return v;
}

// Numeric Li_nu(w) on the closed unit disc (w != 1 when nu <= 1):
// direct summation, with an Euler-Maclaurin tail (incomplete-gamma
// integral plus six Bernoulli corrections) once |w| is close to 1.
inline BigComplex polylog_eval(const BigFloat& nu, const BigComplex& w) {
  BigFloat r = abs(w);
  if (r == 0) return BigComplex(BigFloat(0));
  if (r > 1 + working_epsilon(0))
    throw std::domain_error("polylog_eval: |w| must be <= 1");
  BigFloat eps = working_epsilon(-4);

  if (w.im == 0 && w.re == 1) {
    if (nu > 1) return BigComplex(zeta(nu));
    throw std::domain_error("polylog_eval: divergent at w = 1 for nu <= 1");
  }
  if (mp::abs(r - 1) <= mp::pow(BigFloat(10), -long(current_digits()) + 6)) {
    // On the circle: exact tau-series representation.
    BigComplex tau = -log(w);
    if (mpfr_integer_p(nu.backend().data())) {
      long m = nu.convert_to<long>();
      if (m == 1) return -log(BigComplex(BigFloat(1)) - w);
      if (m <= 0) {
        BigComplex one_minus = BigComplex(BigFloat(1)) - w;
        if (m == 0) return w / one_minus;
        long i = -m;
        BigComplex num(BigFloat(0));
        for (long j = 0; j < i; ++j)
          num += BigComplex(to_bigfloat(Rational(eulerian(i, j)))) * pow(w, i - j);
        return num / pow(one_minus, i + 1);
      }
      BigComplex ltau = log(tau);
      BigComplex acc(BigFloat(0));
      BigComplex tpow(BigFloat(1));
      for (long i = 0; i < m - 1; ++i) tpow *= tau;
      BigComplex special = tpow *
                           (ltau - BigComplex(to_bigfloat(harmonic_number(m - 1)))) *
                           to_bigfloat(Rational(1) / Rational(factorial(m - 1)));
      if (m % 2 == 1) special = -special;
      acc = special;
      BigComplex tj(BigFloat(1));
      Rational jfact(1);
      int quiet = 0;
      for (long j = 0; j < 5000; ++j) {
        if (j > 0) { tj *= tau; jfact *= j; }
        if (j == m - 1) continue;
        BigComplex term = tj * (zeta_integer(m - j) / to_bigfloat(jfact));
        if (j % 2 == 1) term = -term;
        acc += term;
        quiet = (abs(term) < eps * (1 + abs(acc))) ? quiet + 1 : 0;
        if (j > m + 4 && quiet >= 4) return acc;
      }
      throw std::runtime_error("polylog_eval: tau series stalled");
    }
    BigComplex acc = pow(tau, nu - 1) * BigComplex(gamma_real(1 - nu));
    BigComplex tj(BigFloat(1));
    Rational jfact(1);
    int quiet = 0;
    for (long j = 0; j < 5000; ++j) {
      if (j > 0) { tj *= tau; jfact *= j; }
      BigComplex term = tj * (zeta(nu - j) / to_bigfloat(jfact));
      if (j % 2 == 1) term = -term;
      acc += term;
      quiet = (abs(term) < eps * (1 + abs(acc))) ? quiet + 1 : 0;
      if (j > 4 && quiet >= 4) return acc;
    }
    throw std::runtime_error("polylog_eval: tau series stalled");
  }

  if (r <= BigFloat(1) / 2) {
    BigComplex acc(BigFloat(0));
    BigComplex wn(BigFloat(1));
    for (long n = 1; n < 200000; ++n) {
      wn *= w;
      BigComplex term = wn * mp::pow(BigFloat(n), -nu);
      acc += term;
      if (abs(term) < eps * (1 + abs(acc))) return acc;
    }
    throw std::runtime_error("polylog_eval: direct sum stalled");
  }

  // 1/2 < |w| < 1: N0 leading terms, then Euler-Maclaurin for the tail.
  BigFloat x = -mp::log(r);
  long N = 10000;
  long by_decay = long(8.0 / x.convert_to<double>()) + 1;
  if (by_decay > 3000000)
    throw std::domain_error(
        "polylog_eval: |w| too close to 1 for the off-circle evaluator");
  if (by_decay > N) N = by_decay;
  BigComplex acc(BigFloat(0));
  BigComplex wn(BigFloat(1));
  for (long n = 1; n <= N; ++n) {
    wn *= w;
    acc += wn * mp::pow(BigFloat(n), -nu);
  }
  // tail sum_{n >= a} f(n), a = N+1, f(t) = exp(t lw) t^{-nu}
  BigComplex lw = log(w);
  BigFloat a(N + 1);
  // integral: (-lw)^{nu-1} Gamma(1-nu, -lw a)
  BigComplex integral =
      pow(-lw, nu - 1) * upper_incomplete_gamma(1 - nu, -lw * a);
  // f-jet at a for the derivative corrections
  const std::size_t jet_order = 12;
  TruncatedSeries<BigComplex> gjet(jet_order);
  gjet[1] = lw - BigComplex(nu / a);
  for (std::size_t i = 2; i <= jet_order; ++i) {
    BigFloat c = nu / (long(i) * mp::pow(a, long(i)));
    gjet[i] = BigComplex((i % 2 == 0) ? c : -c);
  }
  auto fjet = series_exp(gjet);
  BigComplex f_a = exp(lw * a) * mp::pow(a, -nu);
  // sum_{n>=a} f(n) = integral + f(a)/2 - sum_k B_2k/(2k)! f^{(2k-1)}(a)
  BigComplex tail = integral + f_a * BigFloat(0.5);
  Rational fact(1);
  for (long idx = 1; idx <= long(jet_order); ++idx) fact *= idx;
  for (long k = 1; k <= 6; ++k) {
    // f^{(2k-1)}(a) = (2k-1)! fjet[2k-1] * f(a)
    Rational df = Rational(factorial(2 * k - 1));
    BigComplex deriv = fjet[std::size_t(2 * k - 1)] * f_a * to_bigfloat(df);
    tail -= deriv * to_bigfloat(bernoulli(2 * k) / Rational(factorial(2 * k)));
  }
  return acc + tail;
}

// Tail sum_{n > p} n^{-s}: summed directly when s is large (no
// cancellation), via zeta minus the partial sum otherwise.
inline BigFloat zeta_tail(const Rational& s, long p) {
  if (p == 0) return detail::zeta_at(s);
  BigFloat sf = to_bigfloat(s);
  if (s >= Rational(30)) {
    BigFloat eps = working_epsilon(-8);
    BigFloat acc(0);
    for (long n = p + 1; n < p + 100000; ++n) {
      BigFloat term = mp::pow(BigFloat(n), -sf);
      acc += term;
      if (term < eps * (1 + acc)) break;
    }
    return acc;
  }
  BigFloat acc = detail::zeta_at(s);
  for (long n = 1; n <= p; ++n) acc -= mp::pow(BigFloat(n), -sf);
  return acc;
}

// Tail sum_{n > p} w^n / n^{-nu} at a root of unity (drop-aware polylog).
inline BigComplex polylog_tail_at_root(const Rational& nu, const RootOfUnity& w,
                                       long p) {
  if (p == 0) return polylog_at_root(nu, w);
  if (nu >= Rational(30)) {
    BigFloat eps = working_epsilon(-8);
    BigFloat nuf = to_bigfloat(nu);
    BigComplex acc(BigFloat(0));
    for (long n = p + 1; n < p + 100000; ++n) {
      BigComplex term = w.value_power(-n) * mp::pow(BigFloat(n), -nuf);
      acc += term;
      if (abs(term) < eps * (1 + abs(acc))) break;
    }
    return acc;
  }
  BigComplex acc = polylog_at_root(nu, w);
  BigFloat nuf = to_bigfloat(nu);
  for (long n = 1; n <= p; ++n)
    acc -= w.value_power(-n) * mp::pow(BigFloat(n), -nuf);
  return acc;
}

// Local expansion of Li_nu(xi z^l) at z -> zeta.  Singular when xi zeta^l = 1
// (the tau-composition of the polylogarithm's singular expansion), analytic
// otherwise (Taylor jet through the derivative ladder
// d/dz Li_nu(w) = Li_{nu-1}(w) dw/dz / w).
// With drop_terms = p > 0 the expansion is of the tail
// Li_nu(xi z^l) - sum_{n<=p} (xi z^l)^n / n^nu.
inline LogPowerSeries expand_polylog_power(const Rational& nu, long ell,
                                           const RootOfUnity& zeta,
                                           const Rational& t,
                                           const RootOfUnity& twist = RootOfUnity(),
                                           long drop_terms = 0) {
  if (ell < 1) throw std::invalid_argument("expand_polylog_power: l >= 1");
  RootOfUnity w0 = twist * zeta.pow(ell);
  long J = detail::ceil_rational(t) + 1;
  if (J < 1) J = 1;
  LogPowerSeries out(zeta, t);

  if (w0.is_one()) {
    // tau_w = -log w = ell * tau(X) = X * h(X), h(0) = ell; h/ell has an
    // exactly-unit constant term by construction.
    std::size_t ord = std::size_t(J);
    TruncatedSeries<BigComplex> h(ord), h_norm(ord);
    for (std::size_t i = 0; i <= ord; ++i) {
      h[i] = BigComplex(to_bigfloat(Rational(ell, long(i) + 1)));
      h_norm[i] = BigComplex(to_bigfloat(Rational(1, long(i) + 1)));
    }
    // log(tau_w) = -Lambda + log h(X); log h = log(ell) + log(h/ell)
    TruncatedSeries<BigComplex> log_h = series_log(h_norm);
    log_h[0] = BigComplex(mp::log(BigFloat(ell)));

    auto add_jet = [&](const TruncatedSeries<BigComplex>& jet,
                       const Rational& shift, int log_power) {
      for (std::size_t i = 0; i <= jet.order(); ++i)
        out.add(shift + long(i), log_power, jet[i]);
    };

    if (is_integer(nu)) {
      long mm = to_long(numerator(nu));
      if (mm < 1)
        throw std::domain_error("expand_polylog_power: singular case needs nu >= 1");
      // special: (-1)^m/(m-1)! tau_w^{m-1} (log tau_w - H_{m-1}),
      // which for m = 1 is -log tau_w = Lambda - log h.  Skipped entirely
      // when its lowest exponent m-1 already exceeds the truncation order.
      if (Rational(mm - 1) <= t) {
        TruncatedSeries<BigComplex> hpow = TruncatedSeries<BigComplex>::one(ord);
        for (long i = 0; i < mm - 1; ++i) hpow = series_mul(hpow, h);
        BigFloat csign = (mm % 2 == 0) ? BigFloat(1) : BigFloat(-1);
        BigComplex cs = BigComplex(csign / to_bigfloat(Rational(factorial(mm - 1))));
        // k=0 block: cs * X^{m-1} hpow * (log h - H_{m-1})
        TruncatedSeries<BigComplex> analytic = log_h;
        analytic[0] -= BigComplex(to_bigfloat(harmonic_number(mm - 1)));
        add_jet(series_mul(hpow, analytic) * cs, Rational(mm - 1), 0);
        // k=1 block: cs * X^{m-1} hpow * (-Lambda)
        add_jet(hpow * (-cs), Rational(mm - 1), 1);
      }
      // regular: sum_{j != m-1} (-1)^j/j! (zeta(m-j) - H_p^{(m-j)}) tau_w^j;
      // for a dropped head the j = m-1 slot picks up -H_p^{(1)} as well.
      TruncatedSeries<BigComplex> hj = TruncatedSeries<BigComplex>::one(ord);
      Rational jfact(1);
      for (long j = 0; j <= J; ++j) {
        if (j > 0) {
          hj = series_mul(hj, h);
          jfact *= j;
        }
        BigFloat z;
        if (j == mm - 1) {
          if (drop_terms == 0) continue;
          if (Rational(j) > t) continue;
          z = -to_bigfloat(harmonic_number(drop_terms));
        } else {
          z = zeta_tail(Rational(mm - j), drop_terms);
        }
        BigComplex c = BigComplex(z / to_bigfloat(jfact));
        if (j % 2 == 1) c = -c;
        add_jet(hj * c, Rational(j), 0);
      }
      return out;
    }
    // noninteger nu: Gamma(1-nu) tau_w^{nu-1} + sum_j (-1)^j/j! zeta(nu-j) tau_w^j
    BigFloat nuf = to_bigfloat(nu);
    if (nu - 1 <= t) {
      TruncatedSeries<BigComplex> hpow_frac =
          series_pow(h_norm, nuf - 1) *
          BigComplex(mp::pow(BigFloat(ell), nuf - 1));
      add_jet(hpow_frac * BigComplex(gamma_real(1 - nuf)), nu - 1, 0);
    }
    TruncatedSeries<BigComplex> hj = TruncatedSeries<BigComplex>::one(ord);
    Rational jfact(1);
    for (long j = 0; j <= J; ++j) {
      if (j > 0) {
        hj = series_mul(hj, h);
        jfact *= j;
      }
      BigComplex c = BigComplex(zeta_tail(nu - j, drop_terms) / to_bigfloat(jfact));
      if (j % 2 == 1) c = -c;
      add_jet(hj * c, Rational(j), 0);
    }
    return out;
  }

  // Analytic case: Taylor jet of Li_nu(w(X)), w(X) = w0 (1-X)^l.
  // jet(Li_mu)' = -l/(1-X) jet(Li_{mu-1}); build upward from order 0.
  std::size_t ord = std::size_t(J);
  TruncatedSeries<BigComplex> geom(ord);
  for (std::size_t i = 0; i <= ord; ++i) geom[i] = BigComplex(BigFloat(ell));
  TruncatedSeries<BigComplex> jet(0);
  jet[0] = polylog_tail_at_root(nu - long(ord), w0, drop_terms);
  for (std::size_t o = 1; o <= ord; ++o) {
    Rational mu = nu - long(ord) + long(o);
    TruncatedSeries<BigComplex> next(o);
    next[0] = polylog_tail_at_root(mu, w0, drop_terms);
    auto rhs = series_mul(geom.truncated(o - 1), jet);
    for (std::size_t i = 0; i + 1 <= o; ++i)
      next[i + 1] = -rhs[i] / BigFloat(long(i) + 1);
    jet = next;
  }
  for (std::size_t i = 0; i <= jet.order(); ++i)
    out.add(Rational(long(i)), 0, jet[i]);
  return out;
}

// The singular expansion of Li_nu(z) at z = 1 in X = 1-z, Lambda = log 1/X.
inline LogPowerSeries polylog_singular(const Rational& nu, const Rational& t) {
  return expand_polylog_power(nu, 1, RootOfUnity::one(), t);
}

}  // namespace hybridasym
