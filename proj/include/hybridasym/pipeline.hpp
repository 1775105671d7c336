#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hybridasym/gf_spec.hpp"
#include "hybridasym/log_power.hpp"
#include "hybridasym/log_power_series.hpp"
#include "hybridasym/polylog.hpp"

namespace hybridasym {

namespace detail {

// Jet of (1-X)^{e} to the given order: binomial coefficients.
inline TruncatedSeries<BigComplex> one_minus_x_power_jet(long e, std::size_t ord) {
  TruncatedSeries<BigComplex> jet(ord);
  Rational b(1);
  for (std::size_t i = 0; i <= ord; ++i) {
    if (i > 0) b *= Rational(e - long(i) + 1, long(i));
    jet[i] = BigComplex(to_bigfloat((i % 2 == 0) ? b : -b));
  }
  return jet;
}

}  // namespace detail

// Local expansion of the elementary prefactor at a root of unity.  Each
// factor is expanded deep enough that the product still carries error
// order >= t; the factors themselves are exact, so their error order is
// set by how far their jets are computed.
inline LogPowerSeries prefactor_expansion(const Prefactor& p, const RootOfUnity& zeta,
                                          const Rational& t) {
  LogPowerSeries acc(zeta, Rational(1000000));  // exact constant
  acc.add(Rational(0), 0, BigComplex(to_bigfloat(p.scale)));
  for (const auto& f : p.cyclotomic) {
    std::size_t ord = std::size_t(std::max<long>(
        detail::ceil_rational(t - std::min(f.rho, Rational(0))) + 1, 1));
    LogPowerSeries factor(zeta, f.rho + long(ord) + 1);
    if (zeta.pow(f.d).is_one()) {
      // 1 - z^d = X g(X), g(0) = d: contributes X^rho (d)^rho (g/d)^rho,
      // with g/d built from exact rationals so its constant term is 1.
      TruncatedSeries<BigComplex> gseries(ord);
      Rational b(1);  // binom(d, i+1) with sign, divided by d
      gseries[0] = BigComplex(BigFloat(1));
      for (std::size_t i = 1; i <= ord && long(i) < f.d; ++i) {
        b *= Rational(f.d - long(i), long(i) + 1);
        gseries[i] = BigComplex(to_bigfloat((i % 2 == 0) ? b : -b));
      }
      auto gpow = series_pow(gseries, to_bigfloat(f.rho)) *
                  BigComplex(mp::pow(BigFloat(f.d), to_bigfloat(f.rho)));
      for (std::size_t i = 0; i <= gpow.order(); ++i)
        factor.add(f.rho + long(i), 0, gpow[i]);
    } else {
      // analytic: v(X) = 1 - zeta^d (1-X)^d, v(0) != 0
      factor = LogPowerSeries(zeta, Rational(long(ord) + 1));
      BigComplex zd = zeta.pow(f.d).value();
      auto base = detail::one_minus_x_power_jet(f.d, ord);
      TruncatedSeries<BigComplex> v(ord);
      for (std::size_t i = 0; i <= ord; ++i) {
        v[i] = -(base[i] * zd);
        if (i == 0) v[i] += BigComplex(BigFloat(1));
      }
      BigComplex v0 = v[0];
      auto vnorm = v * inv(v0);
      vnorm[0] = BigComplex(BigFloat(1));  // exact, up to roundoff already there
      auto vpow = series_pow(vnorm, to_bigfloat(f.rho)) *
                  exp(log(v0) * to_bigfloat(f.rho));
      for (std::size_t i = 0; i <= vpow.order(); ++i)
        factor.add(Rational(long(i)), 0, vpow[i]);
    }
    acc = lps_mul(acc, factor);
  }
  for (const auto& f : p.entire) {
    std::size_t ord = std::size_t(std::max<long>(detail::ceil_rational(t) + 1, 1));
    BigComplex czd = BigComplex(to_bigfloat(f.c)) * zeta.pow(f.d).value();
    auto base = detail::one_minus_x_power_jet(f.d, ord);
    TruncatedSeries<BigComplex> expo(ord);
    for (std::size_t i = 1; i <= ord; ++i) expo[i] = base[i] * czd;
    auto jet = series_exp(expo) * exp(czd);
    LogPowerSeries factor(zeta, Rational(long(ord) + 1));
    for (std::size_t i = 0; i <= jet.order(); ++i)
      factor.add(Rational(long(i)), 0, jet[i]);
    acc = lps_mul(acc, factor);
  }
  return acc;
}

// Exact truncation of the prefactor as a rational power series.
inline TruncatedSeries<Rational> prefactor_series(const Prefactor& p,
                                                  std::size_t n_max) {
  auto acc = TruncatedSeries<Rational>::one(n_max) * p.scale;
  for (const auto& f : p.cyclotomic) {
    TruncatedSeries<Rational> base(n_max);
    base[0] = 1;
    if (std::size_t(f.d) <= n_max) base[std::size_t(f.d)] = -1;
    acc = series_mul(acc, series_pow(base, f.rho));
  }
  for (const auto& f : p.entire) {
    TruncatedSeries<Rational> expo(n_max);
    if (std::size_t(f.d) <= n_max) expo[std::size_t(f.d)] = f.c;
    acc = series_mul(acc, series_exp(expo));
  }
  return acc;
}

// Exact truncation of one exponent term (integer nu, trivial twist only).
inline TruncatedSeries<Rational> polylog_term_series(const PolylogTermSpec& t,
                                                     std::size_t n_max) {
  if (!t.twist.is_one() || !t.coef_phase.is_one() || !is_integer(t.nu))
    throw std::domain_error("polylog_term_series: not rational-representable");
  auto li = polylog_truncation<Rational>(to_long(numerator(t.nu)),
                                         std::size_t(t.power), n_max);
  for (long n = 1; n <= t.drop_terms; ++n) {
    std::size_t e = std::size_t(t.power) * std::size_t(n);
    if (e <= n_max) {
      Rational c(1);
      for (long i = 0; i < to_long(numerator(t.nu)); ++i) c /= Rational(n);
      li[e] -= c;
    }
  }
  return li * t.coef;
}

// Validates the registered exp-log decomposition against the exact product;
// returns the first mismatching coefficient index, or nullopt when exact.
inline std::optional<std::size_t> decomposition_mismatch(const GFSpec& g,
                                                         std::size_t n_max) {
  if (!g.rational_validatable)
    throw std::domain_error("decomposition_mismatch: spec is not rational-validatable");
  auto product = product_expand(g.exact_factors, n_max);
  TruncatedSeries<Rational> expo(n_max);
  for (long idx = 1;; ++idx) {
    auto term = g.polylog_terms(idx);
    if (!term) break;
    if (std::size_t(term->power) > n_max) break;
    expo = expo + polylog_term_series(*term, n_max);
  }
  auto reconstructed = series_mul(prefactor_series(g.prefactor, n_max),
                                  series_exp(expo));
  for (std::size_t n = 0; n <= n_max; ++n)
    if (product[n] != reconstructed[n]) return n;
  return std::nullopt;
}

// Builds a GFSpec from a recognized factor family and validates the
// rearrangement exactly to order 64 (the exp-log decomposition step).
inline GFSpec exp_log_decompose(GFSpec g, std::size_t validate_order = 64) {
  if (g.rational_validatable) {
    auto bad = decomposition_mismatch(g, validate_order);
    if (bad)
      throw std::runtime_error("exp_log_decompose: " + g.name +
                               " mismatch at z^" + std::to_string(*bad));
  }
  return g;
}

// asymp(f, zeta, t): the radial expansion of the registered function.
inline LogPowerSeries radial_expansion(const GFSpec& g, const RootOfUnity& zeta,
                                       const Rational& t,
                                       bool run_leading_check = true) {
  // The prefactor can dip to X^{a} (a = global order <= 0); everything is
  // computed at t_work = t + ceil(-a) so the product still carries order t.
  Rational t_work = t + detail::ceil_rational(-g.global_order);
  LogPowerSeries pre = prefactor_expansion(g.prefactor, zeta, t_work);

  // Exponent: sum the local expansions of the polylog terms until the
  // family is exhausted or contributions fall below the noise floor.
  LogPowerSeries expo(zeta, t_work);
  BigFloat cutoff = mp::pow(BigFloat(10), -long(current_digits()) - 4);
  int quiet = 0;
  for (long idx = 1; idx < 100000; ++idx) {
    auto term = g.polylog_terms(idx);
    if (!term) break;
    BigComplex scale = BigComplex(to_bigfloat(term->coef)) *
                       term->coef_phase.value();
    if (abs(scale) < cutoff && std::size_t(idx) > 8) {
      // a vanishing coefficient may sit inside a live family
      ++quiet;
      if (quiet >= 12) break;
      continue;
    }
    auto local = expand_polylog_power(term->nu, term->power, zeta, t_work,
                                      term->twist, term->drop_terms);
    LogPowerSeries contrib = lps_scale(local, scale);
    BigFloat maxc(0);
    for (const auto& [key, c] : contrib.monomials())
      maxc = std::max(maxc, abs(c));
    quiet = (maxc < cutoff) ? quiet + 1 : 0;
    expo = lps_add(expo, contrib);
    if (quiet >= 12 && idx > 8) break;
  }

  LogPowerSeries result = lps_mul(pre, lps_exp(expo)).truncated(t);
  result.prune(mp::pow(BigFloat(10), -long(current_digits()) - 2));

  if (run_leading_check) {
    for (const auto& [root, closed_form] : g.leading_checks) {
      if (root != zeta) continue;
      if (result.empty()) throw std::runtime_error("radial_expansion: empty result");
      BigComplex expected = closed_form();
      BigComplex got = result.monomials().begin()->second;
      BigFloat tolerance =
          mp::pow(BigFloat(10), -long(current_digits() - 12) / 2) * (1 + abs(expected));
      if (abs(got - expected) > tolerance)
        throw std::runtime_error(
            "radial_expansion: " + g.name + " at " + zeta.to_string() +
            " disagrees with the registered closed form");
    }
  }
  return result;
}

// A(z) of the hybrid algorithm: transfer every radial expansion at roots of
// order <= root_order_max and keep terms through n^{-depth}.
inline AsymptoticExpansion assemble(const GFSpec& g, long root_order_max,
                                    long depth) {
  AsymptoticExpansion out;
  out.error_exponent = Rational(depth);
  for (long order = 1; order <= root_order_max; ++order) {
    for (long j = 0; j < order; ++j) {
      if (gcd_long(j == 0 ? order : j, order) != 1) continue;
      RootOfUnity zeta(order, j);
      auto lps = radial_expansion(g, zeta, Rational(depth));
      for (const auto& m : lps.to_monomials()) {
        if (is_integer(m.alpha) && m.alpha >= 0 && m.log_power == 0)
          continue;  // analytic monomials do not reach the coefficients
        long local_depth = depth - detail::ceil_rational(m.alpha) - 1;
        if (local_depth < 0) local_depth = 0;
        auto e = transfer_asymptotic(m, std::size_t(local_depth));
        for (auto& term : e.terms)
          if (term.beta <= Rational(depth)) out.terms.push_back(term);
      }
    }
  }
  out.normalize();
  return out;
}

struct ErrorRow {
  long n;
  BigFloat exact;
  BigFloat approx;
  BigFloat scaled_residual;
};

enum class ResidualScaling { kN3, kN4Log3 };

// Per-n comparison of exact coefficients against an assembled expansion,
// with the figure scalings n^3 (f_n/fhat_n - 1) and n^4 log^-3 n (...).
inline std::vector<ErrorRow> error_profile(const std::vector<BigFloat>& exact,
                                           const AsymptoticExpansion& e,
                                           long n_min, long n_max,
                                           ResidualScaling scaling) {
  std::vector<ErrorRow> rows;
  for (long n = std::max(2L, n_min); n <= n_max && std::size_t(n) < exact.size();
       ++n) {
    BigComplex approx = evaluate_expansion(e, n);
    BigFloat ratio = exact[std::size_t(n)] / approx.re - 1;
    BigFloat scaled;
    if (scaling == ResidualScaling::kN3) {
      scaled = ratio * mp::pow(BigFloat(n), 3);
    } else {
      BigFloat logn = mp::log(BigFloat(n));
      scaled = ratio * mp::pow(BigFloat(n), 4) / (logn * logn * logn);
    }
    rows.push_back({n, exact[std::size_t(n)], approx.re, scaled});
  }
  return rows;
}

}  // namespace hybridasym
