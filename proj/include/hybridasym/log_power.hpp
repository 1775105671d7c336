#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hybridasym/number_theory.hpp"
#include "hybridasym/numeric_types.hpp"
#include "hybridasym/polynomial.hpp"
#include "hybridasym/root_of_unity.hpp"
#include "hybridasym/special_functions.hpp"
#include "hybridasym/truncated_series.hpp"

namespace hybridasym {

// c * (1 - z/zeta)^alpha * L(z/zeta)^k  with L(z) = log 1/(1-z).
struct LogPowerMonomial {
  RootOfUnity zeta;
  Rational alpha;
  int log_power = 0;
  BigComplex coeff = BigComplex(BigFloat(1));
};

using LogPowerFunction = std::vector<LogPowerMonomial>;

// One term amp * zeta^{-n} * n^{-beta} * (log n)^j of a coefficient expansion.
struct AsymptoticTerm {
  RootOfUnity zeta;
  Rational beta;
  int log_power = 0;
  BigComplex amplitude;
};

struct AsymptoticExpansion {
  std::vector<AsymptoticTerm> terms;
  // Claimed remainder: o(n^{-error_exponent}).
  Rational error_exponent = 0;

  void sort_terms() {
    std::sort(terms.begin(), terms.end(), [](const AsymptoticTerm& a,
                                             const AsymptoticTerm& b) {
      if (a.beta != b.beta) return a.beta < b.beta;
      if (a.zeta != b.zeta) return a.zeta < b.zeta;
      return a.log_power > b.log_power;
    });
  }

  // Merge equal (zeta, beta, j) keys and drop relatively negligible terms.
  void normalize() {
    std::map<std::tuple<Rational, RootOfUnity, int>, BigComplex> acc;
    BigFloat maxamp(0);
    for (const auto& t : terms) {
      acc[{t.beta, t.zeta, t.log_power}] += t.amplitude;
    }
    terms.clear();
    for (const auto& [k, v] : acc) maxamp = std::max(maxamp, abs(v));
    BigFloat floor = maxamp * mp::pow(BigFloat(10), -long(current_digits()) + 8);
    for (const auto& [k, v] : acc) {
      if (abs(v) <= floor) continue;
      terms.push_back({std::get<1>(k), std::get<0>(k), std::get<2>(k), v});
    }
    sort_terms();
  }
};

inline BigComplex evaluate_expansion(const AsymptoticExpansion& e, long n) {
  if (n < 2) throw std::invalid_argument("evaluate_expansion: needs n >= 2");
  BigComplex acc(BigFloat(0));
  BigFloat logn = mp::log(BigFloat(n));
  for (const auto& t : e.terms) {
    BigFloat mag = mp::pow(BigFloat(n), -to_bigfloat(t.beta));
    for (int j = 0; j < t.log_power; ++j) mag *= logn;
    acc += t.amplitude * t.zeta.value_power(n) * mag;
  }
  return acc;
}

namespace detail {

// Coefficients e_t(alpha) of Gamma(n - alpha)/Gamma(n + 1) ~
// n^{-alpha-1} sum_t e_t(alpha) n^{-t}, derived symbolically from the
// Stirling series in the ring Q[alpha][[1/n]].
inline const std::vector<AlphaPolynomial>& gamma_ratio_polynomials(std::size_t depth) {
  thread_local std::vector<AlphaPolynomial> cache;
  if (cache.size() >= depth + 1) return cache;

  using P = AlphaPolynomial;
  using PSeries = TruncatedSeries<P>;
  std::size_t K = depth + 2;

  auto psi_series = [&](const P& p) {
    // (1/u) log(1+pu) - p + (p - 1/2) log(1+pu)
    //   + sum_j B_2j/(2j(2j-1)) u^{2j-1} (1+pu)^{1-2j},  all mod u^{K+1}
    PSeries log1p(K + 1);  // log(1+pu) to order K+1
    P ppow = p;
    for (std::size_t i = 1; i <= K + 1; ++i) {
      P term = ppow / P(Rational(long(i)));
      log1p[i] = (i % 2 == 1) ? term : P(0) - term;
      ppow = ppow * p;
    }
    PSeries acc(K);
    for (std::size_t i = 1; i <= K + 1; ++i)
      if (i - 1 <= K) acc[i - 1] += log1p[i];            // (1/u) log(1+pu)
    acc[0] -= p;                                          // - p
    P shift = p - P(Rational(1, 2));
    for (std::size_t i = 1; i <= K; ++i) acc[i] += shift * log1p[i];
    for (std::size_t j = 1; 2 * j - 1 <= K; ++j) {
      Rational b = bernoulli(2 * long(j)) /
                   (Rational(2 * long(j)) * Rational(2 * long(j) - 1));
      // (1+pu)^{1-2j} expanded directly
      P binpow(Rational(1));
      long e = 1 - 2 * long(j);
      P ppow2(Rational(1));
      for (std::size_t i = 0; 2 * j - 1 + i <= K; ++i) {
        Rational bc = binomial_rational(Rational(e), long(i));
        acc[2 * j - 1 + i] += P(b * bc) * ppow2;
        ppow2 = ppow2 * p;
      }
      (void)binpow;
    }
    return acc;
  };

  P a = P(0) - P::variable();  // a = -alpha
  PSeries E = psi_series(a) - psi_series(P(Rational(1)));
  PSeries e_series = series_exp(E);
  cache.clear();
  for (std::size_t t = 0; t <= depth; ++t) cache.push_back(e_series[t]);
  return cache;
}

// Taylor jet of 1/Gamma(-alpha - eps) around eps = 0, to the given order.
inline TruncatedSeries<BigComplex> inv_gamma_jet(const Rational& alpha,
                                                 std::size_t order) {
  using CSeries = TruncatedSeries<BigComplex>;
  BigFloat af = to_bigfloat(alpha);
  if (alpha < 0) {
    // 1/Gamma(v - eps) with v = -alpha > 0:
    //   (1/Gamma(v)) exp(-sum_{i>=1} (-1)^i psi^{(i-1)}(v) eps^i / i!)
    BigFloat v = -af;
    // jet(log Gamma(v - eps)) = log Gamma(v) + sum (-1)^i psi^{(i-1)}(v) eps^i/i!,
    // so 1/Gamma(v-eps) = (1/Gamma(v)) exp(sum (-1)^{i+1} psi^{(i-1)}(v) eps^i/i!).
    CSeries expo(order);
    Rational fact(1);
    for (std::size_t i = 1; i <= order; ++i) {
      fact *= Rational(long(i));
      BigFloat c = polygamma_real(int(i) - 1, v) / to_bigfloat(fact);
      expo[i] = BigComplex((i % 2 == 0) ? -c : c);
    }
    CSeries j = series_exp(expo);
    BigFloat g = gamma_real(v);
    return j * BigComplex(1 / g);
  }
  // alpha >= 0: 1/Gamma(-alpha-eps) = -(1/pi) sin(pi(alpha+eps)) Gamma(1+alpha+eps),
  // an entire expression; safe at integer alpha where 1/Gamma has a zero.
  BigFloat pi = const_pi();
  BigFloat spa = sin_pi(af), cpa = cos_pi(af);
  CSeries sinjet(order);
  {
    // sin(pi a + pi eps) = sin(pi a) cos(pi eps) + cos(pi a) sin(pi eps)
    BigFloat pipow(1);
    Rational fact(1);
    for (std::size_t i = 0; i <= order; ++i) {
      if (i > 0) {
        fact *= Rational(long(i));
        pipow *= pi;
      }
      BigFloat c = pipow / to_bigfloat(fact);
      int r = int(i % 4);
      // d^i/dx^i sin at 0 cycle: 0,1,0,-1; cos: 1,0,-1,0
      BigFloat sin_part = (r == 1) ? c : (r == 3) ? -c : BigFloat(0);
      BigFloat cos_part = (r == 0) ? c : (r == 2) ? -c : BigFloat(0);
      sinjet[i] = BigComplex(spa * cos_part + cpa * sin_part);
    }
  }
  CSeries gammajet(order);
  {
    BigFloat v = 1 + af;
    CSeries expo(order);
    Rational fact(1);
    for (std::size_t i = 1; i <= order; ++i) {
      fact *= Rational(long(i));
      expo[i] = BigComplex(polygamma_real(int(i) - 1, v) / to_bigfloat(fact));
    }
    gammajet = series_exp(expo) * BigComplex(gamma_real(v));
  }
  return sinjet * gammajet * BigComplex(BigFloat(-1) / pi);
}

// Exact coefficients of L(z)^k, cached; (L^k)_m satisfies
// m (L^k)_m = k sum_{i<m} (L^{k-1})_i.
inline const std::vector<Rational>& log_power_coefficients(int k, std::size_t n_max) {
  thread_local std::map<int, std::vector<Rational>> cache;
  auto& vec = cache[k];
  if (vec.size() >= n_max + 1) return vec;
  if (k == 0) {
    vec.assign(n_max + 1, Rational(0));
    vec[0] = 1;
    return vec;
  }
  const auto& lower = log_power_coefficients(k - 1, n_max);
  vec.assign(n_max + 1, Rational(0));
  Rational prefix(0);
  for (std::size_t m = 1; m <= n_max; ++m) {
    prefix += lower[m - 1];
    vec[m] = Rational(k) * prefix / Rational(long(m));
  }
  return vec;
}

}  // namespace detail

// Exact n-th Taylor coefficient of a log-power monomial.
inline BigComplex transfer_exact(const LogPowerMonomial& m, long n) {
  if (n < 0) throw std::invalid_argument("transfer_exact: n must be >= 0");
  const Rational& alpha = m.alpha;
  BigComplex core;

  bool alpha_nonneg_int = is_integer(alpha) && alpha >= 0;
  if (m.log_power == 0 && alpha_nonneg_int) {
    long a = to_long(numerator(alpha));
    if (n > a) {
      core = BigComplex(BigFloat(0));
    } else {
      Rational v = binomial_rational(alpha, n);
      if (n % 2 == 1) v = -v;
      core = BigComplex(v);
    }
  } else if (alpha_nonneg_int) {
    // (1-z)^a is a polynomial: convolve with exact L^k coefficients.
    long a = to_long(numerator(alpha));
    const auto& lk =
        detail::log_power_coefficients(m.log_power, std::size_t(n));
    Rational s(0);
    for (long i = 0; i <= a && i <= n; ++i) {
      Rational b = Rational(binomial(a, i));
      if (i % 2 == 1) b = -b;
      s += b * lk[std::size_t(n - i)];
    }
    core = BigComplex(s);
  } else {
    // Jet of prod_{j<n} ((j - alpha - eps)/(j+1)); the k-th derivative of
    // the exact coefficient Gamma(n-alpha)/(Gamma(n+1)Gamma(-alpha)).
    std::size_t k = std::size_t(m.log_power);
    TruncatedSeries<BigFloat> jet(k);
    jet[0] = BigFloat(1);
    BigFloat af = to_bigfloat(alpha);
    for (long j = 0; j < n; ++j) {
      // multiply by ((j - alpha) - eps) / (j+1)
      BigFloat base = (BigFloat(j) - af) / (j + 1);
      BigFloat scale = BigFloat(-1) / (j + 1);
      for (std::size_t i = k; i-- > 0;)
        jet[i + 1] = jet[i + 1] * base + jet[i] * scale;
      jet[0] *= base;
    }
    BigFloat v = jet[k];
    for (std::size_t i = 2; i <= k; ++i) v *= long(i);  // k!
    if (k % 2 == 1) v = -v;
    core = BigComplex(v);
  }
  return core * m.coeff * m.zeta.value_power(n);
}

// Asymptotic expansion of the n-th coefficient of a log-power monomial,
// carried to `depth` descending powers of n beyond the leading term.
inline AsymptoticExpansion transfer_asymptotic(const LogPowerMonomial& m,
                                               std::size_t depth) {
  AsymptoticExpansion out;
  out.error_exponent = m.alpha + 1 + long(depth);
  bool alpha_nonneg_int = is_integer(m.alpha) && m.alpha >= 0;
  if (alpha_nonneg_int && m.log_power == 0) return out;  // polynomial: empty

  const auto& e_polys = detail::gamma_ratio_polynomials(depth);
  std::size_t k = std::size_t(m.log_power);
  auto inv_gamma = detail::inv_gamma_jet(m.alpha, k);

  Rational kfact(1);
  for (std::size_t i = 2; i <= k; ++i) kfact *= Rational(long(i));

  for (std::size_t t = 0; t <= depth; ++t) {
    // Taylor jet of e_t(alpha + eps), exact, then times the 1/Gamma jet.
    TruncatedSeries<BigComplex> ejet(k);
    AlphaPolynomial p = e_polys[t];
    Rational fact(1);
    for (std::size_t i = 0; i <= k; ++i) {
      if (i > 0) {
        fact *= Rational(long(i));
        p = p.derivative();
      }
      ejet[i] = BigComplex(p.evaluate(m.alpha) / fact);
    }
    auto jet = ejet * inv_gamma;
    Rational ifact(1);
    for (std::size_t i = 0; i <= k; ++i) {
      if (i > 0) ifact *= Rational(long(i));
      // amplitude of n^{-alpha-1-t} (log n)^i
      Rational sign((k % 2 == 0) ? 1 : -1);
      if (i % 2 == 1) sign = -sign;
      BigComplex amp = jet[k - i] * m.coeff *
                       BigComplex(to_bigfloat(sign * kfact / ifact));
      out.terms.push_back({m.zeta, m.alpha + 1 + long(t), int(i), amp});
    }
  }
  out.normalize();
  return out;
}

inline AsymptoticExpansion transfer_asymptotic(const LogPowerFunction& f,
                                               std::size_t depth) {
  AsymptoticExpansion out;
  bool first = true;
  for (const auto& m : f) {
    auto e = transfer_asymptotic(m, depth);
    out.terms.insert(out.terms.end(), e.terms.begin(), e.terms.end());
    out.error_exponent =
        first ? e.error_exponent : std::min(out.error_exponent, e.error_exponent);
    first = false;
  }
  out.normalize();
  return out;
}

}  // namespace hybridasym
