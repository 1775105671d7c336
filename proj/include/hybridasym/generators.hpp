#pragma once

#include <string>

#include "hybridasym/number_theory.hpp"
#include "hybridasym/numeric_types.hpp"
#include "hybridasym/truncated_series.hpp"

namespace hybridasym {

// Factor generators for the infinite products studied here.  Each returns
// the nonconstant terms of the k-th factor, exact mod z^{N+1}.

// prod (1 + z^k / k): distinct cycle lengths.
template <typename T = Rational>
FactorGenerator<T> distinct_cycles_factor() {
  return [](std::size_t k, std::size_t) {
    return std::vector<std::pair<std::size_t, T>>{{k, T(1) / T(long(k))}};
  };
}

// prod (1 + z^k n^alpha) for integer alpha <= -1.
template <typename T = Rational>
FactorGenerator<T> q_alpha_integer_factor(int alpha) {
  return [alpha](std::size_t k, std::size_t) {
    T v = T(1);
    for (int i = 0; i < -alpha; ++i) v = v / T(long(k));
    return std::vector<std::pair<std::size_t, T>>{{k, v}};
  };
}

// prod (1 + z^k k^{-3/2}), float coefficients.
inline FactorGenerator<BigFloat> q_alpha_three_halves_factor() {
  return [](std::size_t k, std::size_t) {
    BigFloat v = 1 / (BigFloat(k) * mp::sqrt(BigFloat(k)));
    return std::vector<std::pair<std::size_t, BigFloat>>{{k, v}};
  };
}

// prod_l exp_{<<l,m>>}(z^l / l): permutations admitting an m-th root.
template <typename T = Rational>
FactorGenerator<T> mth_root_factor(long m) {
  return [m](std::size_t k, std::size_t n_max) {
    long d = limit_gcd(long(k), m);
    std::vector<std::pair<std::size_t, T>> terms;
    T kpow = T(1);
    Rational fact(1);
    long steps = 0;
    for (long i = 1;; ++i) {
      std::size_t e = k * std::size_t(d) * std::size_t(i);
      if (e > n_max) break;
      for (long j = 0; j < d; ++j) {
        ++steps;
        fact *= steps;
        kpow = kpow / T(long(k));
      }
      terms.push_back({e, kpow * T(Rational(1) / fact)});
    }
    return terms;
  };
}

// prod I(z^k / k^2) with I(z) = sum z^n / n!^2: same cycle type.
template <typename T = Rational>
FactorGenerator<T> same_cycle_type_factor() {
  return [](std::size_t k, std::size_t n_max) {
    std::vector<std::pair<std::size_t, T>> terms;
    Rational c(1);
    for (long j = 1; k * std::size_t(j) <= n_max; ++j) {
      c /= Rational(long(k)) * long(k) * long(j) * long(j);
      terms.push_back({k * std::size_t(j), T(c)});
    }
    return terms;
  };
}

// prod (1 + I_n z^n) over F_q: distinct-degree factorization.
template <typename T = Rational>
FactorGenerator<T> ddf_factor(long q) {
  return [q](std::size_t k, std::size_t) {
    return std::vector<std::pair<std::size_t, T>>{
        {k, T(Rational(irreducible_count(q, long(k))))}};
  };
}

// prod (1 + I_n z^n / (1 - z^n)): square-free variant.
template <typename T = Rational>
FactorGenerator<T> ddf_hat_factor(long q) {
  return [q](std::size_t k, std::size_t n_max) {
    T c = T(Rational(irreducible_count(q, long(k))));
    std::vector<std::pair<std::size_t, T>> terms;
    for (std::size_t e = k; e <= n_max; e += k) terms.push_back({e, c});
    return terms;
  };
}

// Rooted plane trees T_n = catalan(n-1); forests F = prod (1-z^n)^{-T_n};
// dissimilar forests E = prod (1 + T_n z^n).
template <typename T = Rational>
FactorGenerator<T> forest_factor() {
  return [](std::size_t k, std::size_t n_max) {
    Integer tn = catalan(long(k) - 1);
    std::vector<std::pair<std::size_t, T>> terms;
    Rational c(1);
    for (long j = 1; k * std::size_t(j) <= n_max; ++j) {
      // binom(T_n + j - 1, j) built incrementally
      c *= Rational(tn + (j - 1)) / Rational(long(j));
      terms.push_back({k * std::size_t(j), T(c)});
    }
    return terms;
  };
}

template <typename T = Rational>
FactorGenerator<T> dissimilar_forest_factor() {
  return [](std::size_t k, std::size_t) {
    return std::vector<std::pair<std::size_t, T>>{
        {k, T(Rational(catalan(long(k) - 1)))}};
  };
}

// T(z) = (1 - sqrt(1-4z))/2: Catalan tree series, exact.
template <typename T = Rational>
TruncatedSeries<T> catalan_tree_series(std::size_t n_max) {
  TruncatedSeries<T> s(n_max);
  for (std::size_t n = 1; n <= n_max; ++n)
    s[n] = T(Rational(catalan(long(n) - 1)));
  return s;
}

// Truncation of Li_nu(z^m) for integer nu: sum_{j>=1, jm<=N} z^{jm}/j^nu.
template <typename T = Rational>
TruncatedSeries<T> polylog_truncation(long nu, std::size_t m, std::size_t n_max) {
  TruncatedSeries<T> s(n_max);
  for (std::size_t j = 1; j * m <= n_max; ++j) {
    Rational c(1);
    if (nu >= 0) {
      c = Rational(1, 1);
      for (long i = 0; i < nu; ++i) c /= Rational(long(j));
    } else {
      for (long i = 0; i < -nu; ++i) c *= Rational(long(j));
    }
    s[j * m] = T(c);
  }
  return s;
}

}  // namespace hybridasym
