#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "hybridasym/numeric_types.hpp"

namespace hybridasym {

inline int moebius(long n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be positive");
  int r = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

inline long totient(long n) {
  if (n < 1) throw std::invalid_argument("totient: n must be positive");
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

inline long gcd_long(long a, long b) {
  while (b) { long t = a % b; a = b; b = t; }
  return a < 0 ? -a : a;
}

// lim_{j->inf} gcd(l^j, m): collects from m every prime-power factor whose
// prime divides l.
inline long limit_gcd(long l, long m) {
  long g = 1;
  long rest = m;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      long pk = 1;
      while (rest % p == 0) { rest /= p; pk *= p; }
      if (l % p == 0) g *= pk;
    }
  }
  if (rest > 1 && l % rest == 0) g *= rest;
  return g;
}

inline bool is_prime_power(long q, long* base = nullptr, int* exponent = nullptr) {
  if (q < 2) return false;
  for (long p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      long r = q;
      int e = 0;
      while (r % p == 0) { r /= p; ++e; }
      if (r != 1) return false;
      if (base) *base = p;
      if (exponent) *exponent = e;
      return true;
    }
  }
  if (base) *base = q;
  if (exponent) *exponent = 1;
  return true;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer r(1);
  for (long i = 1; i <= k; ++i) {
    r *= Integer(n - k + i);
    r /= Integer(i);
  }
  return r;
}

inline Integer factorial(long n) {
  Integer r(1);
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Generalized binomial coefficient binom(a, k) for rational a.
inline Rational binomial_rational(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) {
    r *= (a - i);
    r /= (i + 1);
  }
  return r;
}

// B_0, B_1, ..., B_{count-1} with B_1 = -1/2.
inline const std::vector<Rational>& bernoulli_numbers(std::size_t count) {
  thread_local std::vector<Rational> cache;
  if (cache.size() < count) {
    std::size_t start = cache.size();
    cache.resize(count);
    for (std::size_t m = start; m < count; ++m) {
      if (m == 0) { cache[0] = 1; continue; }
      // sum_{j=0}^{m} binom(m+1, j) B_j = 0
      Rational s(0);
      for (std::size_t j = 0; j < m; ++j)
        s += Rational(binomial(long(m) + 1, long(j))) * cache[j];
      cache[m] = -s / Rational(binomial(long(m) + 1, long(m)));
    }
  }
  return cache;
}

inline Rational bernoulli(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  return bernoulli_numbers(std::size_t(n) + 1)[std::size_t(n)];
}

// Normalized tangent numbers: tan z = sum_{m>=0} tau_m z^{2m+1}, exact.
// tau_m = (-1)^m 2^{2m+2} (2^{2m+2}-1) B_{2m+2} / (2m+2)!.
inline std::vector<Rational> tangent_numbers(std::size_t count) {
  if (count == 0) throw std::invalid_argument("tangent_numbers: count must be >= 1");
  const auto& B = bernoulli_numbers(2 * count + 2);
  std::vector<Rational> tau(count);
  for (std::size_t m = 0; m < count; ++m) {
    long k = 2 * long(m) + 2;
    Integer p2 = Integer(1) << unsigned(k);
    Rational v = Rational(p2) * Rational(p2 - 1) * B[std::size_t(k)] /
                 Rational(factorial(k));
    tau[m] = (m % 2 == 0) ? v : -v;
  }
  return tau;
}

inline Rational harmonic_number(long m) {
  Rational h(0);
  for (long i = 1; i <= m; ++i) h += Rational(1, i);
  return h;
}

// Catalan numbers C_0 = 1, C_1 = 1, ...; tree counts T_n = C_{n-1}.
inline Integer catalan(long n) {
  return binomial(2 * n, n) / Integer(n + 1);
}

// Eulerian numbers A(n, k), used for polylogarithms at negative integer index:
// Li_{-n}(w) = (sum_{k=0}^{n-1} A(n,k) w^{n-k}) / (1-w)^{n+1},  n >= 1.
inline Integer eulerian(long n, long k) {
  if (k < 0 || k >= n) return Integer(0);
  thread_local std::map<std::pair<long, long>, Integer> cache;
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  Integer v;
  if (n == 1) {
    v = (k == 0) ? 1 : 0;
  } else {
    v = Integer(k + 1) * eulerian(n - 1, k) + Integer(n - k) * eulerian(n - 1, k - 1);
  }
  cache[{n, k}] = v;
  return v;
}

// Number of monic irreducible polynomials of degree n over F_q (Gauss):
// I_n = (1/n) sum_{d | n} mu(d) q^{n/d}.
inline Integer irreducible_count(long q, long n) {
  Integer s(0);
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Integer t = mp::pow(Integer(q), unsigned(n / d));
    s += mu * t;
  }
  return s / n;
}

}  // namespace hybridasym
