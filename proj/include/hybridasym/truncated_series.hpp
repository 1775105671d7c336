#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hybridasym/numeric_types.hpp"

namespace hybridasym {

// Power series mod z^{N+1}.  Coefficients are exact when T is Rational or
// Integer; the same arithmetic doubles as jet arithmetic over BigFloat and
// BigComplex.  All operations are pure; results carry the min truncation
// order of their operands.
template <typename T>
class TruncatedSeries {
 public:
  TruncatedSeries() : c_(1, T(0)) {}
  explicit TruncatedSeries(std::size_t order) : c_(order + 1, T(0)) {}
  TruncatedSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, T(0));
  }

  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = T(1);
    return s;
  }
  static TruncatedSeries identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = T(1);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }
  const std::vector<T>& coefficients() const { return c_; }

  TruncatedSeries truncated(std::size_t order) const {
    TruncatedSeries r(order);
    for (std::size_t i = 0; i <= order && i < c_.size(); ++i) r.c_[i] = c_[i];
    return r;
  }

  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

 private:
  std::vector<T> c_;
};

template <typename T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries<T> r(n);
  for (std::size_t i = 0; i <= n; ++i) r[i] = a[i] + b[i];
  return r;
}

template <typename T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries<T> r(n);
  for (std::size_t i = 0; i <= n; ++i) r[i] = a[i] - b[i];
  return r;
}

template <typename T, typename S>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const S& s) {
  TruncatedSeries<T> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] * T(s);
  return r;
}

// Cauchy product, truncated at the min order of the operands.
template <typename T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries<T> r(n);
  for (std::size_t i = 0; i <= n && i <= a.order(); ++i) {
    if (a[i] == T(0)) continue;
    for (std::size_t j = 0; i + j <= n && j <= b.order(); ++j) {
      if (b[j] == T(0)) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

template <typename T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return series_mul(a, b);
}

// exp(a) for a with zero constant term, via (exp a)' = a' exp a.
template <typename T>
TruncatedSeries<T> series_exp(const TruncatedSeries<T>& a) {
  if (!(a[0] == T(0)))
    throw std::domain_error("series_exp: constant term must be 0");
  std::size_t n = a.order();
  TruncatedSeries<T> b(n);
  b[0] = T(1);
  for (std::size_t m = 1; m <= n; ++m) {
    T s(0);
    for (std::size_t j = 1; j <= m; ++j) s += T(long(j)) * a[j] * b[m - j];
    b[m] = s / T(long(m));
  }
  return b;
}

// log(a) for a with constant term 1, via integration of a'/a.
template <typename T>
TruncatedSeries<T> series_log(const TruncatedSeries<T>& a) {
  if (!(a[0] == T(1)))
    throw std::domain_error("series_log: constant term must be 1");
  std::size_t n = a.order();
  TruncatedSeries<T> c(n);
  for (std::size_t m = 1; m <= n; ++m) {
    T s = a[m] * T(long(m));
    for (std::size_t j = 1; j < m; ++j) s -= T(long(j)) * c[j] * a[m - j];
    c[m] = s / T(long(m));
  }
  return c;
}

// a^rho for a with constant term 1 (J.C.P. Miller recurrence).
template <typename T, typename S>
TruncatedSeries<T> series_pow(const TruncatedSeries<T>& a, const S& rho) {
  if (!(a[0] == T(1)))
    throw std::domain_error("series_pow: constant term must be 1");
  std::size_t n = a.order();
  TruncatedSeries<T> b(n);
  b[0] = T(1);
  T r(rho);
  for (std::size_t m = 1; m <= n; ++m) {
    T s(0);
    for (std::size_t j = 1; j <= m; ++j)
      s += ((r + T(1)) * T(long(j)) - T(long(m))) * a[j] * b[m - j];
    b[m] = s / T(long(m));
  }
  return b;
}

// a(z^m) mod z^{N+1}.
template <typename T>
TruncatedSeries<T> substitute_power(const TruncatedSeries<T>& a, std::size_t m) {
  if (m < 1) throw std::invalid_argument("substitute_power: m must be >= 1");
  std::size_t n = a.order();
  TruncatedSeries<T> r(n);
  for (std::size_t i = 0; i * m <= n && i <= a.order(); ++i) r[i * m] = a[i];
  return r;
}

template <typename T>
TruncatedSeries<T> series_derivative(const TruncatedSeries<T>& a) {
  std::size_t n = a.order();
  TruncatedSeries<T> r(n == 0 ? 0 : n - 1);
  for (std::size_t i = 1; i <= n; ++i) r[i - 1] = a[i] * T(long(i));
  return r;
}

// Antiderivative with zero constant term; order grows by one.
template <typename T>
TruncatedSeries<T> series_integrate(const TruncatedSeries<T>& a) {
  std::size_t n = a.order();
  TruncatedSeries<T> r(n + 1);
  for (std::size_t i = 0; i <= n; ++i) r[i + 1] = a[i] / T(long(i) + 1);
  return r;
}

// Horner evaluation into a (possibly different) scalar type.
template <typename U, typename T, typename Conv>
U series_evaluate(const TruncatedSeries<T>& a, const U& x, Conv conv) {
  U acc = conv(a[a.order()]);
  for (std::size_t i = a.order(); i-- > 0;) acc = acc * x + conv(a[i]);
  return acc;
}

// The k-th factor of an infinite product, exact mod z^{N+1}, presented
// sparsely as (exponent, coefficient) pairs.  The generator contract is
// a_k(z) = 1 + O(z^k), which makes prod_{k<=N} a_k exact for the full
// infinite product mod z^{N+1}; the leading 1 is implicit and must not
// be included in the term list.
template <typename T>
using FactorGenerator = std::function<std::vector<std::pair<std::size_t, T>>(
    std::size_t k, std::size_t n_max)>;

template <typename T>
TruncatedSeries<T> product_expand(const FactorGenerator<T>& gen, std::size_t n_max) {
  TruncatedSeries<T> acc = TruncatedSeries<T>::one(n_max);
  for (std::size_t k = 1; k <= n_max; ++k) {
    auto terms = gen(k, n_max);
    for (const auto& [e, v] : terms) {
      if (e < k)
        throw std::domain_error("product_expand: factor violates 1 + O(z^k)");
    }
    // In-place multiply by (1 + sum_e v_e z^e); e >= 1 so descending order
    // only reads not-yet-updated entries.
    for (std::size_t n = n_max + 1; n-- > 0;) {
      T s(0);
      bool any = false;
      for (const auto& [e, v] : terms) {
        if (e <= n) {
          s += v * acc[n - e];
          any = true;
        }
      }
      if (any) acc[n] += s;
    }
  }
  return acc;
}

}  // namespace hybridasym
