#pragma once

#include <stdexcept>
#include <vector>

#include "hybridasym/numeric_types.hpp"

namespace hybridasym {

// Dense univariate polynomial, used mainly as the coefficient ring Q[alpha]
// inside series expansions of Gamma-function ratios.
template <typename T>
class Polynomial {
 public:
  Polynomial() : c_() {}
  Polynomial(T constant) : c_{std::move(constant)} { normalize(); }
  Polynomial(long constant) : c_{T(constant)} { normalize(); }
  Polynomial(int constant) : c_{T(constant)} { normalize(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial variable() { return Polynomial(std::vector<T>{T(0), T(1)}); }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return long(c_.size()) - 1; }
  T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const std::vector<T>& coefficients() const { return c_; }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(long(i));
    return Polynomial(std::move(d));
  }

  template <typename U, typename Conv>
  U evaluate(const U& x, Conv conv) const {
    if (c_.empty()) return U(0);
    U acc = conv(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + conv(c_[i]);
    return acc;
  }

  T evaluate(const T& x) const {
    return evaluate<T>(x, [](const T& v) { return v; });
  }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

template <typename T>
Polynomial<T> operator+(Polynomial<T> a, const Polynomial<T>& b) { return a += b; }
template <typename T>
Polynomial<T> operator-(Polynomial<T> a, const Polynomial<T>& b) { return a -= b; }
template <typename T>
Polynomial<T> operator-(const Polynomial<T>& a) { return Polynomial<T>(T(0)) - a; }

template <typename T>
Polynomial<T> operator*(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial<T>();
  std::vector<T> r(std::size_t(a.degree() + b.degree()) + 1, T(0));
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    for (std::size_t j = 0; j < b.coefficients().size(); ++j)
      r[i + j] += a.coefficients()[i] * b.coefficients()[j];
  return Polynomial<T>(std::move(r));
}

// Division by a constant (degree-0) polynomial; anything else is not a ring
// operation we support.
template <typename T>
Polynomial<T> operator/(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.degree() != 0)
    throw std::domain_error("Polynomial: only division by constants is defined");
  T d = b.coefficient(0);
  std::vector<T> r(a.coefficients());
  for (auto& v : r) v = v / d;
  return Polynomial<T>(std::move(r));
}

using AlphaPolynomial = Polynomial<Rational>;

}  // namespace hybridasym
