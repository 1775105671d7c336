#pragma once

#include <compare>
#include <string>

#include "hybridasym/number_theory.hpp"
#include "hybridasym/numeric_types.hpp"
#include "hybridasym/special_functions.hpp"

namespace hybridasym {

// e^{2 pi i j / l}, stored in lowest terms so equality is exact.
class RootOfUnity {
 public:
  RootOfUnity() : order_(1), index_(0) {}
  RootOfUnity(long order, long index) {
    if (order < 1) throw std::invalid_argument("RootOfUnity: order must be >= 1");
    index %= order;
    if (index < 0) index += order;
    long g = gcd_long(index, order);
    if (index == 0) {
      order_ = 1;
      index_ = 0;
    } else {
      order_ = order / g;
      index_ = index / g;
    }
  }

  static RootOfUnity one() { return RootOfUnity(); }
  static RootOfUnity minus_one() { return RootOfUnity(2, 1); }
  static RootOfUnity primitive(long order) { return RootOfUnity(order, 1); }

  long order() const { return order_; }
  long index() const { return index_; }
  bool is_one() const { return order_ == 1; }

  RootOfUnity pow(long m) const {
    // (e^{2 pi i j/l})^m; works for negative m as well.
    long r = (index_ % order_) * (m % order_) % order_;
    return RootOfUnity(order_, r);
  }
  RootOfUnity operator*(const RootOfUnity& o) const {
    long l = order_ * o.order_ / gcd_long(order_, o.order_);
    long j = index_ * (l / order_) + o.index_ * (l / o.order_);
    return RootOfUnity(l, j);
  }
  RootOfUnity conjugate() const { return RootOfUnity(order_, order_ - index_); }

  BigComplex value() const {
    if (order_ == 1) return BigComplex(BigFloat(1));
    if (order_ == 2) return BigComplex(BigFloat(-1));
    BigFloat t = 2 * const_pi() * index_ / order_;
    if (order_ == 4) return index_ == 1 ? BigComplex(BigFloat(0), BigFloat(1))
                                        : BigComplex(BigFloat(0), BigFloat(-1));
    return BigComplex(mp::cos(t), mp::sin(t));
  }

  // Value of zeta^{-n}.
  BigComplex value_power(long n) const { return pow(-n).value(); }

  std::string to_string() const {
    return std::to_string(order_) + "/" + std::to_string(index_);
  }

  auto operator<=>(const RootOfUnity& o) const = default;

 private:
  long order_;
  long index_;
};

}  // namespace hybridasym
