#pragma once

#include <map>
#include <stdexcept>

#include "hybridasym/log_power.hpp"
#include "hybridasym/numeric_types.hpp"
#include "hybridasym/root_of_unity.hpp"
#include "hybridasym/truncated_series.hpp"

namespace hybridasym {

// Truncated expansion at a root of unity zeta in the scale
//   X^alpha * Lambda^k,  X = 1 - z/zeta,  Lambda = log(1/X),
// with all neglected terms O(X^t) up to powers of Lambda.  A monomial is
// retained when alpha < t, or alpha == t with k >= 1 (such terms dominate
// plain X^t and still carry coefficient information).
class LogPowerSeries {
 public:
  struct Key {
    Rational alpha;
    int log_power;
    bool operator<(const Key& o) const {
      if (alpha != o.alpha) return alpha < o.alpha;
      return log_power < o.log_power;
    }
  };

  LogPowerSeries(RootOfUnity center, Rational error_order)
      : center_(center), t_(std::move(error_order)) {}

  const RootOfUnity& center() const { return center_; }
  const Rational& error_order() const { return t_; }
  const std::map<Key, BigComplex>& monomials() const { return mono_; }
  bool empty() const { return mono_.empty(); }

  bool retained(const Rational& alpha, int k) const {
    return alpha < t_ || (alpha == t_ && k >= 1);
  }

  void add(const Rational& alpha, int k, const BigComplex& c) {
    if (k < 0) throw std::invalid_argument("LogPowerSeries: negative log power");
    if (!retained(alpha, k)) return;
    auto& slot = mono_[{alpha, k}];
    slot += c;
  }

  void prune(const BigFloat& floor) {
    for (auto it = mono_.begin(); it != mono_.end();) {
      if (abs(it->second) <= floor)
        it = mono_.erase(it);
      else
        ++it;
    }
  }

  BigComplex coefficient(const Rational& alpha, int k) const {
    auto it = mono_.find({alpha, k});
    return it == mono_.end() ? BigComplex(BigFloat(0)) : it->second;
  }

  Rational min_alpha() const {
    if (mono_.empty()) return t_;
    return mono_.begin()->first.alpha;
  }

  LogPowerSeries truncated(const Rational& t) const {
    LogPowerSeries r(center_, std::min(t, t_));
    for (const auto& [key, c] : mono_) r.add(key.alpha, key.log_power, c);
    return r;
  }

  // Value at z = (1-x) zeta, i.e. X = x real in (0,1).
  BigComplex value_at(const BigFloat& x) const {
    BigComplex acc(BigFloat(0));
    BigFloat lam = -mp::log(x);
    for (const auto& [key, c] : mono_) {
      BigFloat mag = mp::pow(x, to_bigfloat(key.alpha));
      for (int i = 0; i < key.log_power; ++i) mag *= lam;
      acc += c * mag;
    }
    return acc;
  }

  LogPowerFunction to_monomials() const {
    LogPowerFunction f;
    for (const auto& [key, c] : mono_)
      f.push_back({center_, key.alpha, key.log_power, c});
    return f;
  }

 private:
  RootOfUnity center_;
  Rational t_;
  std::map<Key, BigComplex> mono_;
};

inline LogPowerSeries lps_add(const LogPowerSeries& a, const LogPowerSeries& b) {
  if (a.center() != b.center())
    throw std::domain_error("lps_add: center mismatch");
  LogPowerSeries r(a.center(), std::min(a.error_order(), b.error_order()));
  for (const auto& [key, c] : a.monomials()) r.add(key.alpha, key.log_power, c);
  for (const auto& [key, c] : b.monomials()) r.add(key.alpha, key.log_power, c);
  return r;
}

inline LogPowerSeries lps_scale(const LogPowerSeries& a, const BigComplex& s) {
  LogPowerSeries r(a.center(), a.error_order());
  for (const auto& [key, c] : a.monomials()) r.add(key.alpha, key.log_power, c * s);
  return r;
}

inline LogPowerSeries lps_mul(const LogPowerSeries& a, const LogPowerSeries& b) {
  if (a.center() != b.center())
    throw std::domain_error("lps_mul: center mismatch");
  Rational t = std::min(a.error_order() + b.min_alpha(),
                        b.error_order() + a.min_alpha());
  LogPowerSeries r(a.center(), t);
  for (const auto& [ka, ca] : a.monomials())
    for (const auto& [kb, cb] : b.monomials())
      r.add(ka.alpha + kb.alpha, ka.log_power + kb.log_power, ca * cb);
  return r;
}

// exp of a log-power series: the constant monomial is split off and the
// remaining part must vanish at the center (all alpha > 0); exponentials
// of actual singularities leave the log-power class.
inline LogPowerSeries lps_exp(const LogPowerSeries& a) {
  BigComplex c0 = a.coefficient(Rational(0), 0);
  LogPowerSeries rest(a.center(), a.error_order());
  for (const auto& [key, c] : a.monomials()) {
    if (key.alpha == Rational(0) && key.log_power == 0) continue;
    if (key.alpha <= Rational(0))
      throw std::domain_error(
          "lps_exp: monomial with alpha <= 0 is outside the log-power class");
    rest.add(key.alpha, key.log_power, c);
  }
  BigComplex scale = exp(c0);
  LogPowerSeries acc(a.center(), a.error_order());
  acc.add(Rational(0), 0, BigComplex(BigFloat(1)));
  if (rest.empty()) return lps_scale(acc, scale);

  Rational ratio = a.error_order() / rest.min_alpha();  // powers beyond this
  long j_max = to_long(numerator(ratio) / denominator(ratio)) + 2;  // exceed t
  LogPowerSeries power = acc;  // rest^0
  LogPowerSeries sum = acc;
  Rational fact(1);
  for (long j = 1; j <= j_max; ++j) {
    power = lps_mul(power, rest);
    // keep the error order of the full request; power's own error order
    // shrinks as alpha grows but stays >= t for retained terms
    fact *= j;
    LogPowerSeries term(a.center(), a.error_order());
    for (const auto& [key, c] : power.monomials())
      term.add(key.alpha, key.log_power, c * to_bigfloat(Rational(1) / fact));
    sum = lps_add(sum, term);
    if (power.empty()) break;
  }
  return lps_scale(sum, scale);
}

// Analytic Taylor jet sum_{i} jet[i] X^i as a log-power series.
inline LogPowerSeries lps_from_jet(const RootOfUnity& center,
                                   const TruncatedSeries<BigComplex>& jet,
                                   const Rational& t) {
  LogPowerSeries r(center, t);
  for (std::size_t i = 0; i <= jet.order(); ++i)
    r.add(Rational(long(i)), 0, jet[i]);
  return r;
}

}  // namespace hybridasym
