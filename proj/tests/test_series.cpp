#include <catch2/catch_amalgamated.hpp>

#include "hybridasym/generators.hpp"
#include "hybridasym/number_theory.hpp"
#include "hybridasym/truncated_series.hpp"

using namespace hybridasym;

namespace {

using RSeries = TruncatedSeries<Rational>;

RSeries geometric(std::size_t n) {
  RSeries s(n);
  for (std::size_t i = 0; i <= n; ++i) s[i] = 1;
  return s;
}

RSeries bessel_i_series(std::size_t n) {
  // I(z) = sum z^n / n!^2
  RSeries s(n);
  Rational c(1);
  s[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    c /= Rational(long(i)) * long(i);
    s[i] = c;
  }
  return s;
}

}  // namespace

TEST_CASE("series_mul: telescoping and identity") {
  RSeries one_minus_z(5);
  one_minus_z[0] = 1;
  one_minus_z[1] = -1;
  RSeries g = geometric(5);
  RSeries prod = series_mul(one_minus_z, g);
  CHECK(prod == RSeries::one(5));

  RSeries a = bessel_i_series(9);
  CHECK(series_mul(a, RSeries::one(9)) == a);
}

TEST_CASE("series_mul: Catalan tree equation T^2 - T + z = 0") {
  auto t = catalan_tree_series<Rational>(10);
  CHECK(t[1] == 1);
  CHECK(t[2] == 1);
  CHECK(t[3] == 2);
  CHECK(t[4] == 5);
  CHECK(t[5] == 14);
  RSeries residual = series_mul(t, t) - t + RSeries::identity(10);
  CHECK(residual == RSeries::zero(10));
}

TEST_CASE("series_exp: basics and exp/log round trip") {
  CHECK(series_exp(RSeries::zero(8)) == RSeries::one(8));

  RSeries expz = series_exp(RSeries::identity(8));
  Rational fact(1);
  for (std::size_t n = 1; n <= 8; ++n) {
    fact *= Rational(long(n));
    CHECK(expz[n] == 1 / fact);
  }

  auto f = product_expand(distinct_cycles_factor<Rational>(), 20);
  CHECK(series_exp(series_log(f)) == f);

  RSeries with_const = RSeries::one(4);
  CHECK_THROWS_AS(series_exp(with_const), std::domain_error);
}

TEST_CASE("series_log: basics") {
  CHECK(series_log(RSeries::one(6)) == RSeries::zero(6));

  RSeries lg = series_log(geometric(9));
  for (std::size_t n = 1; n <= 9; ++n) CHECK(lg[n] == Rational(1, long(n)));

  // H(z) = log I(z) = z - z^2/4 + ...; h_l * l!^2 is the Carlitz sequence.
  RSeries h = series_log(bessel_i_series(5));
  CHECK(h[1] == 1);
  CHECK(h[2] == Rational(-1, 4));
  std::vector<long> carlitz{1, -1, 4, -33, 456};
  for (std::size_t l = 1; l <= 5; ++l) {
    Rational scaled = h[l] * Rational(factorial(long(l)) * factorial(long(l)));
    CHECK(scaled == Rational(carlitz[l - 1]));
  }

  CHECK_THROWS_AS(series_log(RSeries::zero(4)), std::domain_error);
}

TEST_CASE("product_expand: printed coefficient prefixes") {
  auto f = product_expand(distinct_cycles_factor<Rational>(), 8);
  std::vector<long> dc{1, 1, 1, 5, 14, 74};
  Rational fact(1);
  for (std::size_t n = 0; n < dc.size(); ++n) {
    if (n > 0) fact *= Rational(long(n));
    CHECK(f[n] * fact == Rational(dc[n]));
  }

  auto sq = product_expand(mth_root_factor<Rational>(2), 8);
  std::vector<long> sqv{1, 1, 1, 3, 12, 60, 270};
  fact = 1;
  for (std::size_t n = 0; n < sqv.size(); ++n) {
    if (n > 0) fact *= Rational(long(n));
    CHECK(sq[n] * fact == Rational(sqv[n]));
  }

  auto e = product_expand(dissimilar_forest_factor<Rational>(), 8);
  std::vector<long> ev{1, 1, 1, 3, 7, 21, 63, 203};
  for (std::size_t n = 0; n < ev.size(); ++n) CHECK(e[n] == Rational(ev[n]));

  auto fr = product_expand(forest_factor<Rational>(), 8);
  std::vector<long> fv{1, 1, 2, 4, 10, 26, 77, 235};
  for (std::size_t n = 0; n < fv.size(); ++n) CHECK(fr[n] == Rational(fv[n]));

  auto w = product_expand(same_cycle_type_factor<Rational>(), 6);
  std::vector<long> wv{1, 1, 2, 14, 146, 2602};
  fact = 1;
  for (std::size_t n = 0; n < wv.size(); ++n) {
    if (n > 0) fact *= Rational(long(n)) * long(n);
    CHECK(w[n] * fact == Rational(wv[n]));
  }
}

TEST_CASE("substitute_power") {
  RSeries a(6);
  a[1] = 1;
  a[2] = 1;
  RSeries b = substitute_power(a, 2);
  CHECK(b[2] == 1);
  CHECK(b[4] == 1);
  CHECK(b[1] == 0);

  RSeries c(5);
  c[0] = Rational(7, 3);
  CHECK(substitute_power(c, 3) == c);

  auto li2 = polylog_truncation<Rational>(2, 1, 12);
  CHECK(substitute_power(li2, 2) == polylog_truncation<Rational>(2, 2, 12));
  for (std::size_t j = 1; 2 * j <= 12; ++j)
    CHECK(substitute_power(li2, 2)[2 * j] == Rational(1, long(j) * long(j)));
}

TEST_CASE("exp-log round trip for every named generating function") {
  const std::size_t N = 256;
  std::vector<FactorGenerator<Rational>> gens{
      distinct_cycles_factor<Rational>(),  mth_root_factor<Rational>(2),
      mth_root_factor<Rational>(6),        same_cycle_type_factor<Rational>(),
      ddf_factor<Rational>(2),             ddf_hat_factor<Rational>(2),
      forest_factor<Rational>(),           dissimilar_forest_factor<Rational>(),
      q_alpha_integer_factor<Rational>(-2)};
  for (const auto& g : gens) {
    auto p = product_expand(g, N);
    auto back = series_exp(series_log(p));
    CHECK(back == p);
  }
  for (std::size_t n : {1u, 2u, 17u, 63u}) {
    auto p = product_expand(distinct_cycles_factor<Rational>(), n);
    CHECK(series_exp(series_log(p)) == p);
  }
}

TEST_CASE("exp-log identity: distinct cycles as polylogarithm sum") {
  const std::size_t N = 128;
  auto lhs = product_expand(distinct_cycles_factor<Rational>(), N);
  RSeries expo(N);
  for (std::size_t l = 2; l <= N; ++l) {
    Rational c = Rational((l % 2 == 0) ? -1 : 1, long(l));
    auto li = polylog_truncation<Rational>(long(l), l, N);
    expo = expo + li * c;
  }
  auto rhs = series_mul(geometric(N), series_exp(expo));
  CHECK(lhs == rhs);
}

TEST_CASE("W(z) identity: product of Bessel factors as exp of polylog sum") {
  const std::size_t N = 64;
  auto lhs = product_expand(same_cycle_type_factor<Rational>(), N);
  auto h = series_log(bessel_i_series(N));
  RSeries expo(N);
  for (std::size_t l = 1; l <= N; ++l) {
    if (h[l] == 0) continue;
    expo = expo + polylog_truncation<Rational>(2 * long(l), l, N) * h[l];
  }
  CHECK(lhs == series_exp(expo));
}

TEST_CASE("series_pow against repeated multiplication") {
  auto a = bessel_i_series(12);
  auto sq = series_pow(a, Rational(2));
  CHECK(sq == series_mul(a, a));
  auto half = series_pow(a, Rational(1, 2));
  CHECK(series_mul(half, half) == a);
}
