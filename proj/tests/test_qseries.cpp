#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "support.hpp"
#include "vvmf/qseries.hpp"

using namespace vvmf;

TEST_CASE("Delta matches a naive product expansion") {
  const FracSeries delta = eta_quotient({{1, 24}}, Frac(21));
  const auto naive = oracle::delta(20);
  for (int n = 1; n <= 20; ++n) {
    CHECK(delta.coeff(Frac(n)) == Frac(static_cast<long long>(naive[n - 1])));
  }
  CHECK(delta.coeff(Frac(0)) == Frac(0));
  CHECK_THROWS_AS(delta.coeff(Frac(21)), PrecisionError);
}

TEST_CASE("E2 matches brute-force divisor sums") {
  const FracSeries e2 = eisenstein2(Frac(30));
  CHECK(e2.coeff(Frac(0)) == Frac(1));
  for (int n = 1; n < 30; ++n) CHECK(e2.coeff(Frac(n)) == Frac(-24 * oracle::sigma1(n)));
}

TEST_CASE("euler product agrees with eta quotient without the q^(1/24) shift") {
  const FracSeries p = euler_product(Frac(40));
  const FracSeries eta = eta_quotient({{1, 1}}, Frac(40) + Frac(1, 24));
  CHECK(agree(series_shift(p, Frac(1, 24)), eta));
  CHECK(p.coeff(Frac(5)) == Frac(1));
  CHECK(p.coeff(Frac(7)) == Frac(1));
  CHECK(p.coeff(Frac(12)) == Frac(-1));
}

TEST_CASE("eta quotients with fractional leading exponents") {
  const FracSeries a = eta_quotient({{2, 14}, {1, -12}, {4, -4}}, Frac(3));
  CHECK(a.lowest() == Frac(0));
  CHECK(a.coeff(Frac(0)) == Frac(1));
  CHECK(a.coeff(Frac(1)) == Frac(12));
  CHECK(a.coeff(Frac(2)) == Frac(76));

  const FracSeries b = eta_quotient({{1, 2}, {2, -4}}, Frac(2));
  CHECK(b.lowest() == Frac(-1, 4));
  CHECK(b.coeff(Frac(-1, 4)) == Frac(1));
  CHECK(b.coeff(Frac(3, 4)) == Frac(-2));
}

TEST_CASE("unary theta") {
  const FracSeries t = unary_theta(Frac(2), Frac(1, 4), Frac(2));
  CHECK(t.coeff(Frac(1, 8)) == Frac(1));
  CHECK(t.coeff(Frac(9, 8)) == Frac(1));
  CHECK(t.size() == 2);
  const FracSeries t0 = unary_theta(Frac(1), Frac(0), Frac(10));
  CHECK(t0.coeff(Frac(0)) == Frac(1));
  CHECK(t0.coeff(Frac(1)) == Frac(2));
  CHECK(t0.coeff(Frac(4)) == Frac(2));
  CHECK(t0.coeff(Frac(9)) == Frac(2));
  CHECK(t0.size() == 4);
}

TEST_CASE("unary theta is even and periodic in the shift") {
  for (const auto& a : {Frac(1, 3), Frac(1, 4), Frac(1, 6), Frac(2, 5)}) {
    const Frac m(3, 2);
    const FracSeries t = unary_theta(m, a, Frac(7));
    CHECK(t == unary_theta(m, -a, Frac(7)));
    CHECK(t == unary_theta(m, a + Frac(1), Frac(7)));
  }
}

TEST_CASE("precision propagation") {
  const FracSeries a(Frac(3), {{Frac(-1), Frac(1)}, {Frac(0), Frac(2)}});
  const FracSeries b(Frac(2), {{Frac(1, 2), Frac(1)}});
  CHECK((a + b).prec() == Frac(2));
  CHECK((a * b).prec() == Frac(1));  // min(3 + 1/2, 2 - 1)
  CHECK(series_shift(a, Frac(1, 3)).prec() == Frac(10, 3));
  CHECK_THROWS_AS(constant_term(FracSeries(Frac(0))), PrecisionError);
  CHECK_THROWS(FracSeries(Frac(1), {{Frac(1), Frac(1)}}));
}

TEST_CASE("inverse and powers") {
  const FracSeries a(Frac(5), {{Frac(-1), Frac(1)}, {Frac(0), Frac(3)}, {Frac(2), Frac(-1, 2)}});
  const FracSeries inv = series_inverse(a);
  CHECK(inv.lowest() == Frac(1));
  const FracSeries one = a * inv;
  CHECK(one.coeff(Frac(0)) == Frac(1));
  for (const auto& [e, c] : one.items()) CHECK((e == Frac(0) || c.is_zero()));
  CHECK(series_pow(a, 3) == a * a * a);
  CHECK(agree(series_pow(a, -2), inv * inv));
}

TEST_CASE("text round trip") {
  const FracSeries a(Frac(7, 3), {{Frac(-2, 3), Frac(5, 7)}, {Frac(1), Frac(-3)}});
  std::stringstream ss;
  write_series(ss, a);
  CHECK(read_series(ss) == a);
}

TEST_CASE("ring laws and the Leibniz rule on 100 random instances") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 12);
    const FracSeries a = testing_support::random_series(rng, den, -2 * den, 3 * den);
    const FracSeries b = testing_support::random_series(rng, den, -den, 4 * den);
    const FracSeries c = testing_support::random_series(rng, 2 * den, 0, 5 * den);
    CAPTURE(i);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(agree((a + b) * c, a * c + b * c));
    CHECK(agree((a * b) * c, a * (b * c)));
    CHECK(a - a == FracSeries(a.prec()));
    CHECK(agree(q_derivative(a * b), q_derivative(a) * b + a * q_derivative(b)));
    CHECK(series_mul(a, b) == series_mul_serial(a, b));
  }
}

TEST_CASE("Serre derivative raises the weight of Delta-type forms consistently") {
  // The Serre derivative of Delta (weight 12) is a weight 14 cusp form, hence 0.
  const FracSeries delta = eta_quotient({{1, 24}}, Frac(15));
  const FracSeries d = serre_derivative(delta, Frac(12));
  CHECK(d.is_zero());
  CHECK(d.prec() == Frac(15));
}
