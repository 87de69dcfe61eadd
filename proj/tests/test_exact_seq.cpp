#include "fibint/exact_seq.hpp"

#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <limits>

using fibint::ExactInt;
using fibint::fib;
using fibint::lucas;

TEST_CASE("fib initial values and negative indices") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(10) == 55);
  CHECK(fib(-4) == -3);
  CHECK(fib(-5) == 5);
  CHECK(fib(100).to_string() == "354224848179261915075");
}

TEST_CASE("lucas initial values and negative indices") {
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(4) == 7);
  CHECK(lucas(-4) == 7);
  CHECK(lucas(-3) == -4);
}

TEST_CASE("recurrences hold across the index range") {
  for (long n = -60; n <= 60; ++n) {
    CHECK(fib(n) == fib(n - 1) + fib(n - 2));
    CHECK(lucas(n) == lucas(n - 1) + lucas(n - 2));
  }
  CHECK(fib(10000) == fib(9999) + fib(9998));
}

TEST_CASE("index limits") {
  CHECK_NOTHROW(fib(fibint::kMaxSeqIndex));
  CHECK_NOTHROW(lucas(-fibint::kMaxSeqIndex));
  CHECK_THROWS_AS(fib(fibint::kMaxSeqIndex + 1), fibint::IndexOutOfRange);
  CHECK_THROWS_AS(lucas(-fibint::kMaxSeqIndex - 1), fibint::IndexOutOfRange);
  CHECK_THROWS_AS(fibint::golden_powers(41), fibint::IndexOutOfRange);
}

TEST_CASE("ExactInt decimal round trip") {
  for (const char* s : {"0", "-1", "123456789012345678901234567890", "-98765432109876543210"})
    CHECK(ExactInt::from_string(s).to_string() == s);
  CHECK(ExactInt::from_string("+17") == 17);
  CHECK_THROWS_AS(ExactInt::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(ExactInt::from_string("12a"), std::invalid_argument);
  CHECK_THROWS_AS(ExactInt::from_string("-"), std::invalid_argument);
}

TEST_CASE("ExactInt to_double is exact below 2^53 and correctly rounded above") {
  CHECK(ExactInt(9007199254740991LL).to_double() == 9007199254740991.0);
  CHECK(ExactInt(-9007199254740991LL).to_double() == -9007199254740991.0);
  // 2^53 + 1 is a tie and rounds to even, 2^53 + 3 rounds up.
  CHECK(ExactInt::from_string("9007199254740993").to_double() == 9007199254740992.0);
  CHECK(ExactInt::from_string("9007199254740995").to_double() == 9007199254740996.0);
  CHECK(fib(1476).to_double() < std::numeric_limits<double>::infinity());
  CHECK(fib(1477).to_double() == std::numeric_limits<double>::infinity());
  CHECK(fib(-1478).to_double() == -std::numeric_limits<double>::infinity());
}

TEST_CASE("fundamental identity L_n^2 - 5 F_n^2 = 4 (-1)^n") {
  for (long n = -50; n <= 50; ++n) {
    const ExactInt sign = (n % 2 == 0) ? 1 : -1;
    CHECK(lucas(n) * lucas(n) - ExactInt(5) * fib(n) * fib(n) == ExactInt(4) * sign);
  }
}

TEST_CASE("F_{2r} - 1, F_{2r+1} - 1 and L_{2r+1} - 1 factorizations") {
  for (long r = 1; r <= 20; ++r) {
    if (r % 2 != 0) {
      CHECK(fib(2 * r) - 1 == fib(r - 1) * lucas(r + 1));
      CHECK(fib(2 * r + 1) - 1 == lucas(r) * fib(r + 1));
      CHECK(lucas(2 * r + 1) - 1 == lucas(r) * lucas(r + 1));
    } else {
      CHECK(fib(2 * r) - 1 == lucas(r - 1) * fib(r + 1));
      CHECK(fib(2 * r + 1) - 1 == fib(r) * lucas(r + 1));
      CHECK(lucas(2 * r + 1) - 1 == ExactInt(5) * fib(r) * fib(r + 1));
    }
  }
}

TEST_CASE("Catalan identity F_{r-1}^2 - F_r F_{r-2} = (-1)^r") {
  for (long r = 2; r <= 30; ++r)
    CHECK(fib(r - 1) * fib(r - 1) - fib(r) * fib(r - 2) == ExactInt(r % 2 == 0 ? 1 : -1));
}

TEST_CASE("golden_powers") {
  const auto g0 = fibint::golden_powers(0);
  CHECK(g0.alpha_pow == 1.0);
  CHECK(g0.beta_pow == 1.0);
  const auto g1 = fibint::golden_powers(1);
  CHECK(g1.alpha_pow == doctest::Approx(1.6180339887498949).epsilon(1e-15));
  CHECK(g1.beta_pow == doctest::Approx(-0.6180339887498949).epsilon(1e-15));
  const auto g2 = fibint::golden_powers(2);
  CHECK(std::fabs(g2.alpha_pow * g2.beta_pow - 1.0) <= 1e-12);

  const double s5 = std::sqrt(5.0);
  for (long r = -40; r <= 40; ++r) {
    const auto g = fibint::golden_powers(r);
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::fabs(g.alpha_pow * g.beta_pow - sign) <= 1e-12);
    const double fr = fibint::fib_d(r), lr = fibint::lucas_d(r);
    if (r >= 0) CHECK(g.alpha_pow == doctest::Approx((lr + fr * s5) / 2.0).epsilon(1e-12));
    if (r <= 0) CHECK(g.beta_pow == doctest::Approx((lr - fr * s5) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("beta^r F_r sqrt5 = 1 - beta^{2r} (r even), -beta^r L_r = 1 - beta^{2r} (r odd)") {
  const double s5 = std::sqrt(5.0);
  for (long r = 1; r <= 20; ++r) {
    const double b = fibint::golden_powers(r).beta_pow;
    const double b2 = fibint::golden_powers(2 * r).beta_pow;
    if (r % 2 == 0) {
      CHECK(std::fabs(b * fibint::fib_d(r) * s5 - (1.0 - b2)) <= 1e-10);
    } else {
      CHECK(std::fabs(-b * fibint::lucas_d(r) - (1.0 - b2)) <= 1e-10);
    }
  }
}
