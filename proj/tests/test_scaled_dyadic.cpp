#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "bruhat/scaled_dyadic.hpp"

using namespace bruhat;

TEST_CASE("canonical monomials") {
  CHECK(ScaledDyadic(0).as_monomial() == std::pair<std::int64_t, int>{0, 0});
  CHECK(ScaledDyadic::from_mantissa(4, 4).as_monomial() == std::pair<std::int64_t, int>{1, 0});
  CHECK(ScaledDyadic::from_mantissa(1, 3).as_monomial() == std::pair<std::int64_t, int>{1, 3});
  CHECK(ScaledDyadic::from_mantissa(6, 2).as_monomial() == std::pair<std::int64_t, int>{3, 0});
  CHECK(ScaledDyadic::sqrt2_power(1).as_monomial() == std::pair<std::int64_t, int>{2, 1});
  CHECK_FALSE((ScaledDyadic(1) + ScaledDyadic::sqrt2_power(1)).as_monomial().has_value());
  CHECK(ScaledDyadic::from_mantissa(1, 3) == ScaledDyadic::from_mantissa(2, 5));
}

TEST_CASE("ring identities") {
  const ScaledDyadic r = ScaledDyadic::sqrt2_power(-1);
  CHECK(r * r == ScaledDyadic::from_mantissa(1, 2));
  CHECK(r * r * ScaledDyadic(2) == ScaledDyadic(1));
  CHECK(ScaledDyadic(1).div_sqrt2() == r);
  CHECK(ScaledDyadic::sqrt2_power(2) == ScaledDyadic(2));
  CHECK(ScaledDyadic::sqrt2_power(-4) == ScaledDyadic::from_mantissa(1, 4));
  CHECK((r + r) == ScaledDyadic::sqrt2_power(1));
  CHECK((ScaledDyadic(3) - ScaledDyadic(3)).is_zero());
  CHECK(ScaledDyadic(7).as_integer() == 7);
  CHECK_FALSE(r.as_integer().has_value());
}

TEST_CASE("exact sign and ordering agree with floating point") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-40, 40), expo(0, 6);
  for (int i = 0; i < 2000; ++i) {
    const ScaledDyadic a = ScaledDyadic::from_parts(small(rng), small(rng), expo(rng));
    const ScaledDyadic b = ScaledDyadic::from_parts(small(rng), small(rng), expo(rng));
    const double da = a.to_double(), db = b.to_double();
    CHECK((a + b).to_double() == doctest::Approx(da + db));
    CHECK((a * b).to_double() == doctest::Approx(da * db));
    CHECK((a - b).to_double() == doctest::Approx(da - db));
    if (std::abs(da - db) > 1e-9) CHECK(((a < b) == (da < db)));
    CHECK(a.sign() == (da > 1e-12 ? 1 : da < -1e-12 ? -1 : 0));
  }
}

TEST_CASE("rendering") {
  CHECK(ScaledDyadic::from_mantissa(1, 3).to_string() == "√2/4");
  CHECK(ScaledDyadic::from_mantissa(-1, 3).to_string(Notation::ascii) == "-sqrt(2)/4");
  CHECK((ScaledDyadic(1) + ScaledDyadic::sqrt2_power(1)).to_string() == "(1+√2)");
  CHECK(ScaledDyadic::from_parts(1, 1, 1).to_string() == "(1+√2)/2");
  CHECK(ScaledDyadic::from_mantissa(-3, 4).to_string() == "−3/4");
  CHECK(ScaledDyadic::from_mantissa(-1, 3).to_exponent_string() == "-1/2^(3/2)");
  CHECK(ScaledDyadic(5).to_exponent_string() == "5");
}

TEST_CASE("overflow is reported") {
  const ScaledDyadic big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}
