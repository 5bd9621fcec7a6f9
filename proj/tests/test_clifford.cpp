#include <doctest.h>

#include <vector>

#include "bruhat/clifford.hpp"
#include "bruhat/errors.hpp"

using namespace bruhat;

namespace {

// e_A e_B by concatenating index lists, bubble-sorting with a sign flip per
// swap and cancelling equal neighbours with e_i^2 = -1.
std::pair<int, Blade> oracle_product(Blade a, Blade b) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (a >> i & 1u) idx.push_back(i);
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1u) idx.push_back(i);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
      if (idx[k] > idx[k + 1]) {
        std::swap(idx[k], idx[k + 1]);
        sign = -sign;
        changed = true;
      } else if (idx[k] == idx[k + 1]) {
        idx.erase(idx.begin() + static_cast<long>(k), idx.begin() + static_cast<long>(k) + 2);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  Blade out = 0;
  for (int i : idx) out |= Blade{1} << i;
  return {sign, out};
}

}  // namespace

TEST_CASE("blade_sign matches the sorting oracle") {
  for (Blade a = 0; a < 32; ++a) {
    for (Blade b = 0; b < 32; ++b) {
      const auto [sign, blade] = oracle_product(a, b);
      CHECK(blade == (a ^ b));
      CHECK(blade_sign(a, b) == sign);
    }
  }
}

TEST_CASE("generators") {
  for (int n = 1; n <= 4; ++n) {
    const CliffordElement one = CliffordElement::scalar(n, ScaledDyadic(1));
    for (int i = 1; i <= n; ++i) {
      const CliffordElement acute = generator_acute(i, n, 1);
      const CliffordElement grave = generator_acute(i, n, -1);
      CHECK(acute * acute == generator_ahat(i, n));
      CHECK(acute * grave == one);
      CHECK(acute * acute * acute * acute == -one);
      CHECK(acute.is_even());
      CHECK(reversal(acute) == grave);
    }
  }
}

TEST_CASE("times_acute agrees with the general product") {
  const int n = 3;
  CliffordElement z = generator_acute(1, n, 1) * generator_acute(3, n, -1) * generator_acute(2, n, 1);
  for (int i = 1; i <= n; ++i) {
    for (int s : {1, -1}) CHECK(z.times_acute(i, s) == z * generator_acute(i, n, s));
  }
}

TEST_CASE("projection of alpha_i is the rotation in the plane (i, i+1)") {
  // acute_i = cos(pi/4) + sin(pi/4) ahat_i maps to the rotation by pi/2.
  const auto m = pi_matrix(generator_acute(2, 3, 1));
  CHECK(m(1, 1).is_zero());
  CHECK(m(1, 2) == ScaledDyadic(-1));
  CHECK(m(2, 1) == ScaledDyadic(1));
  CHECK(m(0, 0) == ScaledDyadic(1));
  CHECK(m(3, 3) == ScaledDyadic(1));
  // ahat_i maps to diag with -1 at i and i+1.
  const auto d = pi_matrix(generator_ahat(1, 2));
  CHECK(d(0, 0) == ScaledDyadic(-1));
  CHECK(d(1, 1) == ScaledDyadic(-1));
  CHECK(d(2, 2) == ScaledDyadic(1));
  CHECK_THROWS_AS(pi_matrix(CliffordElement::scalar(2, ScaledDyadic(2))), NotInGroup);
}

TEST_CASE("sign conjugation") {
  const int n = 3;
  const CliffordElement a1 = generator_ahat(1, n);
  // Conjugating by E = (-1,+1,+1) flips e_2.., so ahat_1 = e_1 e_2 changes sign, ahat_2 does not.
  CHECK(sign_conjugate(SignVector({-1, 1, 1}), a1) == -a1);
  CHECK(sign_conjugate(SignVector({-1, 1, 1}), generator_ahat(2, n)) == generator_ahat(2, n));
  CHECK(sign_conjugate(SignVector({1, 1, 1}), a1) == a1);
  CHECK_THROWS_AS(sign_conjugate(SignVector({1, 1}), a1), RankMismatch);
  // The action is a homomorphism.
  const CliffordElement x = generator_acute(1, n, 1) * generator_acute(2, n, 1);
  const CliffordElement y = generator_acute(3, n, -1);
  const SignVector e({1, -1, -1});
  CHECK(sign_conjugate(e, x * y) == sign_conjugate(e, x) * sign_conjugate(e, y));
}

TEST_CASE("ahat expansion and rendering") {
  const int n = 2;
  const CliffordElement a12 = generator_ahat(1, n) * generator_ahat(2, n);
  const auto terms = ahat_expansion(a12);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].subset == 3u);
  CHECK(terms[0].coeff == ScaledDyadic(1));
  CHECK(to_ahat_string(a12) == "â₁â₂");
  CHECK(to_ahat_string(generator_acute(1, n, -1)) == "(1−â₁)/√2");
  CHECK(to_ahat_string(generator_acute(1, n, -1), Notation::ascii) == "(1-a^1)/sqrt(2)");
  CHECK(to_ahat_string(-generator_ahat(1, n) * ScaledDyadic::sqrt2_power(-1)) == "−â₁/√2");
  CHECK(to_ahat_string(CliffordElement(n)) == "0");
  CHECK_THROWS(ahat_expansion(CliffordElement::blade(n, 1)));
}

TEST_CASE("json round trip") {
  const CliffordElement z = generator_acute(1, 3, 1) * generator_acute(2, 3, -1) * generator_acute(3, 3, 1);
  CHECK(clifford_from_json(clifford_to_json(z), 3) == z);
}
