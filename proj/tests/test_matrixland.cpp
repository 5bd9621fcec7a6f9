#include <doctest.h>

#include <random>
#include <vector>

#include "bruhat/combinatorics.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/matrixland.hpp"

using namespace bruhat;

namespace {

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5), sign(0, 1);
  Rational q(num(rng) * (sign(rng) ? -1 : 1), den(rng));
  q.canonicalize();
  return q;
}

RationalMatrix random_upper(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix u(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) u(r, c) = random_nonzero(rng);
  return u;
}

}  // namespace

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational(" 4 ") == 4);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("lambda generators") {
  const RationalMatrix m = lambda_gen(2, Rational(7, 3), 3);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const Rational want = r == c ? Rational(1) : (r == 2 && c == 1 ? Rational(7, 3) : Rational(0));
      CHECK(m(r, c) == want);
    }
  CHECK_THROWS(lambda_gen(4, 1, 3));
}

TEST_CASE("factor inverts product_from") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : all_permutations(n + 1)) {
      for (const auto& w : all_reduced_words(p)) {
        std::vector<Rational> t;
        for (int k = 0; k < w.length(); ++k) t.push_back(random_nonzero(rng));
        CHECK(factor(w, product_from(w, t)) == t);
      }
    }
  }
}

TEST_CASE("factor rejects matrices outside the image") {
  const ReducedWord w({1, 2, 1}, 2);
  CHECK_THROWS_AS(factor(w, RationalMatrix::identity(3)), NotFactorizable);
  CHECK_THROWS_AS(factor(w, product_from(w, {1, 0, 1})), NotFactorizable);
  RationalMatrix upper = RationalMatrix::identity(3);
  upper(0, 2) = 1;
  CHECK_THROWS_AS(factor(w, upper), NotFactorizable);
}

TEST_CASE("bruhat_perm reads permutation matrices and is two-sided upper invariant") {
  std::mt19937_64 rng(5);
  for (const auto& p : all_permutations(4)) {
    const RationalMatrix m = permutation_matrix(p);
    CHECK(bruhat_perm(m) == p);
    for (int trial = 0; trial < 3; ++trial) CHECK(bruhat_perm(random_upper(rng, 4) * m * random_upper(rng, 4)) == p);
  }
  CHECK_THROWS_AS(bruhat_perm(RationalMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("generic products lie in the cell of the word") {
  const ReducedWord w({2, 3, 1, 2, 4, 3, 2}, 4);
  std::mt19937_64 rng(99);
  int hits = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> t;
    for (int k = 0; k < w.length(); ++k) {
      std::uniform_int_distribution<int> big(1, 1000);
      t.emplace_back(big(rng), big(rng));
      t.back().canonicalize();
    }
    if (bruhat_perm(product_from(w, t)) == perm_from_word(w)) ++hits;
  }
  CHECK(hits == 50);
}

TEST_CASE("zeta rotations and determinants") {
  const RationalMatrix z = zeta(1, Rational(1, 3), 2);
  CHECK(z * z.transpose() == RationalMatrix::identity(3));
  CHECK(determinant(z) == 1);
  CHECK(z(0, 0) == Rational(4, 5));
  CHECK(z(1, 0) == Rational(3, 5));
  RationalMatrix a(2, 2);
  a(0, 1) = 2;
  a(1, 0) = 3;
  CHECK(determinant(a) == -6);
  CHECK(determinant(permutation_matrix(parse_permutation("231"))) == 1);
  CHECK(determinant(permutation_matrix(parse_permutation("213"))) == -1);
}

TEST_CASE("bivariate polynomials") {
  const BivariatePolynomial p({{{2, 1}, 3}, {{0, 0}, -1}, {{0, 1}, 0}});
  CHECK(p.terms().size() == 2);
  CHECK(p.evaluate(2, Rational(1, 3)) == 3);
  CHECK(p.derivative(1).terms() == std::map<std::pair<int, int>, long>{{{1, 1}, 6}});
  CHECK(p.gradient(1, 1) == std::array<Rational, 2>{6, 3});
}

TEST_CASE("transversal polynomials agree with p_values") {
  const auto& tp = transversal_polynomials();
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      Rational x1(a, 2), x2(b, 3);
      x1.canonicalize();
      x2.canonicalize();
      CHECK(p_values(x1, x2) == std::array<Rational, 3>{tp.p1.evaluate(x1, x2), tp.p2.evaluate(x1, x2),
                                                         tp.p3.evaluate(x1, x2)});
    }
}

TEST_CASE("matrix JSON and CSV") {
  RationalMatrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = -3;
  m(1, 1) = Rational(-7, 4);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(matrix_from_json(nlohmann::json::parse(R"([["1/2", -3], [0, "-7/4"]])")) == m);
  CHECK(matrix_from_csv("1/2,-3\n0, -7/4\n\n") == m);
  CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n"), ParseError);
  CHECK_THROWS_AS(matrix_from_csv(""), ParseError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"([[1, 2], [3]])")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"([[1.5]])")), ParseError);
}
