#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "bruhat/combinatorics.hpp"
#include "bruhat/matrix.hpp"

namespace bruhat {

using Rational = mpq_class;
using RationalMatrix = Matrix<Rational>;

/// "p/q", or "p" when q = 1; throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Identity of size n+1 plus t at the 1-based entry (j+1, j).
RationalMatrix lambda_gen(int j, const Rational& t, int rank);

/// lambda_{i_1}(t_1) ... lambda_{i_l}(t_l).
RationalMatrix product_from(const ReducedWord& word, const std::vector<Rational>& t);

/// The unique t with all entries non-zero and product_from(word, t) = L;
/// throws NotFactorizable.
std::vector<Rational> factor(const ReducedWord& word, const RationalMatrix& L);

/// Permutation of the Bruhat cell U sigma U containing M, read from rank jumps
/// of its lower-left submatrices; throws std::invalid_argument for singular M.
Permutation bruhat_perm(const RationalMatrix& M);

/// Permutation matrix with a 1 at every (i, i^sigma).
RationalMatrix permutation_matrix(const Permutation& p);

/// Rotation by 2 arctan(t) in the coordinate plane (i, i+1).
RationalMatrix zeta(int i, const Rational& t, int rank);

/// zeta_2(-1+x1) zeta_3(-1+x2) zeta_1(-1/2) zeta_2(-1/2) zeta_4(1/2) zeta_3(1/2) zeta_2(1/2).
RationalMatrix transversal_z7(const Rational& x1, const Rational& x2);

Rational determinant(RationalMatrix m);

/// Polynomial in two variables with integer coefficients, keyed by exponents.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::map<std::pair<int, int>, long> terms);

  Rational evaluate(const Rational& x1, const Rational& x2) const;
  BivariatePolynomial derivative(int variable) const;
  std::array<Rational, 2> gradient(const Rational& x1, const Rational& x2) const;
  const std::map<std::pair<int, int>, long>& terms() const { return terms_; }

 private:
  std::map<std::pair<int, int>, long> terms_;
};

struct TransversalPolynomials {
  BivariatePolynomial p1, p2, p3;
};

const TransversalPolynomials& transversal_polynomials();
std::array<Rational, 3> p_values(const Rational& x1, const Rational& x2);

nlohmann::json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);
/// Rows on lines, entries separated by commas; entries as in parse_rational.
RationalMatrix matrix_from_csv(std::string_view text);

}  // namespace bruhat
