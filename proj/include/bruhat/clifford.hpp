#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bruhat/matrix.hpp"
#include "bruhat/scaled_dyadic.hpp"

namespace bruhat {

/// Subset of {1..n+1}; bit (i-1) stands for the vector e_i.
using Blade = std::uint32_t;

/// Sign s with e_A e_B = s * e_{A xor B}, for e_i^2 = -1 and e_i e_j = -e_j e_i.
int blade_sign(Blade a, Blade b);

/// Blade of the monomial ahat_S = prod_{i in S, ascending} ahat_i (bit i-1 of S
/// stands for ahat_i) together with the sign relating the two.
struct AhatBlade {
  Blade blade;
  int sign;
};
AhatBlade ahat_monomial_blade(std::uint32_t subset);

/// Element of the Clifford algebra Cl_{n+1} over ScaledDyadic, stored densely
/// over all 2^{n+1} blades.
class CliffordElement {
 public:
  static constexpr int max_rank = 15;

  CliffordElement() = default;
  explicit CliffordElement(int rank);

  static CliffordElement scalar(int rank, const ScaledDyadic& value);
  static CliffordElement blade(int rank, Blade b, const ScaledDyadic& coeff = ScaledDyadic(1));

  int rank() const { return rank_; }
  std::size_t blade_count() const { return coeffs_.size(); }

  const ScaledDyadic& coeff(Blade b) const { return coeffs_.at(b); }
  void set_coeff(Blade b, const ScaledDyadic& value) { coeffs_.at(b) = value; }

  /// Non-zero terms ordered by blade bitmask.
  std::vector<std::pair<Blade, ScaledDyadic>> terms() const;

  bool is_zero() const;
  bool is_even() const;
  ScaledDyadic norm_squared() const;

  CliffordElement operator-() const;
  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);
  CliffordElement& operator*=(const ScaledDyadic& factor);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const ScaledDyadic& s) { return a *= s; }
  /// Throws RankMismatch.
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);

  /// Right multiplication by acute_i^{sign} = (1 + sign*ahat_i)/sqrt(2).
  CliffordElement times_acute(int i, int sign) const;

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
  /// Lexicographic over blades 0, 1, 2, ... comparing coefficient values.
  friend std::strong_ordering operator<=>(const CliffordElement& a, const CliffordElement& b);

  std::size_t hash() const;

 private:
  int rank_ = 0;
  std::vector<ScaledDyadic> coeffs_;
};

struct CliffordHash {
  std::size_t operator()(const CliffordElement& x) const { return x.hash(); }
};

/// ahat_i = e_i e_{i+1}.
CliffordElement generator_ahat(int i, int rank);
/// alpha_i(sign*pi/2) = (1 + sign*ahat_i)/sqrt(2); sign = +1 gives acute, -1 grave.
CliffordElement generator_acute(int i, int rank, int sign);

CliffordElement reversal(const CliffordElement& x);
ScaledDyadic real_part(const CliffordElement& x);

/// Element E of {+-1}^n, acting by ahat_i -> E_i ahat_i.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> entries);
  /// Bit i-1 set means E_i = -1.
  static SignVector from_mask(std::uint32_t mask, int length);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& entries() const { return entries_; }

 private:
  std::vector<int> entries_;
};

/// Conjugation by a diagonal sign matrix d with d_i d_{i+1} = E_i (d_1 = +1).
/// Throws RankMismatch when E has the wrong length.
CliffordElement sign_conjugate(const SignVector& e, const CliffordElement& x);

/// Rotation matrix of a unit z: column i is z e_i reversal(z) on e_1..e_{n+1}.
/// Throws NotInGroup when z * reversal(z) != 1.
Matrix<ScaledDyadic> pi_matrix(const CliffordElement& z);

struct AhatTerm {
  std::uint32_t subset;  // bit i-1 stands for ahat_i
  ScaledDyadic coeff;
};

/// Expansion over ahat-monomials in binary counting order of the subset.
/// Throws std::domain_error for elements with odd blades.
std::vector<AhatTerm> ahat_expansion(const CliffordElement& z);

/// Name of a single monomial, e.g. "â₁â₂" or "a^1 a^2"; "1" for the empty subset.
std::string ahat_monomial_name(std::uint32_t subset, Notation notation);

/// E.g. "(−1+â₁â₂+â₃)/(2√2)". Terms sharing one magnitude are factored out;
/// otherwise each coefficient is written in front of its monomial.
std::string to_ahat_string(const CliffordElement& z, Notation notation = Notation::unicode);

/// [{"blade":[1,2],"mantissa":1,"halfexp":1}, ...]; throws std::domain_error
/// when a coefficient is not a monomial.
nlohmann::json clifford_to_json(const CliffordElement& z);
CliffordElement clifford_from_json(const nlohmann::json& j, int rank);

}  // namespace bruhat

template <>
struct std::hash<bruhat::CliffordElement> {
  std::size_t operator()(const bruhat::CliffordElement& x) const { return x.hash(); }
};
