#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "bruhat/clifford.hpp"
#include "bruhat/combinatorics.hpp"

namespace bruhat {

/// Member of the finite group B~+_{n+1} generated by the acute_i.
class SpinWeylElement {
 public:
  SpinWeylElement() = default;
  /// Checks membership (even, unit, signed-permutation projection); throws NotInGroup.
  explicit SpinWeylElement(CliffordElement value);
  /// For values known to be products of generators.
  static SpinWeylElement trusted(CliffordElement value);

  static SpinWeylElement one(int rank);

  const CliffordElement& value() const { return value_; }
  int rank() const { return value_.rank(); }

  SpinWeylElement operator-() const { return trusted(-value_); }
  friend SpinWeylElement operator*(const SpinWeylElement& a, const SpinWeylElement& b) {
    return trusted(a.value_ * b.value_);
  }
  SpinWeylElement times_acute(int i, int sign) const { return trusted(value_.times_acute(i, sign)); }
  SpinWeylElement inverse() const { return trusted(reversal(value_)); }

  friend bool operator==(const SpinWeylElement&, const SpinWeylElement&) = default;
  friend auto operator<=>(const SpinWeylElement& a, const SpinWeylElement& b) { return a.value_ <=> b.value_; }

 private:
  CliffordElement value_;
};

struct SpinWeylHash {
  std::size_t operator()(const SpinWeylElement& x) const { return x.value().hash(); }
};

/// Orbit of a coset element under sign conjugation by {+-1}^n.
struct OrbitReport {
  SpinWeylElement representative;      // minimal member
  std::vector<SpinWeylElement> members;  // sorted
  ScaledDyadic re_value;
  std::int64_t n_value = 0;
  int c_anti = 0;
  std::optional<int> isolated_count;  // filled in by the strata module
};

/// Left-to-right product of acute_{i_k}^{signs[k]}; throws std::invalid_argument
/// on length mismatch.
SpinWeylElement lift_word(const ReducedWord& word, std::span<const int> signs);
/// All-plus lift of a reduced word.
SpinWeylElement acute_lift(const ReducedWord& word);

/// Quat_{n+1}: closure of {ahat_1..ahat_n, -1}; sorted, 2^{n+1} elements.
std::vector<SpinWeylElement> quat_elements(int rank);

/// acute(sigma) * Quat_{n+1}, sorted.
std::vector<SpinWeylElement> coset(const ReducedWord& word);

/// sigma with row i of pi_matrix(z) non-zero in column i^sigma; throws NotInGroup.
Permutation perm_of_spin(const CliffordElement& z);

/// Membership of z in the subgroup generated by acute_i, i not in blocked.
bool in_tilde_H(const SpinWeylElement& z, const std::set<int>& blocked);

/// Number of dimension-0 strata in BL_z; throws std::invalid_argument when z
/// is not in the coset of the word.
std::int64_t n_of_z(const ReducedWord& word, const SpinWeylElement& z);

std::vector<SpinWeylElement> orbit_members(const SpinWeylElement& z);
int c_anti(const SpinWeylElement& z);
OrbitReport orbit(const ReducedWord& word, const SpinWeylElement& z);
/// Partition of the coset into orbits, sorted by representative.
std::vector<OrbitReport> orbit_decomposition(const ReducedWord& word);

}  // namespace bruhat
