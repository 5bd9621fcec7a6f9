#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace bruhat {

enum class Notation { unicode, ascii };

/// Exact real number (r + s*sqrt(2)) / 2^k with integer r, s and k >= 0.
///
/// Spin-group coefficients are always monomials a * 2^(-h/2); the general
/// form is kept so that sums of monomials with different parity of h stay
/// exact. Canonical form: k is minimal, so equal values have equal fields.
/// Arithmetic throws std::overflow_error instead of wrapping.
class ScaledDyadic {
 public:
  constexpr ScaledDyadic() = default;
  ScaledDyadic(std::int64_t integer) : rational_(integer) {}  // NOLINT: implicit by design of the ring

  /// mantissa * 2^(-halfexp/2); halfexp may be negative.
  static ScaledDyadic from_mantissa(std::int64_t mantissa, int halfexp);
  /// (rational + sqrt2 * sqrt(2)) / 2^log2_denominator.
  static ScaledDyadic from_parts(std::int64_t rational, std::int64_t sqrt2, int log2_denominator);
  /// 2^(e/2) for any integer e.
  static ScaledDyadic sqrt2_power(int e);

  std::int64_t rational_part() const { return rational_; }
  std::int64_t sqrt2_part() const { return sqrt2_; }
  int log2_denominator() const { return log2_den_; }

  bool is_zero() const { return rational_ == 0 && sqrt2_ == 0; }
  int sign() const;

  /// (mantissa, halfexp) with halfexp >= 0 in canonical form (mantissa odd or
  /// halfexp < 2), or nullopt when the value is not a single power of sqrt(2)
  /// times an integer.
  std::optional<std::pair<std::int64_t, int>> as_monomial() const;
  std::optional<std::int64_t> as_integer() const;

  /// Division by sqrt(2); exact and cheap.
  ScaledDyadic div_sqrt2() const;

  double to_double() const;

  /// Human readable, e.g. "-3/4", "√2/4", "(1+√2)/2".
  std::string to_string(Notation notation = Notation::unicode) const;
  /// Monomials as "a/2^(h/2)" ("-1/2^(3/2)"), integers plainly, others as to_string().
  std::string to_exponent_string() const;

  ScaledDyadic operator-() const;
  ScaledDyadic& operator+=(const ScaledDyadic& other);
  ScaledDyadic& operator-=(const ScaledDyadic& other);
  ScaledDyadic& operator*=(const ScaledDyadic& other);
  friend ScaledDyadic operator+(ScaledDyadic a, const ScaledDyadic& b) { return a += b; }
  friend ScaledDyadic operator-(ScaledDyadic a, const ScaledDyadic& b) { return a -= b; }
  friend ScaledDyadic operator*(ScaledDyadic a, const ScaledDyadic& b) { return a *= b; }

  friend bool operator==(const ScaledDyadic&, const ScaledDyadic&) = default;
  /// Ordering by real value.
  friend std::strong_ordering operator<=>(const ScaledDyadic& a, const ScaledDyadic& b);

  std::size_t hash() const;

 private:
  void normalize();

  std::int64_t rational_ = 0;
  std::int64_t sqrt2_ = 0;
  int log2_den_ = 0;
};

}  // namespace bruhat
