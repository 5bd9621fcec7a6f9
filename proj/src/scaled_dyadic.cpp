#include "bruhat/scaled_dyadic.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bruhat {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ScaledDyadic overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ScaledDyadic overflow");
  return r;
}

std::int64_t checked_shift(std::int64_t a, int bits) {
  if (bits >= 62) {
    if (a == 0) return 0;
    throw std::overflow_error("ScaledDyadic overflow");
  }
  return checked_mul(a, std::int64_t{1} << bits);
}

__extension__ typedef __int128 i128;

// Sign of r + s*sqrt(2).
int sign_of(std::int64_t r, std::int64_t s) {
  if (r >= 0 && s >= 0) return (r == 0 && s == 0) ? 0 : 1;
  if (r <= 0 && s <= 0) return -1;
  const i128 r2 = static_cast<i128>(r) * r;
  const i128 s2 = 2 * static_cast<i128>(s) * s;
  if (r > 0) return r2 > s2 ? 1 : -1;  // r2 == s2 impossible for irrational sqrt(2)
  return s2 > r2 ? 1 : -1;
}

std::string sqrt2_symbol(Notation notation) { return notation == Notation::unicode ? "√2" : "sqrt(2)"; }
std::string minus_symbol(Notation notation) { return notation == Notation::unicode ? "−" : "-"; }

}  // namespace

ScaledDyadic ScaledDyadic::from_parts(std::int64_t rational, std::int64_t sqrt2, int log2_denominator) {
  ScaledDyadic x;
  x.rational_ = rational;
  x.sqrt2_ = sqrt2;
  x.log2_den_ = log2_denominator;
  if (log2_denominator < 0) {
    x.rational_ = checked_shift(rational, -log2_denominator);
    x.sqrt2_ = checked_shift(sqrt2, -log2_denominator);
    x.log2_den_ = 0;
  }
  x.normalize();
  return x;
}

ScaledDyadic ScaledDyadic::from_mantissa(std::int64_t mantissa, int halfexp) {
  if (halfexp >= 0) {
    if (halfexp % 2 == 0) return from_parts(mantissa, 0, halfexp / 2);
    // a * 2^(-h/2) = a*sqrt(2) / 2^((h+1)/2)
    return from_parts(0, mantissa, (halfexp + 1) / 2);
  }
  const int up = -halfexp;
  if (up % 2 == 0) return from_parts(checked_shift(mantissa, up / 2), 0, 0);
  return from_parts(0, checked_shift(mantissa, (up - 1) / 2), 0);
}

ScaledDyadic ScaledDyadic::sqrt2_power(int e) { return from_mantissa(1, -e); }

void ScaledDyadic::normalize() {
  if (rational_ == 0 && sqrt2_ == 0) {
    log2_den_ = 0;
    return;
  }
  while (log2_den_ > 0 && rational_ % 2 == 0 && sqrt2_ % 2 == 0) {
    rational_ /= 2;
    sqrt2_ /= 2;
    --log2_den_;
  }
}

int ScaledDyadic::sign() const { return sign_of(rational_, sqrt2_); }

std::optional<std::pair<std::int64_t, int>> ScaledDyadic::as_monomial() const {
  if (is_zero()) return std::pair<std::int64_t, int>{0, 0};
  if (sqrt2_ == 0) return std::pair<std::int64_t, int>{rational_, 2 * log2_den_};
  if (rational_ != 0) return std::nullopt;
  if (log2_den_ == 0) return std::pair<std::int64_t, int>{checked_mul(sqrt2_, 2), 1};
  return std::pair<std::int64_t, int>{sqrt2_, 2 * log2_den_ - 1};
}

std::optional<std::int64_t> ScaledDyadic::as_integer() const {
  if (sqrt2_ != 0 || log2_den_ != 0) return std::nullopt;
  return rational_;
}

ScaledDyadic ScaledDyadic::div_sqrt2() const {
  // (r + s*sqrt2) / sqrt2 = (2s + r*sqrt2) / 2
  return from_parts(checked_mul(sqrt2_, 2), rational_, log2_den_ + 1);
}

double ScaledDyadic::to_double() const {
  return (static_cast<double>(rational_) + static_cast<double>(sqrt2_) * std::sqrt(2.0)) /
         std::ldexp(1.0, log2_den_);
}

std::string ScaledDyadic::to_string(Notation notation) const {
  std::ostringstream os;
  const std::int64_t den = log2_den_ < 63 ? (std::int64_t{1} << log2_den_) : 0;
  auto signed_int = [&](std::int64_t v) {
    if (v < 0) os << minus_symbol(notation) << -v;
    else os << v;
  };
  if (sqrt2_ == 0) {
    signed_int(rational_);
  } else if (rational_ == 0) {
    if (sqrt2_ < 0) os << minus_symbol(notation);
    const std::int64_t mag = sqrt2_ < 0 ? -sqrt2_ : sqrt2_;
    if (mag != 1) os << mag;
    os << sqrt2_symbol(notation);
  } else {
    os << '(';
    signed_int(rational_);
    os << (sqrt2_ < 0 ? minus_symbol(notation) : "+");
    const std::int64_t mag = sqrt2_ < 0 ? -sqrt2_ : sqrt2_;
    if (mag != 1) os << mag;
    os << sqrt2_symbol(notation) << ')';
  }
  if (log2_den_ > 0) os << '/' << den;
  return os.str();
}

std::string ScaledDyadic::to_exponent_string() const {
  if (auto m = as_monomial()) {
    if (m->second == 0) return std::to_string(m->first);
    return std::to_string(m->first) + "/2^(" + std::to_string(m->second) + "/2)";
  }
  return to_string(Notation::ascii);
}

ScaledDyadic ScaledDyadic::operator-() const {
  ScaledDyadic r = *this;
  r.rational_ = checked_mul(rational_, -1);
  r.sqrt2_ = checked_mul(sqrt2_, -1);
  return r;
}

ScaledDyadic& ScaledDyadic::operator+=(const ScaledDyadic& o) {
  const int k = std::max(log2_den_, o.log2_den_);
  rational_ = checked_add(checked_shift(rational_, k - log2_den_), checked_shift(o.rational_, k - o.log2_den_));
  sqrt2_ = checked_add(checked_shift(sqrt2_, k - log2_den_), checked_shift(o.sqrt2_, k - o.log2_den_));
  log2_den_ = k;
  normalize();
  return *this;
}

ScaledDyadic& ScaledDyadic::operator-=(const ScaledDyadic& o) { return *this += -o; }

ScaledDyadic& ScaledDyadic::operator*=(const ScaledDyadic& o) {
  const std::int64_t r = checked_add(checked_mul(rational_, o.rational_),
                                     checked_mul(2, checked_mul(sqrt2_, o.sqrt2_)));
  const std::int64_t s = checked_add(checked_mul(rational_, o.sqrt2_), checked_mul(sqrt2_, o.rational_));
  rational_ = r;
  sqrt2_ = s;
  log2_den_ += o.log2_den_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const ScaledDyadic& a, const ScaledDyadic& b) {
  const ScaledDyadic d = a - b;
  const int s = d.sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t ScaledDyadic::hash() const {
  std::size_t h = std::hash<std::int64_t>{}(rational_);
  h = h * 1000003u ^ std::hash<std::int64_t>{}(sqrt2_);
  h = h * 1000003u ^ static_cast<std::size_t>(log2_den_);
  return h;
}

}  // namespace bruhat
