#include "bruhat/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

Blade ahat_blade(int i) { return (Blade{1} << (i - 1)) | (Blade{1} << i); }

void check_generator_index(int i, int rank) {
  if (i < 1 || i > rank) {
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(rank));
  }
}

void check_same_rank(const CliffordElement& a, const CliffordElement& b) {
  if (a.rank() != b.rank()) {
    throw RankMismatch("Clifford rank " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
}

std::string subscript(int value) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : std::to_string(value)) out += digits[c - '0'];
  return out;
}

}  // namespace

int blade_sign(Blade a, Blade b) {
  int swaps = std::popcount(a & b);
#ifdef BRUHAT_MUTATE_CLIFFORD_SIGN
  swaps -= static_cast<int>(a & b & 1u);  // e_1^2 = +1
#endif
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

AhatBlade ahat_monomial_blade(std::uint32_t subset) {
  Blade blade = 0;
  int sign = 1;
  for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest) + 1;
    const Blade g = ahat_blade(i);
    sign *= blade_sign(blade, g);
    blade ^= g;
  }
  return {blade, sign};
}

CliffordElement::CliffordElement(int rank) : rank_(rank) {
  if (rank < 0 || rank > max_rank) throw std::out_of_range("Clifford rank out of range");
  coeffs_.assign(std::size_t{1} << (rank + 1), ScaledDyadic());
}

CliffordElement CliffordElement::scalar(int rank, const ScaledDyadic& value) {
  CliffordElement x(rank);
  x.coeffs_[0] = value;
  return x;
}

CliffordElement CliffordElement::blade(int rank, Blade b, const ScaledDyadic& coeff) {
  CliffordElement x(rank);
  x.coeffs_.at(b) = coeff;
  return x;
}

std::vector<std::pair<Blade, ScaledDyadic>> CliffordElement::terms() const {
  std::vector<std::pair<Blade, ScaledDyadic>> out;
  for (std::size_t b = 0; b < coeffs_.size(); ++b) {
    if (!coeffs_[b].is_zero()) out.emplace_back(static_cast<Blade>(b), coeffs_[b]);
  }
  return out;
}

bool CliffordElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CliffordElement::is_even() const {
  for (std::size_t b = 0; b < coeffs_.size(); ++b) {
    if (!coeffs_[b].is_zero() && (std::popcount(b) & 1)) return false;
  }
  return true;
}

ScaledDyadic CliffordElement::norm_squared() const {
  ScaledDyadic sum;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) sum += c * c;
  }
  return sum;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  check_same_rank(*this, other);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) coeffs_[b] += other.coeffs_[b];
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  check_same_rank(*this, other);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) coeffs_[b] -= other.coeffs_[b];
  return *this;
}

CliffordElement& CliffordElement::operator*=(const ScaledDyadic& factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  check_same_rank(a, b);
  CliffordElement out(a.rank());
  const auto bt = b.terms();
  for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
    const ScaledDyadic& ca = a.coeffs_[x];
    if (ca.is_zero()) continue;
    for (const auto& [y, cb] : bt) {
      const Blade bx = static_cast<Blade>(x);
      ScaledDyadic term = ca * cb;
      if (blade_sign(bx, y) < 0) term = -term;
      out.coeffs_[bx ^ y] += term;
    }
  }
  return out;
}

CliffordElement CliffordElement::times_acute(int i, int sign) const {
  check_generator_index(i, rank_);
  const Blade g = ahat_blade(i);
  CliffordElement out(rank_);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) {
    const Blade bb = static_cast<Blade>(b);
    const ScaledDyadic& partner = coeffs_[bb ^ g];
    ScaledDyadic value = coeffs_[b];
    if (!partner.is_zero()) {
      if (sign * blade_sign(bb ^ g, g) > 0) value += partner;
      else value -= partner;
    }
    if (!value.is_zero()) out.coeffs_[b] = value.div_sqrt2();
  }
  return out;
}

std::strong_ordering operator<=>(const CliffordElement& a, const CliffordElement& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == b.coeffs_[i]) continue;
    return a.coeffs_[i] <=> b.coeffs_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t CliffordElement::hash() const {
  std::size_t h = static_cast<std::size_t>(rank_);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) {
    if (coeffs_[b].is_zero()) continue;
    h ^= (coeffs_[b].hash() + 0x9e3779b97f4a7c15ULL + (b << 6)) * 0xff51afd7ed558ccdULL;
  }
  return h;
}

CliffordElement generator_ahat(int i, int rank) {
  check_generator_index(i, rank);
  return CliffordElement::blade(rank, ahat_blade(i));
}

CliffordElement generator_acute(int i, int rank, int sign) {
  check_generator_index(i, rank);
  if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
  return CliffordElement::scalar(rank, ScaledDyadic(1)).times_acute(i, sign);
}

CliffordElement reversal(const CliffordElement& x) {
  CliffordElement out(x.rank());
  for (const auto& [b, c] : x.terms()) {
    const int k = std::popcount(b);
    out.set_coeff(b, ((k * (k - 1) / 2) % 2) ? -c : c);
  }
  return out;
}

ScaledDyadic real_part(const CliffordElement& x) { return x.coeff(0); }

SignVector::SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e != 1 && e != -1) throw std::invalid_argument("sign vector entries must be +1 or -1");
  }
}

SignVector SignVector::from_mask(std::uint32_t mask, int length) {
  std::vector<int> entries(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) entries[static_cast<std::size_t>(i)] = (mask >> i & 1u) ? -1 : 1;
  return SignVector(std::move(entries));
}

CliffordElement sign_conjugate(const SignVector& e, const CliffordElement& x) {
  if (e.size() != x.rank()) {
    throw RankMismatch("sign vector of length " + std::to_string(e.size()) + " for rank " +
                       std::to_string(x.rank()));
  }
  // Lift to d in {+-1}^{n+1} with d_1 = 1; flipped collects the indices with d_i = -1.
  Blade flipped = 0;
  int d = 1;
  for (int i = 1; i <= x.rank(); ++i) {
    d *= e[i];
    if (d < 0) flipped |= Blade{1} << i;
  }
  CliffordElement out(x.rank());
  for (const auto& [b, c] : x.terms()) {
    out.set_coeff(b, (std::popcount(b & flipped) & 1) ? -c : c);
  }
  return out;
}

Matrix<ScaledDyadic> pi_matrix(const CliffordElement& z) {
  const CliffordElement rev = reversal(z);
  if (z * rev != CliffordElement::scalar(z.rank(), ScaledDyadic(1))) {
    throw NotInGroup("pi_matrix needs a unit z with z * reversal(z) = 1");
  }
  const std::size_t size = static_cast<std::size_t>(z.rank()) + 1;
  Matrix<ScaledDyadic> m(size, size);
  for (std::size_t col = 0; col < size; ++col) {
    const CliffordElement image = z * CliffordElement::blade(z.rank(), Blade{1} << col) * rev;
    for (const auto& [b, c] : image.terms()) {
      if (std::popcount(b) != 1) throw NotInGroup("z e_i reversal(z) is not a vector");
      m(static_cast<std::size_t>(std::countr_zero(b)), col) = c;
    }
  }
  return m;
}

std::vector<AhatTerm> ahat_expansion(const CliffordElement& z) {
  if (!z.is_even()) throw std::domain_error("ahat expansion needs an even element");
  std::vector<AhatTerm> out;
  const std::uint32_t subsets = std::uint32_t{1} << z.rank();
  for (std::uint32_t s = 0; s < subsets; ++s) {
    const auto [blade, sign] = ahat_monomial_blade(s);
    const ScaledDyadic& c = z.coeff(blade);
    if (c.is_zero()) continue;
    out.push_back({s, sign > 0 ? c : -c});
  }
  return out;
}

std::string ahat_monomial_name(std::uint32_t subset, Notation notation) {
  if (subset == 0) return "1";
  std::string out;
  for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest) + 1;
    if (notation == Notation::unicode) {
      out += "â" + subscript(i);
    } else {
      if (!out.empty()) out += ' ';
      out += "a^" + std::to_string(i);
    }
  }
  return out;
}

std::string to_ahat_string(const CliffordElement& z, Notation notation) {
  const auto terms = ahat_expansion(z);
  if (terms.empty()) return "0";
  const std::string minus = notation == Notation::unicode ? "−" : "-";
  const std::string times = notation == Notation::unicode ? "·" : "*";

  bool common = true;
  const ScaledDyadic magnitude = terms.front().coeff.sign() < 0 ? -terms.front().coeff : terms.front().coeff;
  for (const auto& t : terms) {
    const ScaledDyadic m = t.coeff.sign() < 0 ? -t.coeff : t.coeff;
    if (m != magnitude) common = false;
  }

  std::ostringstream body;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.coeff.sign() < 0;
    if (negative) body << minus;
    else if (!first) body << '+';
    first = false;
    if (!common) {
      const ScaledDyadic m = negative ? -t.coeff : t.coeff;
      if (m != ScaledDyadic(1)) {
        body << m.to_string(notation);
        if (t.subset == 0) continue;
        body << times;
      }
    }
    body << ahat_monomial_name(t.subset, notation);
  }
  if (!common || magnitude == ScaledDyadic(1)) return body.str();

  // magnitude = mantissa * 2^(-h/2); pure powers of 1/sqrt(2) become a divisor.
  const auto mono = magnitude.as_monomial();
  std::string divisor;
  if (mono && mono->first == 1 && mono->second > 0) {
    const int h = mono->second;
    if (h % 2 == 0) {
      divisor = std::to_string(std::int64_t{1} << (h / 2));
    } else {
      const std::string root = notation == Notation::unicode ? "√2" : "sqrt(2)";
      divisor = h == 1 ? root : "(" + std::to_string(std::int64_t{1} << ((h - 1) / 2)) + root + ")";
    }
    if (terms.size() == 1) return body.str() + "/" + divisor;
    return "(" + body.str() + ")/" + divisor;
  }
  return magnitude.to_string(notation) + times + "(" + body.str() + ")";
}

nlohmann::json clifford_to_json(const CliffordElement& z) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [b, c] : z.terms()) {
    const auto mono = c.as_monomial();
    if (!mono) throw std::domain_error("coefficient " + c.to_string(Notation::ascii) + " is not a monomial");
    nlohmann::json blade = nlohmann::json::array();
    for (int i = 0; i <= z.rank(); ++i) {
      if (b >> i & 1u) blade.push_back(i + 1);
    }
    out.push_back({{"blade", blade}, {"mantissa", mono->first}, {"halfexp", mono->second}});
  }
  return out;
}

CliffordElement clifford_from_json(const nlohmann::json& j, int rank) {
  CliffordElement z(rank);
  for (const auto& term : j) {
    Blade b = 0;
    for (int i : term.at("blade")) {
      if (i < 1 || i > rank + 1) throw ParseError("blade index out of range");
      b |= Blade{1} << (i - 1);
    }
    z.set_coeff(b, z.coeff(b) + ScaledDyadic::from_mantissa(term.at("mantissa").get<std::int64_t>(),
                                                            term.at("halfexp").get<int>()));
  }
  return z;
}

}  // namespace bruhat
