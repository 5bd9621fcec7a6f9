#include "bruhat/spinweyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

using ElementSet = std::unordered_set<CliffordElement, CliffordHash>;

// Order of B~+_{n+1}: twice the number of even signed permutations.
std::size_t group_order(int rank) {
  std::size_t order = std::size_t{1} << (rank + 1);
  for (int k = 2; k <= rank + 1; ++k) order *= static_cast<std::size_t>(k);
  return order;
}

std::vector<SpinWeylElement> closure(int rank, const std::vector<CliffordElement>& generators) {
  ElementSet seen;
  std::deque<CliffordElement> queue;
  const CliffordElement one = CliffordElement::scalar(rank, ScaledDyadic(1));
  seen.insert(one);
  queue.push_back(one);
  while (!queue.empty()) {
    const CliffordElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      CliffordElement y = x * g;
      if (seen.insert(y).second) queue.push_back(std::move(y));
      if (seen.size() > group_order(rank)) throw NotInGroup("generators do not close up to a finite group");
    }
  }
  std::vector<SpinWeylElement> out;
  out.reserve(seen.size());
  for (const auto& x : seen) out.push_back(SpinWeylElement::trusted(x));
  std::sort(out.begin(), out.end());
  return out;
}

const ElementSet& tilde_h_group(int rank, const std::set<int>& blocked) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::set<int>>, std::unique_ptr<ElementSet>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{rank, blocked}];
  if (!slot) {
    slot = std::make_unique<ElementSet>();
    ElementSet& group = *slot;
    const CliffordElement one = CliffordElement::scalar(rank, ScaledDyadic(1));
    std::deque<CliffordElement> queue{one};
    group.insert(one);
    while (!queue.empty()) {
      const CliffordElement x = std::move(queue.front());
      queue.pop_front();
      for (int i = 1; i <= rank; ++i) {
        if (blocked.count(i)) continue;
        CliffordElement y = x.times_acute(i, 1);
        if (group.insert(y).second) queue.push_back(std::move(y));
        if (group.size() > group_order(rank)) {
          cache.erase({rank, blocked});
          throw NotInGroup("generators do not close up to a finite group");
        }
      }
    }
  }
  return *slot;
}

}  // namespace

SpinWeylElement::SpinWeylElement(CliffordElement value) : value_(std::move(value)) {
  if (!value_.is_even()) throw NotInGroup("element is not even");
  const Matrix<ScaledDyadic> m = pi_matrix(value_);  // throws for non-units
  for (std::size_t r = 0; r < m.rows(); ++r) {
    int nonzero = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const ScaledDyadic& x = m(r, c);
      if (x.is_zero()) continue;
      if (x != ScaledDyadic(1) && x != ScaledDyadic(-1)) throw NotInGroup("projection is not a signed permutation");
      ++nonzero;
    }
    if (nonzero != 1) throw NotInGroup("projection is not a signed permutation");
  }
}

SpinWeylElement SpinWeylElement::trusted(CliffordElement value) {
  SpinWeylElement z;
  z.value_ = std::move(value);
  return z;
}

SpinWeylElement SpinWeylElement::one(int rank) {
  return trusted(CliffordElement::scalar(rank, ScaledDyadic(1)));
}

SpinWeylElement lift_word(const ReducedWord& word, std::span<const int> signs) {
  if (static_cast<int>(signs.size()) != word.length()) {
    throw std::invalid_argument("lift_word: " + std::to_string(signs.size()) + " signs for a word of length " +
                                std::to_string(word.length()));
  }
  CliffordElement z = CliffordElement::scalar(word.rank(), ScaledDyadic(1));
  for (int k = 1; k <= word.length(); ++k) {
    const int s = signs[static_cast<std::size_t>(k - 1)];
    if (s != 1 && s != -1) throw std::invalid_argument("lift_word: signs must be +1 or -1");
    z = z.times_acute(word.letter(k), s);
  }
  return SpinWeylElement::trusted(std::move(z));
}

SpinWeylElement acute_lift(const ReducedWord& word) {
  return lift_word(word, std::vector<int>(static_cast<std::size_t>(word.length()), 1));
}

std::vector<SpinWeylElement> quat_elements(int rank) {
  std::vector<CliffordElement> generators;
  generators.push_back(CliffordElement::scalar(rank, ScaledDyadic(-1)));
  for (int i = 1; i <= rank; ++i) generators.push_back(generator_ahat(i, rank));
  return closure(rank, generators);
}

std::vector<SpinWeylElement> coset(const ReducedWord& word) {
  const SpinWeylElement base = acute_lift(word);
  std::vector<SpinWeylElement> out;
  for (const auto& q : quat_elements(word.rank())) out.push_back(base * q);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation perm_of_spin(const CliffordElement& z) {
  const Matrix<ScaledDyadic> m = pi_matrix(z);
  std::vector<int> images(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const ScaledDyadic& x = m(r, c);
      if (x.is_zero()) continue;
      if ((x != ScaledDyadic(1) && x != ScaledDyadic(-1)) || images[r] != 0) {
        throw NotInGroup("projection is not a signed permutation matrix");
      }
      images[r] = static_cast<int>(c) + 1;
    }
    if (images[r] == 0) throw NotInGroup("projection has an empty row");
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument&) {
    throw NotInGroup("projection is not a signed permutation matrix");
  }
}

bool in_tilde_H(const SpinWeylElement& z, const std::set<int>& blocked) {
  if (blocked.empty()) return true;
  // The image of H~_B in S_{n+1} is the Young subgroup of permutations blocking at B.
  const std::set<int> perm_blocks = block_set(perm_of_spin(z.value()));
  if (!std::includes(perm_blocks.begin(), perm_blocks.end(), blocked.begin(), blocked.end())) return false;
  return tilde_h_group(z.rank(), blocked).count(z.value()) > 0;
}

std::int64_t n_of_z(const ReducedWord& word, const SpinWeylElement& z) {
  const Permutation sigma = perm_from_word(word);
  if (z.rank() != word.rank() || perm_of_spin(z.value()) != sigma) {
    throw std::invalid_argument("n_of_z: z is not in the coset of " + sigma.to_string());
  }
  const std::set<int> blocked = block_set(sigma);
  if (!in_tilde_H(z, blocked)) return 0;
  const int l = word.length();
  const int n = word.rank();
  const int b = static_cast<int>(blocked.size());
  const ScaledDyadic value = ScaledDyadic::sqrt2_power(2 * (l - n + b - 1)) +
                             ScaledDyadic::sqrt2_power(l - 2) * real_part(z.value());
  const auto count = value.as_integer();
  if (!count || *count < 0) {
    throw std::logic_error("N(z) evaluated to " + value.to_string(Notation::ascii) + ", not a count");
  }
  return *count;
}

std::vector<SpinWeylElement> orbit_members(const SpinWeylElement& z) {
  const int n = z.rank();
  std::vector<SpinWeylElement> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    out.push_back(SpinWeylElement::trusted(sign_conjugate(SignVector::from_mask(mask, n), z.value())));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int c_anti(const SpinWeylElement& z) {
  const auto members = orbit_members(z);
  return std::binary_search(members.begin(), members.end(), -z) ? 1 : 0;
}

OrbitReport orbit(const ReducedWord& word, const SpinWeylElement& z) {
  OrbitReport report;
  report.members = orbit_members(z);
  report.representative = report.members.front();
  report.re_value = real_part(z.value());
  report.n_value = n_of_z(word, z);
  report.c_anti = std::binary_search(report.members.begin(), report.members.end(), -z) ? 1 : 0;
  return report;
}

std::vector<OrbitReport> orbit_decomposition(const ReducedWord& word) {
  std::vector<OrbitReport> out;
  std::set<SpinWeylElement> assigned;
  for (const auto& z : coset(word)) {
    if (assigned.count(z)) continue;
    OrbitReport report = orbit(word, z);
    assigned.insert(report.members.begin(), report.members.end());
    out.push_back(std::move(report));
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitReport& a, const OrbitReport& b) { return a.representative < b.representative; });
  return out;
}

}  // namespace bruhat
