#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "bruhat/combinatorics.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/spinweyl.hpp"

using namespace bruhat;

namespace {

// Lift every sign vector directly and count hits per element.
std::map<SpinWeylElement, std::int64_t> brute_counts(const ReducedWord& w) {
  std::map<SpinWeylElement, std::int64_t> out;
  const int l = w.length();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    std::vector<int> signs(static_cast<std::size_t>(l));
    for (int k = 0; k < l; ++k) signs[static_cast<std::size_t>(k)] = (mask >> k & 1) ? -1 : 1;
    ++out[lift_word(w, signs)];
  }
  return out;
}

}  // namespace

TEST_CASE("quaternion group and cosets have 2^(n+1) elements") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(quat_elements(n).size() == (std::size_t{1} << (n + 1)));
    const ReducedWord w = canonical_word(longest_element(n));
    const auto cs = coset(w);
    CHECK(cs.size() == (std::size_t{1} << (n + 1)));
    for (const auto& z : cs) CHECK(perm_of_spin(z.value()) == perm_from_word(w));
  }
}

TEST_CASE("lift_word rejects a sign vector of the wrong length") {
  const ReducedWord w({1, 2}, 2);
  CHECK_THROWS_AS(lift_word(w, std::vector<int>{1}), std::invalid_argument);
}

TEST_CASE("acute lift does not depend on the reduced word") {
  for (const auto& p : all_permutations(4)) {
    const auto words = all_reduced_words(p);
    const SpinWeylElement first = acute_lift(words.front());
    for (const auto& w : words) CHECK(acute_lift(w) == first);
  }
}

TEST_CASE("N(z) matches direct lifting for every permutation of S_4") {
  for (const auto& p : all_permutations(4)) {
    const ReducedWord w = canonical_word(p);
    const auto counts = brute_counts(w);
    std::int64_t total = 0;
    for (const auto& z : coset(w)) {
      const auto it = counts.find(z);
      const std::int64_t want = it == counts.end() ? 0 : it->second;
      CHECK(n_of_z(w, z) == want);
      total += n_of_z(w, z);
    }
    CHECK(total == (std::int64_t{1} << w.length()));
  }
}

TEST_CASE("N(z) outside the coset throws") {
  const ReducedWord w({1, 2}, 2);
  CHECK_THROWS_AS(n_of_z(w, SpinWeylElement::one(2)), std::invalid_argument);
}

TEST_CASE("in_tilde_H") {
  const ReducedWord w({1, 3}, 3);
  CHECK(in_tilde_H(acute_lift(w), {}));
  CHECK(in_tilde_H(acute_lift(w), {2}));
  CHECK_FALSE(in_tilde_H(acute_lift(w), {1}));
  CHECK_FALSE(in_tilde_H(-SpinWeylElement::one(3), {1, 2, 3}));
  CHECK(in_tilde_H(SpinWeylElement::one(3), {1, 2, 3}));
}

TEST_CASE("orbits partition the coset and share N") {
  const ReducedWord w({2, 3, 1, 2, 4, 3, 2}, 4);
  const auto orbits = orbit_decomposition(w);
  std::set<SpinWeylElement> seen;
  std::size_t total = 0;
  for (const auto& o : orbits) {
    CHECK(o.representative == o.members.front());
    for (const auto& m : o.members) {
      seen.insert(m);
      CHECK(n_of_z(w, m) == o.n_value);
      CHECK(c_anti(m) == o.c_anti);
    }
    total += o.members.size();
  }
  CHECK(total == 32);
  CHECK(seen.size() == 32);
}

TEST_CASE("orbit_members is closed under sign conjugation") {
  const SpinWeylElement z = acute_lift(ReducedWord({1, 2, 1}, 2));
  const auto members = orbit_members(z);
  for (const auto& m : members) {
    const auto again = orbit_members(m);
    CHECK(std::set<SpinWeylElement>(again.begin(), again.end()) ==
          std::set<SpinWeylElement>(members.begin(), members.end()));
  }
}
