#include <doctest.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "bruhat/combinatorics.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/spinweyl.hpp"
#include "bruhat/strata.hpp"

using namespace bruhat;

namespace {

struct OracleGraph {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t components = 0;
  std::int64_t isolated = 0;
};

// Buckets from lift_word, edges from the face rule applied entry by entry,
// components from a plain union-find.
OracleGraph oracle_graph(const ReducedWord& w, const SpinWeylElement& z) {
  const int l = w.length();
  std::vector<std::uint64_t> bucket;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    std::vector<int> signs(static_cast<std::size_t>(l));
    for (int k = 0; k < l; ++k) signs[static_cast<std::size_t>(k)] = (mask >> k & 1) ? -1 : 1;
    if (lift_word(w, signs) == z) bucket.push_back(mask);
  }
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < bucket.size(); ++i) index[bucket[i]] = i;
  std::vector<std::size_t> parent(bucket.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::vector<int> degree(bucket.size());
  OracleGraph g;
  g.vertices = static_cast<std::int64_t>(bucket.size());
  for (std::size_t i = 0; i < bucket.size(); ++i) {
    const std::uint64_t m = bucket[i];
    for (const Face& f : faces(w)) {
      const bool neg1 = m >> (f.k1 - 1) & 1;
      const bool neg2 = m >> (f.k2 - 1) & 1;
      if (!neg1 || neg2) continue;
      std::uint64_t other = m;
      for (int b : f.boundary) other ^= std::uint64_t{1} << (b - 1);
      const auto it = index.find(other);
      REQUIRE(it != index.end());
      ++g.edges;
      ++degree[i];
      ++degree[it->second];
      parent[root(i)] = root(it->second);
    }
  }
  for (std::size_t i = 0; i < bucket.size(); ++i) {
    if (root(i) == i) ++g.components;
    if (degree[i] == 0) ++g.isolated;
  }
  return g;
}

}  // namespace

TEST_CASE("ancestry vectors validate their entries") {
  CHECK_THROWS_AS(AncestryVector({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(AncestryVector({2, 1}), std::invalid_argument);
  const AncestryVector v({-2, 1, 2, -1});
  CHECK(v.dim() == 1);
  CHECK(v.sign_mask() == 0b1001);
  CHECK(v.signs() == std::vector<int>{-1, 1, 1, -1});
  CHECK(v.to_string() == "(-2,+1,+2,-1)");
  CHECK(AncestryVector::from_mask(0b101, 3).to_sign_string() == "-+-");
}

TEST_CASE("parse_ancestry accepts both notations") {
  CHECK(parse_ancestry("+-+") == AncestryVector({1, -1, 1}));
  CHECK(parse_ancestry("(-1,+2,-2)") == AncestryVector({-1, 2, -2}));
  CHECK(parse_ancestry(AncestryVector({-2, 1, 2}).to_string()) == AncestryVector({-2, 1, 2}));
  CHECK_THROWS_AS(parse_ancestry("(+1,x)"), ParseError);
  CHECK_THROWS_AS(parse_ancestry("+*"), ParseError);
}

TEST_CASE("click is an involution on clickable vectors") {
  const ReducedWord w({1, 2, 1}, 2);
  const auto fs = faces(w);
  REQUIRE(fs.size() == 1);
  const AncestryVector v({-1, 1, 1});
  const AncestryVector u = click(v, fs.front());
  CHECK(u == AncestryVector({1, -1, -1}));
  CHECK(click(u, fs.front()) == v);
  CHECK(edge_label(v, fs.front()) == AncestryVector({-2, 1, 2}));
  CHECK_THROWS_AS(click(AncestryVector({1, 1, 1}), fs.front()), NotClickable);
  CHECK_THROWS_AS(edge_label(u, fs.front()), NotClickable);
}

TEST_CASE("bucket sizes agree with N(z)") {
  for (const auto& p : all_permutations(4)) {
    const ReducedWord w = canonical_word(p);
    const auto buckets = enumerate_dim0(w);
    for (const auto& z : coset(w)) {
      const auto it = buckets.find(z);
      const std::int64_t size = it == buckets.end() ? 0 : static_cast<std::int64_t>(it->second.size());
      CHECK(size == n_of_z(w, z));
    }
  }
}

TEST_CASE("1-skeleta agree with a brute-force graph") {
  std::vector<ReducedWord> words;
  for (const auto& p : all_permutations(4)) words.push_back(canonical_word(p));
  words.emplace_back(std::vector<int>{2, 3, 1, 2, 4, 3, 2}, 4);
  words.emplace_back(std::vector<int>{1, 3, 2, 1, 4, 3, 2, 1}, 4);
  for (const auto& w : words) {
    const StrataComplex cx = strata_complex(w, 2);
    std::int64_t total_components = 0;
    for (const auto& z : coset(w)) {
      const OracleGraph want = oracle_graph(w, z);
      const StrataGraph g = strata_graph(w, z);
      CHECK(static_cast<std::int64_t>(g.vertices.size()) == want.vertices);
      CHECK(static_cast<std::int64_t>(g.edges.size()) == want.edges);
      CHECK(g.components == want.components);
      CHECK(g.isolated == want.isolated);
      const BucketSummary* b = cx.find(z);
      if (want.vertices == 0) {
        CHECK(b == nullptr);
        continue;
      }
      REQUIRE(b != nullptr);
      CHECK(b->vertices == want.vertices);
      CHECK(b->edges == want.edges);
      CHECK(b->components == want.components);
      CHECK(b->isolated == want.isolated);
      total_components += want.components;
    }
    CHECK(cx.components_total == total_components);
    CHECK(cx.vertices_total == (std::int64_t{1} << w.length()));
  }
}

TEST_CASE("edges join vertices of the same bucket through their faces") {
  const ReducedWord w({2, 3, 1, 2, 4, 3, 2}, 4);
  for (const auto& z : coset(w)) {
    const StrataGraph g = strata_graph(w, z);
    for (const auto& e : g.edges) {
      CHECK(e.first < e.second);
      CHECK(click(e.first, e.face) == e.second);
      CHECK(e.label.dim() == 1);
    }
  }
}

TEST_CASE("enumeration refuses overlong words") {
  const ReducedWord w = canonical_word(longest_element(7));
  REQUIRE(w.length() > max_enumeration_length);
  CHECK_THROWS_AS(enumerate_dim0_masks(w), std::invalid_argument);
}

TEST_CASE("dimension-2 preancestries") {
  const ReducedWord w({2, 3, 1, 2, 4, 3, 2}, 4);
  const auto all = enumerate_d2_preancestries(w);
  for (const auto& p : all) {
    CHECK(p.type != D2Type::Invalid);
    CHECK(classify_d2(p.positions, p.signs, w) == p.type);
  }
  std::int64_t attributed = 0;
  for (const auto& z : coset(w)) {
    std::int64_t per_z = 0;
    for (const auto& a : d2_attribution(w, z)) per_z += a.strata;
    CHECK(per_z == d2_count(w, z));
    attributed += per_z;
  }
  // Each preancestry has 2^(l-4) completions and every completion lands in one bucket.
  CHECK(attributed == static_cast<std::int64_t>(all.size()) << (w.length() - 4));
  CHECK_THROWS_AS(classify_d2({1, 1, 2, 3}, {2, 2, -2, -2}, w), std::invalid_argument);
  CHECK_THROWS_AS(classify_d2({1, 2, 3, 4}, {1, 2, -2, -2}, w), std::invalid_argument);
  CHECK(to_string(D2Type::II) == "II");
}

TEST_CASE("euler_summary checks the low-dimensional counts") {
  const ReducedWord w({1, 2, 3, 1, 2}, 3);
  const SpinWeylElement z = lift_word(w, std::vector<int>{1, 1, -1, 1, -1});
  CHECK(euler_summary(w, z, {3, 2}) == 1);
  CHECK_THROWS_AS(euler_summary(w, z, {4, 2}), Inconsistent);
}
