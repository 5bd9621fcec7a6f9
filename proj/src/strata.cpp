#include "bruhat/strata.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

std::uint64_t position_bit(int k) { return std::uint64_t{1} << (k - 1); }

std::uint64_t boundary_mask(const Face& f) {
  std::uint64_t m = 0;
  for (int k : f.boundary) m |= position_bit(k);
  return m;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Inverse one-line notation of the running product; appending letter m swaps
// the places of the values m and m+1.
class Walk {
 public:
  explicit Walk(int size) : place_(static_cast<std::size_t>(size) + 1) { std::iota(place_.begin(), place_.end(), 0); }
  bool descent(int m) const { return place_[m + 1] < place_[m]; }
  void apply(int m) { std::swap(place_[m], place_[m + 1]); }
  bool is_identity() const {
    for (std::size_t v = 0; v < place_.size(); ++v) {
      if (place_[v] != static_cast<int>(v)) return false;
    }
    return true;
  }

 private:
  std::vector<int> place_;
};

D2Type type_of(const std::array<int, 4>& positions, const std::array<int, 4>& signs, const ReducedWord& word) {
  if (signs[1] == 2) return D2Type::I;
  const int gap = std::abs(word.letter(positions[0]) - word.letter(positions[1]));
  return gap == 1 ? D2Type::II : D2Type::I;
}

void check_length(const ReducedWord& word) {
  if (word.length() > max_enumeration_length) {
    throw std::invalid_argument("word length " + std::to_string(word.length()) + " exceeds the enumeration limit " +
                                std::to_string(max_enumeration_length));
  }
}

// Adds, for one skeleton, the number of completions landing in each bucket.
void count_completions(const Dim0Enumeration& e, const Preancestry2& p, std::vector<std::int64_t>& counts) {
  const int l = e.word.length();
  std::uint64_t fixed = 0;
  std::uint64_t fixed_neg = 0;
  for (int j = 0; j < 4; ++j) {
    fixed |= position_bit(p.positions[j]);
    if (p.signs[j] < 0) fixed_neg |= position_bit(p.positions[j]);
  }
  const std::uint64_t free = ((std::uint64_t{1} << l) - 1) & ~fixed;
  // Iterate over all submasks of free.
  std::uint64_t sub = 0;
  while (true) {
    ++counts[e.bucket_of[sub | fixed_neg]];
    if (sub == free) break;
    sub = (sub - free) & free;
  }
}

std::vector<std::int64_t> d2_bucket_counts(const Dim0Enumeration& e) {
  std::vector<std::int64_t> counts(e.coset.size(), 0);
  for (const auto& p : enumerate_d2_preancestries(e.word)) count_completions(e, p, counts);
  return counts;
}

std::uint32_t bucket_index(const Dim0Enumeration& e, const SpinWeylElement& z) {
  const auto it = std::lower_bound(e.coset.begin(), e.coset.end(), z);
  if (it == e.coset.end() || *it != z) throw std::invalid_argument("z is not in the coset of the word");
  return static_cast<std::uint32_t>(it - e.coset.begin());
}

}  // namespace

AncestryVector::AncestryVector(std::vector<int> entries) : entries_(std::move(entries)) {
  int balance = 0;
  for (int e : entries_) {
    if (e != -2 && e != -1 && e != 1 && e != 2) throw std::invalid_argument("ancestry entries must be in {-2,-1,+1,+2}");
    if (e == 2) ++balance;
    if (e == -2) --balance;
  }
  if (balance != 0) throw std::invalid_argument("ancestry must have as many -2 as +2 entries");
}

AncestryVector AncestryVector::from_mask(std::uint64_t mask, int length) {
  AncestryVector v;
  v.entries_.resize(static_cast<std::size_t>(length));
  for (int k = 1; k <= length; ++k) v.entries_[static_cast<std::size_t>(k - 1)] = (mask & position_bit(k)) ? -1 : 1;
  return v;
}

int AncestryVector::dim() const { return static_cast<int>(std::count(entries_.begin(), entries_.end(), 2)); }

std::uint64_t AncestryVector::sign_mask() const {
  std::uint64_t m = 0;
  for (int k = 1; k <= size(); ++k) {
    if ((*this)[k] < 0) m |= position_bit(k);
  }
  return m;
}

std::vector<int> AncestryVector::signs() const {
  std::vector<int> out;
  for (int e : entries_) out.push_back(e < 0 ? -1 : 1);
  return out;
}

std::string AncestryVector::to_string(Notation notation) const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    const int e = entries_[i];
    out += e < 0 ? (notation == Notation::unicode ? "−" : "-") : "+";
    out += std::to_string(std::abs(e));
  }
  return out + ")";
}

std::string AncestryVector::to_sign_string() const {
  std::string out;
  for (int e : entries_) out += e < 0 ? '-' : '+';
  return out;
}

AncestryVector parse_ancestry(std::string_view text) {
  std::string body(text);
  if (!body.empty() && body.front() == '(') body.erase(0, 1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::vector<int> entries;
  if (body.empty()) return AncestryVector(std::move(entries));
  if (body.find(',') == std::string::npos &&
      body.find_first_not_of("+-") == std::string::npos) {
    for (char c : body) entries.push_back(c == '-' ? -1 : 1);
    return AncestryVector(std::move(entries));
  }
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t end = std::min(body.find(',', start), body.size());
    const std::string token = body.substr(start, end - start);
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      entries.push_back(value);
    } catch (const std::exception&) {
      throw ParseError("cannot parse ancestry entry '" + token + "'");
    }
    start = end + 1;
  }
  try {
    return AncestryVector(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

AncestryVector click(const AncestryVector& v, const Face& f) {
  if (f.k2 > v.size()) throw NotClickable("face lies outside the vector");
  const int a = v[f.k1];
  const int b = v[f.k2];
  if (std::abs(a) != 1 || std::abs(b) != 1 || a == b) {
    throw NotClickable("entries " + std::to_string(f.k1) + " and " + std::to_string(f.k2) +
                       " do not have opposite signs");
  }
  std::vector<int> entries = v.entries();
  for (int k : f.boundary) entries[static_cast<std::size_t>(k - 1)] = -entries[static_cast<std::size_t>(k - 1)];
  return AncestryVector(std::move(entries));
}

AncestryVector edge_label(const AncestryVector& v, const Face& f) {
  if (f.k2 > v.size() || v[f.k1] != -1 || v[f.k2] != 1) {
    throw NotClickable("edge label needs -1 at k1 and +1 at k2");
  }
  std::vector<int> entries = v.entries();
  entries[static_cast<std::size_t>(f.k1 - 1)] = -2;
  entries[static_cast<std::size_t>(f.k2 - 1)] = 2;
  return AncestryVector(std::move(entries));
}

Dim0Enumeration enumerate_dim0_masks(const ReducedWord& word, int threads) {
  check_length(word);
  Dim0Enumeration e;
  e.word = word;
  e.coset = coset(word);
  e.bucket_size.assign(e.coset.size(), 0);
  std::unordered_map<CliffordElement, std::uint32_t, CliffordHash> index;
  for (std::uint32_t i = 0; i < e.coset.size(); ++i) index.emplace(e.coset[i].value(), i);

  const int l = word.length();
  e.bucket_of.assign(std::size_t{1} << l, 0);
  const int n = word.rank();

  // Prefixes of this many letters are handed out as independent shards.
  threads = std::max(1, threads);
  int shard_depth = 0;
  while (shard_depth < l && (1 << shard_depth) < 8 * threads && shard_depth < 12) ++shard_depth;

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    std::vector<CliffordElement> stack(static_cast<std::size_t>(l) + 1);
    while (!failed) {
      const std::uint64_t shard = next++;
      if (shard >= (std::uint64_t{1} << shard_depth)) return;
      stack[0] = CliffordElement::scalar(n, ScaledDyadic(1));
      for (int k = 1; k <= shard_depth; ++k) {
        const int sign = (shard & position_bit(k)) ? -1 : 1;
        stack[static_cast<std::size_t>(k)] = stack[static_cast<std::size_t>(k - 1)].times_acute(word.letter(k), sign);
      }
      // Iterative depth-first walk over the remaining positions.
      const std::uint64_t rest = std::uint64_t{1} << (l - shard_depth);
      for (std::uint64_t tail = 0; tail < rest; ++tail) {
        // Position k is bit l-k of tail, so only positions from the highest
        // bit that changed since tail-1 need recomputing.
        int from = shard_depth + 1;
        if (tail != 0) from = l - (63 - std::countl_zero(tail ^ (tail - 1)));
        for (int k = from; k <= l; ++k) {
          const int bit = l - k;  // position k <-> bit l-k of tail
          const int sign = (tail >> bit) & 1 ? -1 : 1;
          stack[static_cast<std::size_t>(k)] = stack[static_cast<std::size_t>(k - 1)].times_acute(word.letter(k), sign);
        }
        const auto it = index.find(stack[static_cast<std::size_t>(l)]);
        if (it == index.end()) {
          failed = true;
          return;
        }
        std::uint64_t mask = shard;
        for (int k = shard_depth + 1; k <= l; ++k) {
          if ((tail >> (l - k)) & 1) mask |= position_bit(k);
        }
        e.bucket_of[mask] = it->second;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failed) throw std::logic_error("a lift fell outside the coset of its word");

  for (std::uint32_t b : e.bucket_of) ++e.bucket_size[b];
  return e;
}

std::map<SpinWeylElement, std::vector<AncestryVector>> enumerate_dim0(const ReducedWord& word, int threads) {
  const Dim0Enumeration e = enumerate_dim0_masks(word, threads);
  std::map<SpinWeylElement, std::vector<AncestryVector>> out;
  for (std::uint64_t mask = 0; mask < e.bucket_of.size(); ++mask) {
    out[e.coset[e.bucket_of[mask]]].push_back(AncestryVector::from_mask(mask, word.length()));
  }
  for (auto& [z, list] : out) std::sort(list.begin(), list.end());
  return out;
}

StrataGraph strata_graph(const ReducedWord& word, const SpinWeylElement& z) {
  StrataGraph g;
  g.word = word;
  g.z = z;
  const Dim0Enumeration e = enumerate_dim0_masks(word);
  const std::uint32_t bucket = bucket_index(e, z);

  const int l = word.length();
  for (std::uint64_t mask = 0; mask < e.bucket_of.size(); ++mask) {
    if (e.bucket_of[mask] == bucket) g.vertices.push_back(AncestryVector::from_mask(mask, l));
  }
  std::sort(g.vertices.begin(), g.vertices.end());

  std::map<AncestryVector, std::uint32_t> position;
  for (std::uint32_t i = 0; i < g.vertices.size(); ++i) position.emplace(g.vertices[i], i);
  UnionFind uf(g.vertices.size());
  std::vector<int> degree(g.vertices.size(), 0);
  for (const Face& f : faces(word)) {
    for (const auto& v : g.vertices) {
      if (v[f.k1] != -1 || v[f.k2] != 1) continue;
      AncestryVector w = click(v, f);
      const auto other = position.find(w);
      if (other == position.end()) throw std::logic_error("click left the bucket of its vertex");
      const std::uint32_t a = position.at(v);
      uf.unite(a, other->second);
      ++degree[a];
      ++degree[other->second];
      StrataEdge edge{f, v, w, edge_label(v, f)};
      if (edge.second < edge.first) std::swap(edge.first, edge.second);
      g.edges.push_back(std::move(edge));
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const StrataEdge& a, const StrataEdge& b) {
    return std::tie(a.first, a.second, a.face) < std::tie(b.first, b.second, b.face);
  });
  for (std::uint32_t i = 0; i < g.vertices.size(); ++i) {
    if (uf.find(i) == i) ++g.components;
    if (degree[i] == 0) ++g.isolated;
  }
  return g;
}

const BucketSummary* StrataComplex::find(const SpinWeylElement& z) const {
  const auto it = std::lower_bound(buckets.begin(), buckets.end(), z,
                                   [](const BucketSummary& b, const SpinWeylElement& x) { return b.z < x; });
  return (it != buckets.end() && it->z == z) ? &*it : nullptr;
}

StrataComplex strata_complex(const ReducedWord& word, int threads) {
  const Dim0Enumeration e = enumerate_dim0_masks(word, threads);
  StrataComplex c;
  c.word = word;
  const std::vector<Face> fs = faces(word);
  const std::size_t count = e.bucket_of.size();
  const std::size_t buckets = e.coset.size();

  std::vector<std::int64_t> edges(buckets, 0), comps(buckets, 0), isolated(buckets, 0);
  UnionFind uf(count);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> face_masks;
  for (const Face& f : fs) face_masks.emplace_back(position_bit(f.k1) | position_bit(f.k2), boundary_mask(f));
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    bool touched = false;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::uint64_t ends = mask & face_masks[i].first;
      if (ends == 0 || ends == face_masks[i].first) continue;
      touched = true;
      if (mask & position_bit(fs[i].k1)) {
        const std::uint64_t other = mask ^ face_masks[i].second;
        if (e.bucket_of[other] != e.bucket_of[mask]) throw std::logic_error("click left the bucket of its vertex");
        uf.unite(static_cast<std::uint32_t>(mask), static_cast<std::uint32_t>(other));
        ++edges[e.bucket_of[mask]];
      }
    }
    if (!touched) ++isolated[e.bucket_of[mask]];
  }
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (uf.find(static_cast<std::uint32_t>(mask)) == mask) ++comps[e.bucket_of[mask]];
  }
  for (std::size_t b = 0; b < buckets; ++b) {
    if (e.bucket_size[b] == 0) continue;
    c.buckets.push_back({e.coset[b], e.bucket_size[b], edges[b], comps[b], isolated[b], std::nullopt});
    c.vertices_total += e.bucket_size[b];
    c.edges_total += edges[b];
    c.components_total += comps[b];
  }
  if (word.length() <= max_d2_length) {
    const std::vector<std::int64_t> d2 = d2_bucket_counts(e);
    for (auto& s : c.buckets) {
      const auto it = std::lower_bound(e.coset.begin(), e.coset.end(), s.z);
      s.d2_strata = d2[static_cast<std::size_t>(it - e.coset.begin())];
    }
  }
  return c;
}

std::int64_t components(const ReducedWord& word, const SpinWeylElement& z) { return strata_graph(word, z).components; }

std::int64_t components_total(const ReducedWord& word, int threads) {
  return strata_complex(word, threads).components_total;
}

std::int64_t isolated_count(const ReducedWord& word, const SpinWeylElement& z) { return strata_graph(word, z).isolated; }

void attach_isolated_counts(std::vector<OrbitReport>& orbits, const StrataComplex& complex) {
  for (auto& o : orbits) {
    const BucketSummary* b = complex.find(o.representative);
    o.isolated_count = b ? static_cast<int>(b->isolated) : 0;
  }
}

std::string to_string(D2Type type) {
  switch (type) {
    case D2Type::I:
      return "I";
    case D2Type::II:
      return "II";
    case D2Type::Invalid:
      break;
  }
  return "invalid";
}

D2Type classify_d2(const std::array<int, 4>& positions, const std::array<int, 4>& signs, const ReducedWord& word) {
  for (int j = 0; j < 4; ++j) {
    if (positions[j] < 1 || positions[j] > word.length()) throw std::invalid_argument("position out of range");
    if (j > 0 && positions[j] <= positions[j - 1]) throw std::invalid_argument("positions must increase");
    if (signs[j] != 2 && signs[j] != -2) throw std::invalid_argument("preancestry signs must be -2 or +2");
  }
  if (signs[0] != -2 || std::count(signs.begin(), signs.end(), -2) != 2) return D2Type::Invalid;

  Walk walk(word.rank() + 1);
  int j = 0;
  for (int k = 1; k <= word.length(); ++k) {
    const int m = word.letter(k);
    if (j < 4 && positions[j] == k) {
      if ((signs[j] == 2) != walk.descent(m)) return D2Type::Invalid;
      walk.apply(m);
      ++j;
    } else if (walk.descent(m)) {
      return D2Type::Invalid;
    }
  }
  if (!walk.is_identity()) return D2Type::Invalid;
  return type_of(positions, signs, word);
}

std::vector<Preancestry2> enumerate_d2_preancestries(const ReducedWord& word) {
  std::vector<Preancestry2> out;
  Preancestry2 current;
  const int l = word.length();
  // Depth-first over positions: a descent letter forces +2, otherwise the
  // position is free or (while fewer than two are open) takes -2.
  auto dfs = [&](auto&& self, int k, Walk& walk, int chosen, int negatives) -> void {
    if (k > l) {
      if (chosen == 4 && walk.is_identity()) {
        current.type = type_of(current.positions, current.signs, word);
        out.push_back(current);
      }
      return;
    }
    const int m = word.letter(k);
    if (walk.descent(m)) {
      if (chosen == 4) return;
      current.positions[chosen] = k;
      current.signs[chosen] = 2;
      walk.apply(m);
      self(self, k + 1, walk, chosen + 1, negatives);
      walk.apply(m);
      return;
    }
    self(self, k + 1, walk, chosen, negatives);
    if (negatives < 2 && chosen < 4) {
      current.positions[chosen] = k;
      current.signs[chosen] = -2;
      walk.apply(m);
      self(self, k + 1, walk, chosen + 1, negatives + 1);
      walk.apply(m);
    }
  };
  Walk walk(word.rank() + 1);
  dfs(dfs, 1, walk, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<D2Attribution> d2_attribution(const ReducedWord& word, const SpinWeylElement& z) {
  const Dim0Enumeration e = enumerate_dim0_masks(word);
  const std::uint32_t bucket = bucket_index(e, z);
  std::vector<D2Attribution> out;
  for (const auto& p : enumerate_d2_preancestries(word)) {
    std::vector<std::int64_t> counts(e.coset.size(), 0);
    count_completions(e, p, counts);
    if (counts[bucket] > 0) out.push_back({p, counts[bucket]});
  }
  return out;
}

std::int64_t d2_count(const ReducedWord& word, const SpinWeylElement& z) {
  const Dim0Enumeration e = enumerate_dim0_masks(word);
  return d2_bucket_counts(e)[bucket_index(e, z)];
}

std::int64_t euler_summary(const ReducedWord& word, const SpinWeylElement& z, const std::vector<std::int64_t>& counts) {
  const StrataGraph g = strata_graph(word, z);
  const auto vertices = static_cast<std::int64_t>(g.vertices.size());
  const auto edges = static_cast<std::int64_t>(g.edges.size());
  if (counts.size() < 2 || counts[0] != vertices || counts[1] != edges) {
    throw Inconsistent("stratum counts disagree with the computed graph (" + std::to_string(vertices) +
                       " vertices, " + std::to_string(edges) + " edges)");
  }
  std::int64_t sum = 0;
  for (std::size_t d = 0; d < counts.size(); ++d) sum += (d % 2 ? -1 : 1) * counts[d];
  return sum;
}

}  // namespace bruhat
