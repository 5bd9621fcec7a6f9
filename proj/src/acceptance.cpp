#include "bruhat/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "bruhat/clifford.hpp"
#include "bruhat/combinatorics.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/matrixland.hpp"
#include "bruhat/spinweyl.hpp"
#include "bruhat/strata.hpp"

namespace bruhat {

namespace {

// Records the first failed expectation together with a count of checks made.
class Checker {
 public:
  bool expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
    return ok;
  }
  template <typename T>
  bool equal(const T& got, const T& want, const std::string& what) {
    return expect(got == want, what);
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  long checks() const { return checks_; }
  void note(std::string s) { summary_ = std::move(s); }
  const std::string& summary() const { return summary_; }

 private:
  long checks_ = 0;
  std::string failure_;
  std::string summary_;
};

ReducedWord word(std::vector<int> letters, int rank) { return ReducedWord(std::move(letters), rank); }

const ReducedWord& word_4312() {
  static const ReducedWord w = word({1, 2, 3, 1, 2}, 3);
  return w;
}
const ReducedWord& word_45132() {
  static const ReducedWord w = word({2, 3, 1, 2, 4, 3, 2}, 4);
  return w;
}
const ReducedWord& word_43521() {
  static const ReducedWord w = word({1, 3, 2, 1, 4, 3, 2, 1}, 4);
  return w;
}
const ReducedWord& word_eta4() {
  static const ReducedWord w = word({1, 2, 1, 3, 2, 1, 4, 3, 2, 1}, 4);
  return w;
}

SpinWeylElement z1_4312() { return lift_word(word_4312(), std::vector<int>{1, 1, -1, 1, -1}); }

SpinWeylElement ahat_times(int i, const SpinWeylElement& z) {
  return SpinWeylElement::trusted(generator_ahat(i, z.rank()) * z.value());
}

// Element sum c_S ahat_S built by multiplying generators, independently of
// ahat_expansion.
CliffordElement from_ahat_terms(int rank, const std::vector<std::pair<std::vector<int>, int>>& terms,
                                const ScaledDyadic& scale) {
  CliffordElement out(rank);
  for (const auto& [subset, sign] : terms) {
    CliffordElement m = CliffordElement::scalar(rank, ScaledDyadic(1));
    for (int i : subset) m = m * generator_ahat(i, rank);
    out += m * (scale * ScaledDyadic(sign));
  }
  return out;
}

int threads_available() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string to_s(const ScaledDyadic& x) { return x.to_string(Notation::ascii); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Relations among the ahat_i, units of the spin group and the projection Pi.
void algebra_suite(Checker& c, CheckLevel level) {
  const int max_n = level == CheckLevel::full ? 4 : 3;
  long products = 0;
  for (int n = 1; n <= max_n; ++n) {
    const CliffordElement one = CliffordElement::scalar(n, ScaledDyadic(1));
    for (int i = 1; i <= n; ++i) {
      const CliffordElement ai = generator_ahat(i, n);
      c.expect(ai * ai == -one, "ahat_" + std::to_string(i) + "^2 != -1 at n=" + std::to_string(n));
      for (int j = i + 1; j <= n; ++j) {
        const CliffordElement aj = generator_ahat(j, n);
        if (j == i + 1) c.expect(ai * aj == -(aj * ai), "adjacent ahat do not anticommute");
        else c.expect(ai * aj == aj * ai, "distant ahat do not commute");
      }
    }
    std::vector<CliffordElement> gens;
    for (int i = 1; i <= n; ++i) {
      gens.push_back(generator_acute(i, n, 1));
      gens.push_back(generator_acute(i, n, -1));
    }
    std::vector<CliffordElement> level_items{one};
    for (int length = 0; length <= 4; ++length) {
      std::vector<CliffordElement> next;
      for (const auto& z : level_items) {
        ++products;
        c.expect(z * reversal(z) == one, "z*rev(z) != 1 for a product of length " + std::to_string(length));
        c.expect(z.norm_squared() == ScaledDyadic(1), "product of generators is not unit norm");
        if (length == 4) continue;
        const auto pz = pi_matrix(z);
        for (const auto& g : gens) {
          const CliffordElement zg = z * g;
          c.expect(pi_matrix(zg) == pz * pi_matrix(g), "Pi(zg) != Pi(z)Pi(g)");
          next.push_back(zg);
        }
      }
      level_items = std::move(next);
    }
  }
  c.note(std::to_string(products) + " generator products up to length 4, n <= " + std::to_string(max_n));
}

// 2. All reduced words of a permutation have the same all-plus lift.
void braid_suite(Checker& c, CheckLevel) {
  long words = 0;
  for (const auto& sigma : all_permutations(4)) {
    const auto ws = all_reduced_words(sigma);
    const SpinWeylElement first = acute_lift(ws.front());
    for (const auto& w : ws) {
      ++words;
      c.expect(acute_lift(w) == first, "lifts differ for words of " + sigma.to_string() + ": " + w.to_string());
    }
  }
  c.note(std::to_string(words) + " reduced words over S_4");
}

void expect_expansion(Checker& c, const std::string& name, const SpinWeylElement& z,
                      const std::vector<std::pair<std::vector<int>, int>>& terms, const ScaledDyadic& scale,
                      const std::string& rendered) {
  const CliffordElement want = from_ahat_terms(z.rank(), terms, scale);
  c.expect(z.value() == want, name + " differs from the displayed expansion: got " +
                                  to_ahat_string(z.value(), Notation::ascii));
  c.equal(ahat_expansion(z.value()).size(), terms.size(), name + " has the wrong number of terms");
  c.equal(to_ahat_string(z.value()), rendered, name + " renders differently");
}

// 3. Displayed expansions and the coset of the longest element of S_5.
void golden_suite(Checker& c, CheckLevel) {
  const ScaledDyadic r2over4 = ScaledDyadic::from_mantissa(1, 3);  // sqrt(2)/4 = 1/(2 sqrt 2)
  expect_expansion(c, "[4312]", acute_lift(word_4312()),
                   {{{}, -1}, {{1}, 1}, {{2}, 1}, {{1, 2}, 1}, {{3}, 1}, {{1, 3}, 1}, {{2, 3}, 1}, {{1, 2, 3}, -1}},
                   r2over4, "(−1+â₁+â₂+â₁â₂+â₃+â₁â₃+â₂â₃−â₁â₂â₃)/(2√2)");
  expect_expansion(c, "z1", z1_4312(),
                   {{{}, 1}, {{1}, 1}, {{2}, 1}, {{1, 2}, -1}, {{3}, 1}, {{1, 3}, -1}, {{2, 3}, -1}, {{1, 2, 3}, -1}},
                   r2over4, "(1+â₁+â₂−â₁â₂+â₃−â₁â₃−â₂â₃−â₁â₂â₃)/(2√2)");
  expect_expansion(c, "[45132]", acute_lift(word_45132()),
                   {{{}, -1},
                    {{1, 2}, 1},
                    {{3}, 1},
                    {{1, 2, 3}, -1},
                    {{1, 4}, 1},
                    {{2, 4}, 1},
                    {{1, 3, 4}, -1},
                    {{2, 3, 4}, -1}},
                   r2over4, "(−1+â₁â₂+â₃−â₁â₂â₃+â₁â₄+â₂â₄−â₁â₃â₄−â₂â₃â₄)/(2√2)");
  expect_expansion(c, "[43521]", acute_lift(word_43521()),
                   {{{}, -1},
                    {{1}, -1},
                    {{2}, 1},
                    {{1, 2}, -1},
                    {{3}, -1},
                    {{1, 3}, 1},
                    {{2, 3}, -1},
                    {{1, 2, 3}, -1},
                    {{4}, -1},
                    {{1, 4}, 1},
                    {{2, 4}, 1},
                    {{1, 2, 4}, 1},
                    {{3, 4}, -1},
                    {{1, 3, 4}, -1},
                    {{2, 3, 4}, -1},
                    {{1, 2, 3, 4}, 1}},
                   ScaledDyadic::from_mantissa(1, 4),
                   "(−1−â₁+â₂−â₁â₂−â₃+â₁â₃−â₂â₃−â₁â₂â₃−â₄+â₁â₄+â₂â₄+â₁â₂â₄−â₃â₄−â₁â₃â₄−â₂â₃â₄+â₁â₂â₃â₄)/4");

  // Four families of four monomials, each with an even number of minus signs.
  const std::vector<std::vector<std::vector<int>>> families = {
      {{}, {2, 3}, {1, 4}, {1, 2, 3, 4}},
      {{1}, {1, 2, 3}, {4}, {2, 3, 4}},
      {{1, 2}, {1, 3}, {2, 4}, {3, 4}},
      {{2}, {3}, {1, 2, 4}, {1, 3, 4}},
  };
  std::set<SpinWeylElement> listed;
  for (const auto& family : families) {
    for (int signs = 0; signs < 16; ++signs) {
      if (std::popcount(static_cast<unsigned>(signs)) % 2) continue;
      std::vector<std::pair<std::vector<int>, int>> terms;
      for (int k = 0; k < 4; ++k) terms.emplace_back(family[static_cast<std::size_t>(k)], (signs >> k & 1) ? -1 : 1);
      listed.insert(SpinWeylElement::trusted(from_ahat_terms(4, terms, ScaledDyadic::from_mantissa(1, 2))));
    }
  }
  const auto cs = coset(word_eta4());
  c.equal(listed.size(), std::size_t{32}, "the displayed listing does not have 32 elements");
  c.expect(std::set<SpinWeylElement>(cs.begin(), cs.end()) == listed, "coset of eta differs from the displayed listing");
  int half = 0, minus_half = 0, zero = 0;
  for (const auto& z : cs) {
    const ScaledDyadic re = real_part(z.value());
    if (re == ScaledDyadic::from_mantissa(1, 2)) ++half;
    else if (re == ScaledDyadic::from_mantissa(-1, 2)) ++minus_half;
    else if (re.is_zero()) ++zero;
  }
  c.expect(half == 4 && minus_half == 4 && zero == 24, "real parts over the eta coset are not 4/4/24");
  c.note("4 expansions and the 32-element eta coset");
}

void check_n_against_enumeration(Checker& c, const ReducedWord& w) {
  const Dim0Enumeration e = enumerate_dim0_masks(w);
  std::int64_t total = 0;
  for (std::size_t b = 0; b < e.coset.size(); ++b) {
    const std::int64_t n = n_of_z(w, e.coset[b]);
    total += n;
    c.expect(n == e.bucket_size[b], "N(z) = " + std::to_string(n) + " but " + std::to_string(e.bucket_size[b]) +
                                        " sign vectors lift to z for word " + w.to_string());
  }
  c.expect(total == (std::int64_t{1} << w.length()), "N(z) does not sum to 2^l for word " + w.to_string());
}

// 4. Closed formula for N(z) against exhaustive enumeration.
void n_formula_suite(Checker& c, CheckLevel) {
  int perms = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& sigma : all_permutations(n + 1)) {
      ++perms;
      check_n_against_enumeration(c, canonical_word(sigma));
    }
  }
  for (const auto* w : {&word_45132(), &word_43521(), &word_eta4()}) check_n_against_enumeration(c, *w);
  // Membership branch: [213] blocks at 2 and ahat_2 acute_1 lies outside H~_{2}.
  const ReducedWord w213 = word({1}, 2);
  const SpinWeylElement z = ahat_times(2, acute_lift(w213));
  c.equal(n_of_z(w213, z), std::int64_t{0}, "N(ahat_2 acute_1) != 0 for [213]");
  const auto buckets = enumerate_dim0(w213);
  c.expect(buckets.find(z) == buckets.end(), "a sign vector lifts to ahat_2 acute_1");
  c.note(std::to_string(perms) + " permutations with n <= 3, three words with n = 4, and the [213] branch");
}

struct OrbitRowExpect {
  std::int64_t size;
  ScaledDyadic re;
  std::int64_t n;
  int c_anti;
};

void check_orbits(Checker& c, const std::string& name, const ReducedWord& w, std::vector<OrbitRowExpect> want) {
  auto orbits = orbit_decomposition(w);
  const int n = w.rank();
  const int cycles = cycle_count(perm_from_word(w));
  std::vector<OrbitRowExpect> got;
  std::size_t covered = 0;
  for (const auto& o : orbits) {
    got.push_back({static_cast<std::int64_t>(o.members.size()), o.re_value, o.n_value, o.c_anti});
    covered += o.members.size();
    const std::int64_t law = std::int64_t{1} << (n - cycles + 1 + o.c_anti);
    c.expect(static_cast<std::int64_t>(o.members.size()) == law, name + ": orbit size breaks the 2^(n-c+1) law");
  }
  c.expect(covered == coset(w).size(), name + ": orbits do not partition the coset");
  auto key = [](const OrbitRowExpect& r) { return std::make_tuple(r.re, r.size, r.n, r.c_anti); };
  auto by_key = [&](const OrbitRowExpect& a, const OrbitRowExpect& b) { return key(a) < key(b); };
  std::sort(got.begin(), got.end(), by_key);
  std::sort(want.begin(), want.end(), by_key);
  bool same = got.size() == want.size();
  for (std::size_t i = 0; same && i < got.size(); ++i) same = key(got[i]) == key(want[i]);
  std::ostringstream seen;
  for (const auto& r : got) seen << " (" << r.size << ", " << to_s(r.re) << ", " << r.n << ", " << r.c_anti << ")";
  c.expect(same, name + ": orbit table differs, got" + seen.str());
}

// 5. Orbit decompositions of the three worked examples.
void orbit_suite(Checker& c, CheckLevel) {
  const ScaledDyadic q = ScaledDyadic::from_mantissa(1, 3);
  check_orbits(c, "[45132]", word_45132(), {{8, -q, 2, 0}, {16, 0, 4, 1}, {8, q, 6, 0}});
  const ScaledDyadic quarter = ScaledDyadic::from_mantissa(1, 4);
  check_orbits(c, "[43521]", word_43521(), {{16, -quarter, 6, 0}, {16, quarter, 10, 0}});
  const ScaledDyadic half = ScaledDyadic::from_mantissa(1, 2);
  check_orbits(c, "eta", word_eta4(), {{8, 0, 32, 1}, {4, half, 40, 0}, {4, -half, 24, 0}, {8, 0, 32, 1}, {8, 0, 32, 1}});

  // The five named representatives lie in five distinct orbits with the listed data.
  const ReducedWord& w = word_eta4();
  const SpinWeylElement eta = acute_lift(w);
  const std::vector<std::pair<SpinWeylElement, std::pair<std::int64_t, std::int64_t>>> named = {
      {eta, {8, 32}},
      {ahat_times(1, eta), {4, 40}},
      {-ahat_times(1, eta), {4, 24}},
      {ahat_times(2, eta), {8, 32}},
      {ahat_times(1, ahat_times(2, eta)), {8, 32}},
  };
  std::set<SpinWeylElement> representatives;
  for (const auto& [z, data] : named) {
    const OrbitReport o = orbit(w, z);
    representatives.insert(o.representative);
    c.expect(static_cast<std::int64_t>(o.members.size()) == data.first && o.n_value == data.second,
             "eta: orbit of " + to_ahat_string(z.value(), Notation::ascii) + " has size " +
                 std::to_string(o.members.size()) + " and N " + std::to_string(o.n_value));
  }
  c.equal(representatives.size(), std::size_t{5}, "eta: named elements share an orbit");
  c.note("[45132], [43521] and eta tables");
}

void check_graph(Checker& c, const std::string& name, const ReducedWord& w, const SpinWeylElement& z,
                 std::int64_t vertices, std::int64_t edges, std::int64_t comps, std::int64_t isolated = -1) {
  const StrataGraph g = strata_graph(w, z);
  std::ostringstream got;
  got << g.vertices.size() << "/" << g.edges.size() << "/" << g.components << " isolated " << g.isolated;
  bool ok = static_cast<std::int64_t>(g.vertices.size()) == vertices && g.components == comps &&
            (edges < 0 || static_cast<std::int64_t>(g.edges.size()) == edges) && (isolated < 0 || g.isolated == isolated);
  c.expect(ok, name + ": got " + got.str());
}

// 6. Vertex, edge and component counts of individual 1-skeleta.
void graph_suite(Checker& c, CheckLevel) {
  const StrataGraph g1 = strata_graph(word_4312(), z1_4312());
  c.expect(g1.vertices.size() == 3 && g1.edges.size() == 2 && g1.components == 1,
           "[4312] z1: expected 3 vertices, 2 edges and 1 component");
  // The listed vectors are those whose lift is z1 after flipping every sign, which is the
  // plain bucket of the conjugate lift of (-1,-1,+1,-1,+1).
  const StrataGraph g = strata_graph(word_4312(), lift_word(word_4312(), std::vector<int>{-1, -1, 1, -1, 1}));
  const std::vector<AncestryVector> vertices = {AncestryVector({-1, -1, 1, -1, 1}), AncestryVector({-1, 1, -1, 1, -1}),
                                                AncestryVector({1, -1, -1, -1, -1})};
  c.expect(g.vertices == vertices, "[4312] z1: vertex list differs");
  c.expect(g.edges.size() == 2 && g.components == 1, "[4312] z1: expected 2 edges and 1 component");
  std::set<AncestryVector> labels;
  for (const auto& e : g.edges) labels.insert(e.label);
  c.expect(labels == std::set<AncestryVector>{AncestryVector({-1, -2, 1, -1, 2}), AncestryVector({-2, 1, -1, 2, -1})},
           "[4312] z1: edge labels differ");

  const SpinWeylElement s = acute_lift(word_45132());
  check_graph(c, "[45132] ahat_1 acute", word_45132(), ahat_times(1, s), 4, 3, 1);
  check_graph(c, "[45132] -acute", word_45132(), -s, 6, 6, 1);
  const auto d2 = d2_attribution(word_45132(), -s);
  c.expect(d2.size() == 1 && d2.front().skeleton.type == D2Type::II &&
               d2.front().skeleton.positions == std::array<int, 4>{1, 2, 6, 7},
           "[45132] -acute: expected a single type-II preancestry at (1,2,6,7)");
  check_graph(c, "[45132] acute", word_45132(), s, 2, 0, 2);

  const SpinWeylElement eta = acute_lift(word_eta4());
  check_graph(c, "eta acute", word_eta4(), eta, 32, 48, 3, 2);
  check_graph(c, "eta ahat_1 acute", word_eta4(), ahat_times(1, eta), 40, 72, 1);
  check_graph(c, "eta -ahat_1 acute", word_eta4(), -ahat_times(1, eta), 24, -1, 2);
  c.note("seven 1-skeleta");
}

// 7. Component totals, with wall-clock limits on the longest elements.
void component_suite(Checker& c, CheckLevel level) {
  const int threads = threads_available();
  const std::int64_t eta_totals[] = {2, 6, 20, 52, 96};
  const int max_n = level == CheckLevel::full ? 5 : 4;
  std::ostringstream times;
  for (int n = 1; n <= max_n; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const std::int64_t total = components_total(canonical_word(longest_element(n)), threads);
    const double secs = seconds_since(start);
    times << " n=" << n << ":" << total;
    c.expect(total == eta_totals[n - 1], "eta at n=" + std::to_string(n) + " has " + std::to_string(total) +
                                             " components");
    if (n == 4) c.expect(secs <= 1.0, "eta at n=4 took " + std::to_string(secs) + " s (limit 1.0 s)");
    if (n == 5) c.expect(secs < 60.0, "eta at n=5 took " + std::to_string(secs) + " s (limit 60 s)");
  }
  c.equal(components_total(word_45132(), threads), std::int64_t{40}, "[45132] does not have 40 components");
  c.equal(components_total(word_43521(), threads), std::int64_t{48}, "[43521] does not have 48 components");
  c.note("eta totals" + times.str() + "; [45132] 40; [43521] 48");
}

// 8. Alternating sums of the published stratum counts.
void euler_suite(Checker& c, CheckLevel) {
  const SpinWeylElement eta = acute_lift(word_eta4());
  c.equal(euler_summary(word_eta4(), eta, {32, 48, 22, 3}), components(word_eta4(), eta),
          "eta acute: Euler sum differs from the component count");
  c.equal(euler_summary(word_eta4(), eta, {32, 48, 22, 3}), std::int64_t{3}, "eta acute: Euler sum != 3");
  const SpinWeylElement a1 = ahat_times(1, eta);
  c.equal(euler_summary(word_eta4(), a1, {40, 72, 42, 10, 1}), components(word_eta4(), a1),
          "eta ahat_1 acute: Euler sum differs from the component count");
  c.equal(euler_summary(word_eta4(), a1, {40, 72, 42, 10, 1}), std::int64_t{1}, "eta ahat_1 acute: Euler sum != 1");
  c.equal(euler_summary(word_4312(), z1_4312(), {3, 2}), std::int64_t{1}, "[4312] z1: Euler sum != 1");
  // The dimension-2 counts are also reproduced by the preancestry attribution.
  c.equal(d2_count(word_eta4(), eta), std::int64_t{22}, "eta acute: dimension-2 count != 22");
  c.equal(d2_count(word_eta4(), a1), std::int64_t{42}, "eta ahat_1 acute: dimension-2 count != 42");
  c.note("three Euler sums and two dimension-2 counts");
}

Rational random_rational(std::mt19937_64& rng, int sign) {
  if (sign == 0) return 0;
  std::uniform_int_distribution<int> num(1, 50), den(1, 50);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return sign < 0 ? Rational(-q) : q;
}

// 9. Exact factorizations and Bruhat cell detection.
void matrix_suite(Checker& c, CheckLevel level) {
  RationalMatrix L0 = RationalMatrix::identity(5);
  const std::vector<std::vector<Rational>> rows = {
      {1}, {-3, 1}, {-3, Rational(-3, 2), 1}, {0, -7, 3, 1}, {0, 4, -2, -2, 1}};
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t col = 0; col < rows[r].size(); ++col) L0(r, col) = rows[r][col];
  const std::vector<Rational> t0 = {1, 2, -3, Rational(-1, 2), -2, 1, -2};
  c.equal(bruhat_perm(L0), parse_permutation("45132"), "bruhat_perm(L0) != [45132]");
  const auto t = factor(word_45132(), L0);
  c.expect(t == t0, "factor(L0) does not recover t");
  const std::vector<int> eps0 = {1, 1, -1, -1, -1, 1, -1};
  std::vector<int> signs;
  for (const auto& x : t) signs.push_back(sgn(x));
  c.expect(signs == eps0, "signs of t differ from eps0");
  c.expect(product_from(word_45132(), t0) == L0, "product_from(t0) != L0");

  // [4312]: the product lies in the cell exactly when t1t2t3, t2t4, t3t5 are non-zero.
  const int samples = level == CheckLevel::full ? 1000 : 100;
  const Permutation target = parse_permutation("4312");
  std::mt19937_64 rng(4312);
  long cases = 0;
  for (int code = 0; code < 243; ++code) {
    std::array<int, 5> pattern{};
    for (int k = 0, x = code; k < 5; ++k, x /= 3) pattern[static_cast<std::size_t>(k)] = x % 3 - 1;
    const bool predicted = pattern[0] * pattern[1] * pattern[2] != 0 && pattern[1] * pattern[3] != 0 &&
                           pattern[2] * pattern[4] != 0;
    for (int s = 0; s < samples; ++s) {
      std::vector<Rational> ts;
      for (int k : pattern) ts.push_back(random_rational(rng, k));
      const bool in_cell = bruhat_perm(product_from(word_4312(), ts)) == target;
      ++cases;
      if (!c.expect(in_cell == predicted, "[4312] membership mismatch for sign case " + std::to_string(code))) return;
    }
  }
  try {
    factor(word_4312(), RationalMatrix::identity(4));
    c.expect(false, "factor(I) succeeded");
  } catch (const NotFactorizable&) {
  }
  c.note("L0 golden data and " + std::to_string(cases) + " [4312] samples over 243 sign cases");
}

// 10. Transversal polynomials and the rotation product z7.
void transversal_suite(Checker& c, CheckLevel) {
  c.expect(p_values(0, 0) == std::array<Rational, 3>{0, 0, 0}, "p(0,0) != (0,0,0)");
  c.expect(p_values(1, 1) == std::array<Rational, 3>{1, 1, -5}, "p(1,1) != (1,1,-5)");
  const auto& p = transversal_polynomials();
  const std::array<std::array<Rational, 2>, 3> grads = {p.p1.gradient(0, 0), p.p2.gradient(0, 0), p.p3.gradient(0, 0)};
  c.expect(grads[2] == std::array<Rational, 2>{-20, 16}, "grad p3(0,0) != (-20,16)");
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      c.expect(grads[a][0] * grads[b][1] - grads[a][1] * grads[b][0] != 0, "gradients are not pairwise independent");
  const std::vector<Rational> grid = {-1, Rational(-1, 2), 0, Rational(1, 2), 1};
  for (const auto& x1 : grid) {
    for (const auto& x2 : grid) {
      const RationalMatrix z = transversal_z7(x1, x2);
      c.expect(z * z.transpose() == RationalMatrix::identity(5), "z7 is not orthogonal at a grid point");
      c.expect(determinant(z) == 1, "det z7 != 1 at a grid point");
    }
  }
  c.note("polynomials at the origin and z7 on a 5x5 grid");
}

ReducedWord random_reduced_word(std::mt19937_64& rng, int max_length) {
  std::uniform_int_distribution<int> rank_dist(1, 5);
  const int n = rank_dist(rng);
  const int longest = n * (n + 1) / 2;
  std::uniform_int_distribution<int> len_dist(1, std::min(max_length, longest));
  const int target = len_dist(rng);
  std::uniform_int_distribution<int> letter(1, n);
  std::vector<int> letters;
  while (static_cast<int>(letters.size()) < target) {
    letters.push_back(letter(rng));
    if (!is_reduced(letters, n)) letters.pop_back();
  }
  return ReducedWord(std::move(letters), n);
}

// 11. Clicks are involutions that preserve the lift.
void click_suite(Checker& c, CheckLevel level) {
  const int max_n = level == CheckLevel::full ? 4 : 3;
  long words = 0, clicks = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& sigma : all_permutations(n + 1)) {
      if (inversions(sigma) > 8) continue;
      for (const auto& w : all_reduced_words(sigma)) {
        ++words;
        const Dim0Enumeration e = enumerate_dim0_masks(w);
        const auto fs = faces(w);
        for (std::uint64_t mask = 0; mask < e.bucket_of.size(); ++mask) {
          const AncestryVector v = AncestryVector::from_mask(mask, w.length());
          for (const Face& f : fs) {
            if (v[f.k1] == v[f.k2]) continue;
            ++clicks;
            const AncestryVector u = click(v, f);
            c.expect(click(u, f) == v, "click is not an involution on " + w.to_string());
            c.expect(e.bucket_of[u.sign_mask()] == e.bucket_of[mask], "click changes z on " + w.to_string());
          }
        }
      }
    }
  }
  const int samples = level == CheckLevel::full ? 10000 : 1000;
  std::mt19937_64 rng(11);
  int sampled = 0;
  while (sampled < samples) {
    const ReducedWord w = random_reduced_word(rng, 15);
    const auto fs = faces(w);
    if (fs.empty()) continue;
    const Face& f = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
    std::vector<int> entries(static_cast<std::size_t>(w.length()));
    for (int& x : entries) x = (rng() & 1) ? 1 : -1;
    entries[static_cast<std::size_t>(f.k2 - 1)] = -entries[static_cast<std::size_t>(f.k1 - 1)];
    const AncestryVector v(entries);
    const AncestryVector u = click(v, f);
    c.expect(click(u, f) == v, "sampled click is not an involution on " + w.to_string());
    c.expect(lift_word(w, u.signs()) == lift_word(w, v.signs()), "sampled click changes z on " + w.to_string());
    ++sampled;
  }
  c.note(std::to_string(clicks) + " clicks over " + std::to_string(words) + " words with l <= 8 and n <= " +
         std::to_string(max_n) + ", plus " + std::to_string(sampled) + " samples with l <= 15");
}

struct Criterion {
  const char* title;
  void (*run)(Checker&, CheckLevel);
};

const Criterion criteria[criterion_count] = {
    {"algebra suite", algebra_suite},
    {"braid and word independence", braid_suite},
    {"golden expansions", golden_suite},
    {"N(z) against enumeration", n_formula_suite},
    {"orbit tables", orbit_suite},
    {"per-z 1-skeleta", graph_suite},
    {"component totals", component_suite},
    {"Euler cross-checks", euler_suite},
    {"matrix factorization", matrix_suite},
    {"transversal data", transversal_suite},
    {"click properties", click_suite},
};

}  // namespace

CriterionResult run_criterion(int id, CheckLevel level) {
  if (id < 1 || id > criterion_count) throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
  const Criterion& crit = criteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = crit.title;
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  try {
    crit.run(c, level);
    r.passed = c.ok();
    r.detail = c.ok() ? c.summary() : c.failure();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = seconds_since(start);
  return r;
}

std::vector<CriterionResult> run_acceptance(CheckLevel level, const std::vector<int>& only,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<int> ids = only;
  if (ids.empty()) {
    for (int i = 1; i <= criterion_count; ++i) ids.push_back(i);
  }
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(run_criterion(id, level));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  criterion " + (r.id < 10 ? " " : "") + std::to_string(r.id) +
         "  " + r.title + " (" + time + "): " + r.detail;
}

}  // namespace bruhat
