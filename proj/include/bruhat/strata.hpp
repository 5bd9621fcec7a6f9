#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bruhat/combinatorics.hpp"
#include "bruhat/spinweyl.hpp"

namespace bruhat {

/// Sequence over {-2,-1,+1,+2} with as many -2 as +2 entries.
class AncestryVector {
 public:
  AncestryVector() = default;
  explicit AncestryVector(std::vector<int> entries);
  /// All-+-1 vector of the given length; bit k-1 of mask set means entry k is -1.
  static AncestryVector from_mask(std::uint64_t mask, int length);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int k) const { return entries_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<int>& entries() const { return entries_; }
  int dim() const;
  /// Signs as a mask (bit k-1 set when entry k is negative).
  std::uint64_t sign_mask() const;
  std::vector<int> signs() const;

  /// "(-1,+2,...)"; the unicode form uses the minus sign.
  std::string to_string(Notation notation = Notation::ascii) const;
  /// "-+-" style, only meaningful for dimension 0.
  std::string to_sign_string() const;

  auto operator<=>(const AncestryVector&) const = default;

 private:
  std::vector<int> entries_;
};

AncestryVector parse_ancestry(std::string_view text);

/// Negates every boundary position; throws NotClickable unless entries k1, k2
/// are +-1 with opposite signs.
AncestryVector click(const AncestryVector& v, const Face& f);
/// Dimension-1 label of the edge leaving v through f (v[k1] must be -1).
AncestryVector edge_label(const AncestryVector& v, const Face& f);

/// All 2^l lifts of a word, bucketed by coset element.
struct Dim0Enumeration {
  ReducedWord word;
  std::vector<SpinWeylElement> coset;     // sorted; bucket ids index into it
  std::vector<std::uint32_t> bucket_of;   // indexed by sign mask
  std::vector<std::int64_t> bucket_size;  // parallel to coset
};

/// Words longer than this are refused (the mask tables would not fit).
inline constexpr int max_enumeration_length = 24;
/// Longest word for which strata_complex also attributes dimension-2 strata.
inline constexpr int max_d2_length = 16;

Dim0Enumeration enumerate_dim0_masks(const ReducedWord& word, int threads = 1);
/// Non-empty buckets only, vertices sorted.
std::map<SpinWeylElement, std::vector<AncestryVector>> enumerate_dim0(const ReducedWord& word, int threads = 1);

struct StrataEdge {
  Face face;
  AncestryVector first;   // smaller endpoint
  AncestryVector second;
  AncestryVector label;

  friend bool operator==(const StrataEdge&, const StrataEdge&) = default;
};

struct StrataGraph {
  ReducedWord word;
  SpinWeylElement z;
  std::vector<AncestryVector> vertices;  // sorted
  std::vector<StrataEdge> edges;         // sorted by endpoints
  std::int64_t components = 0;
  std::int64_t isolated = 0;
};

StrataGraph strata_graph(const ReducedWord& word, const SpinWeylElement& z);

struct BucketSummary {
  SpinWeylElement z;
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t components = 0;
  std::int64_t isolated = 0;
  std::optional<std::int64_t> d2_strata;  // only computed for words of length <= max_d2_length
};

/// Counts for every non-empty bucket of the coset, computed on sign masks.
struct StrataComplex {
  ReducedWord word;
  std::vector<BucketSummary> buckets;  // sorted by z
  std::int64_t vertices_total = 0;
  std::int64_t edges_total = 0;
  std::int64_t components_total = 0;

  const BucketSummary* find(const SpinWeylElement& z) const;
};

StrataComplex strata_complex(const ReducedWord& word, int threads = 1);

std::int64_t components(const ReducedWord& word, const SpinWeylElement& z);
std::int64_t components_total(const ReducedWord& word, int threads = 1);
std::int64_t isolated_count(const ReducedWord& word, const SpinWeylElement& z);

/// Fills OrbitReport::isolated_count from a computed complex.
void attach_isolated_counts(std::vector<OrbitReport>& orbits, const StrataComplex& complex);

enum class D2Type { I, II, Invalid };
std::string to_string(D2Type type);

struct Preancestry2 {
  std::array<int, 4> positions{};  // 1-based, increasing
  std::array<int, 4> signs{};      // -2 or +2
  D2Type type = D2Type::Invalid;

  auto operator<=>(const Preancestry2&) const = default;
};

/// Valid skeletons of dimension-2 ancestries, sorted by positions then signs.
std::vector<Preancestry2> enumerate_d2_preancestries(const ReducedWord& word);
/// Throws std::invalid_argument on a malformed quadruple.
D2Type classify_d2(const std::array<int, 4>& positions, const std::array<int, 4>& signs, const ReducedWord& word);

struct D2Attribution {
  Preancestry2 skeleton;
  std::int64_t strata = 0;

  friend bool operator==(const D2Attribution&, const D2Attribution&) = default;
};

/// Dimension-2 strata of BL_z: completions of a preancestry by +-1 entries
/// whose sign vector lifts to z. Only skeletons with at least one completion
/// are listed.
std::vector<D2Attribution> d2_attribution(const ReducedWord& word, const SpinWeylElement& z);
std::int64_t d2_count(const ReducedWord& word, const SpinWeylElement& z);

/// Alternating sum of per-dimension stratum counts; throws Inconsistent when
/// the dimension 0 or 1 counts disagree with the computed graph.
std::int64_t euler_summary(const ReducedWord& word, const SpinWeylElement& z,
                           const std::vector<std::int64_t>& counts);

}  // namespace bruhat
