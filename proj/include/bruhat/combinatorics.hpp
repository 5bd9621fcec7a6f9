#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

/// A permutation of {1, ..., size} in one-line notation: images()[i-1] = i^sigma.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  /// Number of adjacent generators a_1..a_n, i.e. size() - 1.
  int rank() const { return size() - 1; }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// "[45132]" when size() <= 9, "[1,2,...,10]" otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Letters (i_1, ..., i_l) with 1 <= i_k <= rank, guaranteed reduced.
class ReducedWord {
 public:
  ReducedWord() = default;
  /// Throws InvalidWord when a letter is out of range or the word is not reduced.
  ReducedWord(std::vector<int> letters, int rank);

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(letters_.size()); }
  std::span<const int> letters() const { return letters_; }
  /// 1-based access, matching position indices k in reports.
  int letter(int k) const { return letters_.at(static_cast<std::size_t>(k - 1)); }

  std::string to_string() const;

  auto operator<=>(const ReducedWord&) const = default;

 private:
  std::vector<int> letters_;
  int rank_ = 0;
};

/// Bounded region of the wiring diagram between consecutive crossings k1 < k2 on
/// the same row. Positions are 1-based.
struct Face {
  int k1 = 0;
  int k2 = 0;
  std::vector<int> boundary;

  auto operator<=>(const Face&) const = default;
};

/// Product a_{i_1} ... a_{i_l} with a_i = (i, i+1). Letters are applied as value
/// swaps from left to right, so (2,1,3,2,4,3,2) gives [45132].
Permutation perm_from_letters(std::span<const int> letters, int rank);
Permutation perm_from_word(const ReducedWord& word);

int inversions(const Permutation& p);
bool is_reduced(std::span<const int> letters, int rank);
int cycle_count(const Permutation& p);

/// Entries k in {1..n} at which p blocks: j <= k implies j^p <= k.
std::set<int> block_set(const Permutation& p);

std::vector<Face> faces(const ReducedWord& word);

/// Reduced word obtained by repeatedly taking the leftmost descent.
ReducedWord canonical_word(const Permutation& p);

/// Every reduced word of p, sorted lexicographically.
std::vector<ReducedWord> all_reduced_words(const Permutation& p);

/// All permutations of {1..size} in lexicographic order.
std::vector<Permutation> all_permutations(int size);

/// Longest element of S_{rank+1}.
Permutation longest_element(int rank);

/// "2,3,1,2" -> {2,3,1,2}. The empty string is the empty word.
std::vector<int> parse_letters(std::string_view text);
/// "45132", "[45132]" or "1,2,...,10".
Permutation parse_permutation(std::string_view text);

}  // namespace bruhat
