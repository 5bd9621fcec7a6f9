#include "bruhat/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

void check_letters(std::span<const int> letters, int rank) {
  if (rank < 0) throw InvalidWord("negative rank");
  for (int letter : letters) {
    if (letter < 1 || letter > rank) {
      throw InvalidWord("letter " + std::to_string(letter) + " outside 1.." +
                        std::to_string(rank));
    }
  }
}

int parse_int(std::string_view token, std::string_view what) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("cannot parse " + std::string(what) + " entry '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<int> split_ints(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void collect_words(std::vector<int>& images, std::vector<int>& prefix,
                   std::vector<ReducedWord>& out, int rank) {
  bool done = true;
  for (int j = 1; j <= rank; ++j) {
    if (images[j - 1] > images[j]) {
      done = false;
      std::swap(images[j - 1], images[j]);
      prefix.push_back(j);
      collect_words(images, prefix, out, rank);
      prefix.pop_back();
      std::swap(images[j - 1], images[j]);
    }
  }
  if (done) {
    // prefix was built by peeling first letters, so it is already the word.
    out.emplace_back(prefix, rank);
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (size() > 9 && i > 0) os << ',';
    os << images_[i];
  }
  os << ']';
  return os.str();
}

ReducedWord::ReducedWord(std::vector<int> letters, int rank)
    : letters_(std::move(letters)), rank_(rank) {
  check_letters(letters_, rank_);
  if (!is_reduced(letters_, rank_)) throw InvalidWord("word " + to_string() + " is not reduced");
}

std::string ReducedWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k > 0) os << ',';
    os << letters_[k];
  }
  return os.str();
}

Permutation perm_from_letters(std::span<const int> letters, int rank) {
  check_letters(letters, rank);
  std::vector<int> images(static_cast<std::size_t>(rank + 1));
  std::iota(images.begin(), images.end(), 1);
  // position_of[v] tracks where value v sits so each value swap is O(1).
  std::vector<int> position_of(images.size() + 1);
  for (int i = 0; i <= rank; ++i) position_of[static_cast<std::size_t>(i + 1)] = i;
  for (int letter : letters) {
    auto& p = position_of[static_cast<std::size_t>(letter)];
    auto& q = position_of[static_cast<std::size_t>(letter + 1)];
    std::swap(images[static_cast<std::size_t>(p)], images[static_cast<std::size_t>(q)]);
    std::swap(p, q);
  }
  return Permutation(std::move(images));
}

Permutation perm_from_word(const ReducedWord& word) {
  return perm_from_letters(word.letters(), word.rank());
}

int inversions(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p(i) > p(j)) ++count;
    }
  }
  return count;
}

bool is_reduced(std::span<const int> letters, int rank) {
  return inversions(perm_from_letters(letters, rank)) == static_cast<int>(letters.size());
}

int cycle_count(const Permutation& p) {
  std::vector<bool> seen(static_cast<std::size_t>(p.size() + 1), false);
  int cycles = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = true;
    }
  }
  return cycles;
}

std::set<int> block_set(const Permutation& p) {
  std::set<int> blocks;
  int running_max = 0;
  for (int k = 1; k <= p.rank(); ++k) {
    running_max = std::max(running_max, p(k));
    if (running_max <= k) blocks.insert(k);
  }
  return blocks;
}

std::vector<Face> faces(const ReducedWord& word) {
  std::vector<Face> out;
  const int length = word.length();
  for (int k1 = 1; k1 <= length; ++k1) {
    const int row = word.letter(k1);
    for (int k2 = k1 + 1; k2 <= length; ++k2) {
      if (word.letter(k2) != row) continue;
      Face face{k1, k2, {k1}};
      for (int k = k1 + 1; k < k2; ++k) {
        if (std::abs(word.letter(k) - row) == 1) face.boundary.push_back(k);
      }
      face.boundary.push_back(k2);
      out.push_back(std::move(face));
      break;
    }
  }
  return out;
}

ReducedWord canonical_word(const Permutation& p) {
  std::vector<int> images(p.images().begin(), p.images().end());
  std::vector<int> letters;
  for (std::size_t j = 0; j + 1 < images.size();) {
    if (images[j] > images[j + 1]) {
      std::swap(images[j], images[j + 1]);
      letters.push_back(static_cast<int>(j) + 1);
      j = 0;
    } else {
      ++j;
    }
  }
  return ReducedWord(std::move(letters), p.rank());
}

std::vector<ReducedWord> all_reduced_words(const Permutation& p) {
  std::vector<int> images(p.images().begin(), p.images().end());
  std::vector<int> prefix;
  std::vector<ReducedWord> out;
  collect_words(images, prefix, out, p.rank());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation longest_element(int rank) {
  std::vector<int> images(static_cast<std::size_t>(rank + 1));
  for (int i = 0; i <= rank; ++i) images[static_cast<std::size_t>(i)] = rank + 1 - i;
  return Permutation(std::move(images));
}

std::vector<int> parse_letters(std::string_view text) { return split_ints(text, "word"); }

Permutation parse_permutation(std::string_view text) {
  if (!text.empty() && text.front() == '[') text.remove_prefix(1);
  if (!text.empty() && text.back() == ']') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty permutation");
  std::vector<int> images;
  if (text.find(',') != std::string_view::npos) {
    images = split_ints(text, "permutation");
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad permutation digit '" + std::string(1, c) + "'");
      images.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace bruhat
