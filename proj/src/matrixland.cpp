#include "bruhat/matrixland.hpp"

#include <sstream>
#include <stdexcept>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

void check_index(int i, int rank) {
  if (i < 1 || i > rank) {
    throw std::invalid_argument("index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
  }
}

// Solves A x = b for the last coordinate of x, which must be determined
// uniquely; returns false if the system is inconsistent or that coordinate is free.
bool solve_last(std::vector<std::vector<Rational>> m, Rational& out) {
  if (m.empty()) return false;
  const std::size_t k = m.front().size() - 1;  // number of unknowns
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < k && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[row][c];
      for (std::size_t cc = c; cc <= k; ++cc) m[i][cc] -= f * m[row][cc];
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < m.size(); ++i) {
    if (m[i][k] != 0) return false;
  }
  if (pivots.empty() || pivots.back() != k - 1) return false;
  out = m[row - 1][k] / m[row - 1][k - 1];
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t\r\n");
  const auto last = s.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty rational");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParseError("cannot parse rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

RationalMatrix lambda_gen(int j, const Rational& t, int rank) {
  check_index(j, rank);
  RationalMatrix m = RationalMatrix::identity(static_cast<std::size_t>(rank) + 1);
  m(static_cast<std::size_t>(j), static_cast<std::size_t>(j - 1)) = t;
  return m;
}

RationalMatrix product_from(const ReducedWord& word, const std::vector<Rational>& t) {
  if (static_cast<int>(t.size()) != word.length()) {
    throw std::invalid_argument("product_from: " + std::to_string(t.size()) + " parameters for a word of length " +
                                std::to_string(word.length()));
  }
  const std::size_t size = static_cast<std::size_t>(word.rank()) + 1;
  RationalMatrix m = RationalMatrix::identity(size);
  // Right multiplication by lambda_j(t) adds t times column j+1 to column j.
  for (int k = 1; k <= word.length(); ++k) {
    const auto j = static_cast<std::size_t>(word.letter(k));
    for (std::size_t r = 0; r < size; ++r) m(r, j - 1) += t[static_cast<std::size_t>(k - 1)] * m(r, j);
  }
  return m;
}

std::vector<Rational> factor(const ReducedWord& word, const RationalMatrix& L) {
  const std::size_t size = static_cast<std::size_t>(word.rank()) + 1;
  if (L.rows() != size || L.cols() != size) throw RankMismatch("matrix size does not match the word's rank");
  RationalMatrix m = L;
  std::vector<int> letters(word.letters().begin(), word.letters().end());
  std::vector<Rational> t(letters.size());
  // Peel the last letter j: in the rows from the one holding the value j
  // downward, column j is a combination of columns 1..j-1 and j+1, and the
  // coefficient of column j+1 is t.
  while (!letters.empty()) {
    const Permutation sigma = perm_from_letters(letters, word.rank());
    const int j = letters.back();
    std::size_t p = 0;
    while (sigma(static_cast<int>(p) + 1) != j) ++p;
    std::vector<std::vector<Rational>> system;
    for (std::size_t r = p; r < size; ++r) {
      std::vector<Rational> row;
      for (int c = 1; c < j; ++c) row.push_back(m(r, static_cast<std::size_t>(c - 1)));
      row.push_back(m(r, static_cast<std::size_t>(j)));
      row.push_back(m(r, static_cast<std::size_t>(j - 1)));
      system.push_back(std::move(row));
    }
    Rational value;
    if (!solve_last(std::move(system), value) || value == 0) {
      throw NotFactorizable("no factorization with non-zero parameters at position " + std::to_string(letters.size()));
    }
    for (std::size_t r = 0; r < size; ++r) m(r, static_cast<std::size_t>(j - 1)) -= value * m(r, static_cast<std::size_t>(j));
    t[letters.size() - 1] = value;
    letters.pop_back();
  }
  if (!(m == RationalMatrix::identity(size))) throw NotFactorizable("matrix is not a product along this word");
  return t;
}

Permutation bruhat_perm(const RationalMatrix& M) {
  const std::size_t n = M.rows();
  if (M.cols() != n || n == 0) throw std::invalid_argument("bruhat_perm needs a non-empty square matrix");
  // rank[i][j]: rank of rows i..n-1 and columns 0..j-1 (0-based), with
  // rank[n][*] = rank[*][0] = 0.
  std::vector<std::vector<int>> rank(n + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = i; r < n; ++r) {
      std::vector<Rational> row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = M(r, c);
      rows.push_back(std::move(row));
    }
    // Row echelon form, scanning columns left to right; the pivot count after
    // column j is the rank of the first j+1 columns.
    std::size_t pivots = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = pivots;
      while (p < rows.size() && rows[p][c] == 0) ++p;
      if (p < rows.size()) {
        std::swap(rows[pivots], rows[p]);
        for (std::size_t r = pivots + 1; r < rows.size(); ++r) {
          if (rows[r][c] == 0) continue;
          const Rational f = rows[r][c] / rows[pivots][c];
          for (std::size_t cc = c; cc < n; ++cc) rows[r][cc] -= f * rows[pivots][cc];
        }
        ++pivots;
      }
      rank[i][c + 1] = static_cast<int>(pivots);
    }
  }
  if (rank[0][n] != static_cast<int>(n)) throw std::invalid_argument("bruhat_perm: matrix is singular");
  std::vector<int> images(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (rank[i][j] - rank[i + 1][j] - rank[i][j - 1] + rank[i + 1][j - 1] == 1) images[i] = static_cast<int>(j);
    }
  }
  return Permutation(std::move(images));
}

RationalMatrix permutation_matrix(const Permutation& p) {
  const auto size = static_cast<std::size_t>(p.size());
  RationalMatrix m(size, size);
  for (int i = 1; i <= p.size(); ++i) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(p(i) - 1)) = 1;
  return m;
}

RationalMatrix zeta(int i, const Rational& t, int rank) {
  check_index(i, rank);
  RationalMatrix m = RationalMatrix::identity(static_cast<std::size_t>(rank) + 1);
  const Rational d = 1 + t * t;
  const Rational c = (1 - t * t) / d;
  const Rational s = 2 * t / d;
  const auto a = static_cast<std::size_t>(i - 1);
  m(a, a) = c;
  m(a, a + 1) = -s;
  m(a + 1, a) = s;
  m(a + 1, a + 1) = c;
  return m;
}

RationalMatrix transversal_z7(const Rational& x1, const Rational& x2) {
  const Rational half(1, 2);
  return zeta(2, -1 + x1, 4) * zeta(3, -1 + x2, 4) * zeta(1, -half, 4) * zeta(2, -half, 4) * zeta(4, half, 4) *
         zeta(3, half, 4) * zeta(2, half, 4);
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t cc = 0; cc < n; ++cc) std::swap(m(p, cc), m(c, cc));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t cc = c; cc < n; ++cc) m(r, cc) -= f * m(c, cc);
    }
  }
  return det;
}

BivariatePolynomial::BivariatePolynomial(std::map<std::pair<int, int>, long> terms) {
  for (const auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, c);
  }
}

Rational BivariatePolynomial::evaluate(const Rational& x1, const Rational& x2) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int k = 0; k < e.first; ++k) term *= x1;
    for (int k = 0; k < e.second; ++k) term *= x2;
    sum += term;
  }
  return sum;
}

BivariatePolynomial BivariatePolynomial::derivative(int variable) const {
  if (variable != 1 && variable != 2) throw std::invalid_argument("variable must be 1 or 2");
  std::map<std::pair<int, int>, long> out;
  for (const auto& [e, c] : terms_) {
    const int power = variable == 1 ? e.first : e.second;
    if (power == 0) continue;
    auto lowered = e;
    (variable == 1 ? lowered.first : lowered.second) -= 1;
    out[lowered] += c * power;
  }
  return BivariatePolynomial(std::move(out));
}

std::array<Rational, 2> BivariatePolynomial::gradient(const Rational& x1, const Rational& x2) const {
  return {derivative(1).evaluate(x1, x2), derivative(2).evaluate(x1, x2)};
}

const TransversalPolynomials& transversal_polynomials() {
  static const TransversalPolynomials polys{
      BivariatePolynomial({{{1, 0}, 1}}),
      BivariatePolynomial({{{0, 1}, 1}}),
      BivariatePolynomial({{{2, 2}, 5},
                           {{2, 1}, -10},
                           {{1, 2}, -2},
                           {{2, 0}, 10},
                           {{1, 1}, 4},
                           {{0, 2}, -8},
                           {{1, 0}, -20},
                           {{0, 1}, 16}}),
  };
  return polys;
}

std::array<Rational, 3> p_values(const Rational& x1, const Rational& x2) {
  const auto& p = transversal_polynomials();
  return {p.p1.evaluate(x1, x2), p.p2.evaluate(x1, x2), p.p3.evaluate(x1, x2)};
}

nlohmann::json matrix_to_json(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a non-empty array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  RationalMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols || cols == 0) throw ParseError("matrix JSON rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& x = j[r][c];
      if (x.is_string()) m(r, c) = parse_rational(x.get<std::string>());
      else if (x.is_number_integer()) m(r, c) = Rational(std::to_string(x.get<long long>()));
      else throw ParseError("matrix entries must be \"p/q\" strings or integers");
    }
  }
  return m;
}

RationalMatrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_rational(cell));
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("CSV rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty CSV matrix");
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace bruhat
