#pragma once

// Core types for the inner-distance theory of Latin squares: cyclic symbol
// distance, rectangles/squares over [1,n], validation, and the grid text
// format shared by all tools.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace midls {

using Symbol = int;  // externally 1..n; mod-n arithmetic is done on 0-based values

inline int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

// min((a-b) mod n, (b-a) mod n); at most floor(n/2)
inline int dist(Symbol a, Symbol b, int n) {
  if (n < 1) throw std::invalid_argument("dist: order must be >= 1");
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("dist: symbol out of range [1," + std::to_string(n) + "]");
  int d = mod(a - b, n);
  return std::min(d, n - d);
}

// Largest inner distance any order-n Latin square attains: floor((n-1)/2).
inline int max_inner_distance(int n) {
  if (n < 3) throw std::invalid_argument("max_inner_distance: requires n >= 3");
  return (n - 1) / 2;
}

// Dense row-major grid of symbols in [1, order]. A Latin rectangle keeps
// order == cols (wide orientation); transposing a wide rectangle yields the
// tall orientation with order == rows. Value type: cheap to copy and compare.
struct Rectangle {
  int rows = 0;
  int cols = 0;
  int order = 0;
  std::vector<Symbol> cells;

  Symbol at(int i, int j) const { return cells[static_cast<size_t>(i) * cols + j]; }
  Symbol& at(int i, int j) { return cells[static_cast<size_t>(i) * cols + j]; }

  bool is_square() const { return rows == cols && rows == order; }

  std::vector<Symbol> row(int i) const {
    return {cells.begin() + static_cast<size_t>(i) * cols,
            cells.begin() + static_cast<size_t>(i + 1) * cols};
  }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
  friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
};

using Square = Rectangle;

// A Latin row is a permutation of [1,n]; kept as a bare vector.
using Row = std::vector<Symbol>;

inline bool is_latin_row(const Row& r) {
  int n = static_cast<int>(r.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (Symbol s : r) {
    if (s < 1 || s > n || seen[static_cast<size_t>(s)]) return false;
    seen[static_cast<size_t>(s)] = 1;
  }
  return n > 0;
}

inline bool is_normal(const Row& r) { return !r.empty() && r.front() == 1; }

// Every violated constraint, by kind and 1-based position. Empty means valid.
inline std::vector<std::string> grid_errors(const Rectangle& g) {
  std::vector<std::string> errs;
  if (g.rows < 1 || g.cols < 1 || g.order < 1) {
    errs.push_back("empty or dimensionless grid");
    return errs;
  }
  if (g.cells.size() != static_cast<size_t>(g.rows) * g.cols) {
    errs.push_back("cell count does not match " + std::to_string(g.rows) + "x" +
                   std::to_string(g.cols));
    return errs;
  }
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j)
      if (g.at(i, j) < 1 || g.at(i, j) > g.order)
        errs.push_back("symbol out of range at (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + "): " + std::to_string(g.at(i, j)));
  if (!errs.empty()) return errs;  // range errors would corrupt the repeat scans
  std::vector<int> seen(static_cast<size_t>(g.order) + 1, -1);
  for (int i = 0; i < g.rows; ++i) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int j = 0; j < g.cols; ++j) {
      int s = g.at(i, j);
      if (seen[static_cast<size_t>(s)] >= 0)
        errs.push_back("row repeat at (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + "): symbol " + std::to_string(s));
      seen[static_cast<size_t>(s)] = j;
    }
  }
  for (int j = 0; j < g.cols; ++j) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int i = 0; i < g.rows; ++i) {
      int s = g.at(i, j);
      if (seen[static_cast<size_t>(s)] >= 0)
        errs.push_back("column repeat at (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + "): symbol " + std::to_string(s));
      seen[static_cast<size_t>(s)] = i;
    }
  }
  return errs;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Returns the grid unchanged if valid, else throws listing every violation.
inline Rectangle validated(Rectangle g) {
  auto errs = grid_errors(g);
  if (!errs.empty()) throw std::invalid_argument(join(errs, "; "));
  return g;
}

inline Rectangle make_rectangle(int rows, int cols, std::vector<Symbol> cells, int order = -1) {
  Rectangle g;
  g.rows = rows;
  g.cols = cols;
  g.order = order < 0 ? std::max(rows, cols) : order;
  g.cells = std::move(cells);
  return validated(std::move(g));
}

inline Square make_square(std::vector<Row> rows) {
  if (rows.empty()) throw std::invalid_argument("make_square: no rows");
  int n = static_cast<int>(rows.size());
  std::vector<Symbol> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("make_square: ragged rows");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return make_rectangle(n, n, std::move(cells), n);
}

// Minimum cyclic distance over all horizontally or vertically adjacent cell
// pairs. For valid Latin rectangles the result is >= 1.
inline int inner_distance(const Rectangle& g) {
  if (static_cast<size_t>(g.rows) * g.cols < 2)
    throw std::invalid_argument("inner_distance: no adjacent cell pair");
  int best = g.order;  // above any attainable distance
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) {
      if (j + 1 < g.cols) best = std::min(best, dist(g.at(i, j), g.at(i, j + 1), g.order));
      if (i + 1 < g.rows) best = std::min(best, dist(g.at(i, j), g.at(i + 1, j), g.order));
    }
  return best;
}

inline Rectangle transpose(const Rectangle& g) {
  Rectangle t;
  t.rows = g.cols;
  t.cols = g.rows;
  t.order = g.order;
  t.cells.resize(g.cells.size());
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) t.at(j, i) = g.at(i, j);
  return t;
}

// Text format: "m n" on the first line, then m lines of n symbols in [1,n].
inline Rectangle read_rectangle(std::istream& in) {
  int m = 0, n = 0;
  if (!(in >> m >> n)) throw std::invalid_argument("grid header: expected \"m n\"");
  if (m < 1 || n < 1 || m > 4096 || n > 4096)
    throw std::invalid_argument("grid header: unreasonable dimensions");
  std::vector<Symbol> cells(static_cast<size_t>(m) * n);
  for (auto& c : cells)
    if (!(in >> c)) throw std::invalid_argument("grid body: expected " + std::to_string(m * n) +
                                                " integers");
  Rectangle g;
  g.rows = m;
  g.cols = n;
  g.order = n;
  g.cells = std::move(cells);
  return validated(std::move(g));
}

inline Rectangle parse_rectangle(const std::string& text) {
  std::istringstream in(text);
  return read_rectangle(in);
}

inline void write_rectangle(std::ostream& out, const Rectangle& g) {
  out << g.rows << ' ' << g.cols << '\n';
  for (int i = 0; i < g.rows; ++i) {
    for (int j = 0; j < g.cols; ++j) out << (j ? " " : "") << g.at(i, j);
    out << '\n';
  }
}

inline std::string to_text(const Rectangle& g) {
  std::ostringstream out;
  write_rectangle(out, g);
  return out.str();
}

}  // namespace midls
