#pragma once

// Difference calculus for Latin rows and rectangles: difference rows,
// extended difference rows (even orders), the (H,V) difference-matrix pair
// with its three validity conditions, reconstruction, row products, and the
// circulant / back-circulant constructions and predicates.

#include <cctype>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "midls/core.hpp"

namespace midls {

// Consecutive differences h_j = s_{j+1} - s_j (mod n), each in [1, n-1].
// Valid iff no contiguous block sums to 0 mod n (no symbol revisit).
struct DifferenceRow {
  int n = 0;
  std::vector<int> h;

  friend bool operator==(const DifferenceRow&, const DifferenceRow&) = default;
  friend auto operator<=>(const DifferenceRow&, const DifferenceRow&) = default;
};

// Recentered differences for even n: eps_j = h_j - n/2 plus the wrap term
// h = (s_1 - s_n mod n) - n/2. The row's inner distance is n/2 - max|eps_j|.
struct ExtDiffRow {
  int n = 0;
  std::vector<int> eps;
  int h = 0;

  friend bool operator==(const ExtDiffRow&, const ExtDiffRow&) = default;
  friend auto operator<=>(const ExtDiffRow&, const ExtDiffRow&) = default;
};

struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  IntMat() = default;
  IntMat(int r, int c, int fill = 0) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }

  friend bool operator==(const IntMat&, const IntMat&) = default;
};

// H holds horizontal differences (m x (n-1)), V vertical ones ((m-1) x n),
// both as mod-n representatives in [1, n-1].
struct DifferencePair {
  int n = 0;
  IntMat H;
  IntMat V;

  friend bool operator==(const DifferencePair&, const DifferencePair&) = default;
};

inline DifferenceRow diff_row(const Row& r) {
  if (!is_latin_row(r)) throw std::invalid_argument("diff_row: not a Latin row");
  int n = static_cast<int>(r.size());
  DifferenceRow d;
  d.n = n;
  d.h.reserve(static_cast<size_t>(n) - 1);
  for (int j = 0; j + 1 < n; ++j) d.h.push_back(mod(r[j + 1] - r[j], n));
  return d;
}

// First contiguous block of d.h summing to 0 mod n, as a 1-based [j1,j2]
// window; nullopt when d is a valid difference row.
inline std::optional<std::pair<int, int>> zero_window(const DifferenceRow& d) {
  int n = d.n;
  int len = static_cast<int>(d.h.size());
  for (int j1 = 0; j1 < len; ++j1) {
    int sum = 0;
    for (int j2 = j1; j2 < len; ++j2) {
      sum = mod(sum + d.h[j2], n);
      if (sum == 0) return std::make_pair(j1 + 1, j2 + 1);
    }
  }
  return std::nullopt;
}

inline void require_diff_row(const DifferenceRow& d) {
  if (d.n < 2 || static_cast<int>(d.h.size()) != d.n - 1)
    throw std::invalid_argument("difference row: expected n-1 entries");
  for (int x : d.h)
    if (x < 1 || x > d.n - 1)
      throw std::invalid_argument("difference row: entry outside [1,n-1]");
  if (auto w = zero_window(d))
    throw std::invalid_argument("difference row: block [" + std::to_string(w->first) + "," +
                                std::to_string(w->second) + "] sums to 0 mod n");
}

inline Row row_from_diff(Symbol s, const DifferenceRow& d) {
  require_diff_row(d);
  if (s < 1 || s > d.n) throw std::invalid_argument("row_from_diff: start symbol out of range");
  Row r{s};
  r.reserve(static_cast<size_t>(d.n));
  for (int x : d.h) r.push_back(mod(r.back() - 1 + x, d.n) + 1);
  return r;
}

// Minimum cyclic distance between consecutive symbols of any row with this
// difference row.
inline int diff_row_inner_distance(const DifferenceRow& d) {
  int best = d.n;
  for (int x : d.h) best = std::min(best, std::min(x, d.n - x));
  return best;
}

inline ExtDiffRow ext_diff_row(const Row& r) {
  int n = static_cast<int>(r.size());
  if (n % 2 != 0) throw std::invalid_argument("ext_diff_row: order must be even");
  if (!is_latin_row(r)) throw std::invalid_argument("ext_diff_row: not a Latin row");
  ExtDiffRow e;
  e.n = n;
  e.eps.reserve(static_cast<size_t>(n) - 1);
  for (int j = 0; j + 1 < n; ++j) e.eps.push_back(mod(r[j + 1] - r[j], n) - n / 2);
  e.h = mod(r.front() - r.back(), n) - n / 2;
  return e;
}

// n/2 - max|eps|: the inner distance of the underlying row.
inline int ext_inner_distance(const ExtDiffRow& e) {
  int m = 0;
  for (int x : e.eps) m = std::max(m, std::abs(x));
  return e.n / 2 - m;
}

// A row extends to a Hamiltonian cycle iff the wrap gap also meets the inner
// distance: |h| <= n/2 - k.
inline bool is_cycle_ext(const ExtDiffRow& e) {
  return std::abs(e.h) <= e.n / 2 - ext_inner_distance(e);
}

inline void require_ext_diff_row(const ExtDiffRow& e) {
  if (e.n < 4 || e.n % 2 != 0)
    throw std::invalid_argument("extended difference row: order must be even and >= 4");
  if (static_cast<int>(e.eps.size()) != e.n - 1)
    throw std::invalid_argument("extended difference row: expected n-1 entries");
  int half = e.n / 2;
  for (int x : e.eps)
    if (x <= -half || x >= half)
      throw std::invalid_argument("extended difference row: entry outside (-n/2, n/2)");
  if (e.h <= -half || e.h >= half)
    throw std::invalid_argument("extended difference row: wrap term outside (-n/2, n/2)");
  int sum = e.h + half;
  for (int x : e.eps) sum += x + half;
  if (mod(sum, e.n) != 0)
    throw std::invalid_argument("extended difference row: entries and wrap term are inconsistent");
}

inline Row row_from_ext(const ExtDiffRow& e) {
  require_ext_diff_row(e);
  DifferenceRow d;
  d.n = e.n;
  for (int x : e.eps) d.h.push_back(x + e.n / 2);
  return row_from_diff(1, d);
}

// Text forms: "n: h_1 ... h_{n-1}" and "n: e_1 ... e_{n-1} | h".
inline std::string to_string(const DifferenceRow& d) {
  std::string out = std::to_string(d.n) + ":";
  for (int x : d.h) out += " " + std::to_string(x);
  return out;
}

inline std::string to_string(const ExtDiffRow& e) {
  std::string out = std::to_string(e.n) + ":";
  for (int x : e.eps) out += " " + std::to_string(x);
  out += " | " + std::to_string(e.h);
  return out;
}

namespace detail {
// Splits "n: body" into (n, body); n_hint covers the prefix-free form.
inline std::pair<int, std::string> split_order_prefix(const std::string& text, int n_hint) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    if (n_hint < 1)
      throw std::invalid_argument("expected \"n: ...\" or an explicit order");
    return {n_hint, text};
  }
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(text.substr(0, colon), &used);
    while (used < colon && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != colon) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("malformed order prefix in \"" + text + "\"");
  }
  if (n_hint >= 1 && n != n_hint)
    throw std::invalid_argument("order prefix " + std::to_string(n) +
                                " contradicts expected order " + std::to_string(n_hint));
  return {n, text.substr(colon + 1)};
}

inline std::vector<int> parse_ints(const std::string& body) {
  std::istringstream in(body);
  std::vector<int> out;
  int x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) {
    in.clear();
    std::string tok;
    in >> tok;
    throw std::invalid_argument("unexpected token \"" + tok + "\"");
  }
  return out;
}
}  // namespace detail

inline DifferenceRow parse_diff_row(const std::string& text, int n_hint = -1) {
  auto [n, body] = detail::split_order_prefix(text, n_hint);
  DifferenceRow d;
  d.n = n;
  d.h = detail::parse_ints(body);
  require_diff_row(d);
  return d;
}

inline ExtDiffRow parse_ext_diff_row(const std::string& text, int n_hint = -1) {
  auto [n, body] = detail::split_order_prefix(text, n_hint);
  auto bar = body.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("extended difference row: missing \"| h\" part");
  ExtDiffRow e;
  e.n = n;
  e.eps = detail::parse_ints(body.substr(0, bar));
  auto tail = detail::parse_ints(body.substr(bar + 1));
  if (tail.size() != 1)
    throw std::invalid_argument("extended difference row: expected exactly one wrap term");
  e.h = tail[0];
  require_ext_diff_row(e);
  return e;
}

inline DifferencePair diff_matrices(const Rectangle& g) {
  if (g.rows < 2) throw std::invalid_argument("diff_matrices: need at least two rows");
  DifferencePair p;
  p.n = g.order;
  p.H = IntMat(g.rows, g.cols - 1);
  p.V = IntMat(g.rows - 1, g.cols);
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j + 1 < g.cols; ++j) p.H.at(i, j) = mod(g.at(i, j + 1) - g.at(i, j), g.order);
  for (int i = 0; i + 1 < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) p.V.at(i, j) = mod(g.at(i + 1, j) - g.at(i, j), g.order);
  return p;
}

// Violated reconstruction condition: 1 = compatibility cell (i,j); 2 = row
// `index` of H with block [lo,hi]; 3 = column `index` of V with block [lo,hi].
// All positions 1-based.
struct PairViolation {
  int condition = 0;
  int index = 0;
  int lo = 0;
  int hi = 0;

  std::string to_string() const {
    switch (condition) {
      case 1:
        return "condition 1 at (" + std::to_string(index) + "," + std::to_string(lo) + ")";
      case 2:
        return "condition 2: H row " + std::to_string(index) + " block [" + std::to_string(lo) +
               "," + std::to_string(hi) + "] sums to 0";
      default:
        return "condition 3: V column " + std::to_string(index) + " block [" +
               std::to_string(lo) + "," + std::to_string(hi) + "] sums to 0";
    }
  }
};

// Checks the three conditions under which (H,V) reconstructs a unique Latin
// rectangle; reports every violation.
inline std::vector<PairViolation> validate_pair(const IntMat& H, const IntMat& V, int n) {
  int m = H.rows;
  if (n < 2 || m < 1 || H.cols != n - 1 || V.rows != m - 1 || V.cols != n)
    throw std::invalid_argument("validate_pair: dimensions mismatch (want H m x n-1, V m-1 x n)");
  for (int x : H.a)
    if (x < 1 || x > n) throw std::invalid_argument("validate_pair: H entry outside [1,n]");
  for (int x : V.a)
    if (x < 1 || x > n) throw std::invalid_argument("validate_pair: V entry outside [1,n]");

  std::vector<PairViolation> out;
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j + 1 < n; ++j)
      if (mod(H.at(i, j) + V.at(i, j + 1) - V.at(i, j) - H.at(i + 1, j), n) != 0)
        out.push_back({1, i + 1, j + 1, j + 1});
  for (int i = 0; i < m; ++i)
    for (int j1 = 0; j1 < n - 1; ++j1) {
      int sum = 0;
      for (int j2 = j1; j2 < n - 1; ++j2) {
        sum = mod(sum + H.at(i, j2), n);
        if (sum == 0) out.push_back({2, i + 1, j1 + 1, j2 + 1});
      }
    }
  for (int j = 0; j < n; ++j)
    for (int i1 = 0; i1 + 1 < m; ++i1) {
      int sum = 0;
      for (int i2 = i1; i2 + 1 < m; ++i2) {
        sum = mod(sum + V.at(i2, j), n);
        if (sum == 0) out.push_back({3, j + 1, i1 + 1, i2 + 1});
      }
    }
  return out;
}

// The rectangle with s in cell (1,1) whose difference matrices are (H,V).
inline Rectangle reconstruct(Symbol s, const IntMat& H, const IntMat& V, int n) {
  auto violations = validate_pair(H, V, n);
  if (!violations.empty()) {
    std::string msg = "reconstruct: invalid pair:";
    for (const auto& v : violations) msg += " " + v.to_string() + ";";
    throw std::invalid_argument(msg);
  }
  if (s < 1 || s > n) throw std::invalid_argument("reconstruct: seed symbol out of range");
  int m = H.rows;
  Rectangle g;
  g.rows = m;
  g.cols = n;
  g.order = n;
  g.cells.resize(static_cast<size_t>(m) * n);
  g.at(0, 0) = s;
  for (int i = 1; i < m; ++i) g.at(i, 0) = mod(g.at(i - 1, 0) - 1 + V.at(i - 1, 0), n) + 1;
  for (int i = 0; i < m; ++i)
    for (int j = 1; j < n; ++j) g.at(i, j) = mod(g.at(i, j - 1) - 1 + H.at(i, j - 1), n) + 1;
  return validated(std::move(g));
}

inline Rectangle reconstruct(Symbol s, const DifferencePair& p) {
  return reconstruct(s, p.H, p.V, p.n);
}

// Square whose H has every row equal to d and V every column equal to dp.
// Inner distance: min over both difference rows' entry distances.
inline Square row_product(const DifferenceRow& d, const DifferenceRow& dp) {
  require_diff_row(d);
  require_diff_row(dp);
  if (d.n != dp.n) throw std::invalid_argument("row_product: order mismatch");
  int n = d.n;
  IntMat H(n, n - 1);
  IntMat V(n - 1, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n - 1; ++j) H.at(i, j) = d.h[static_cast<size_t>(j)];
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n; ++j) V.at(i, j) = dp.h[static_cast<size_t>(i)];
  return reconstruct(1, H, V, n);
}

// True iff all rows of H coincide; equivalently all columns of V coincide.
// Both characterizations are computed and must agree.
inline bool is_row_product(const Square& g) {
  if (!g.is_square()) throw std::invalid_argument("is_row_product: not a square");
  auto p = diff_matrices(g);
  bool by_h = true;
  for (int i = 1; i < p.H.rows && by_h; ++i)
    for (int j = 0; j < p.H.cols; ++j)
      if (p.H.at(i, j) != p.H.at(0, j)) {
        by_h = false;
        break;
      }
  bool by_v = true;
  for (int j = 1; j < p.V.cols && by_v; ++j)
    for (int i = 0; i < p.V.rows; ++i)
      if (p.V.at(i, j) != p.V.at(i, 0)) {
        by_v = false;
        break;
      }
  if (by_h != by_v) throw std::logic_error("is_row_product: H/V characterizations disagree");
  return by_h;
}

// Row i+1 is row i shifted right by one; columns stay Latin for any row.
inline Square make_circulant(const Row& r) {
  if (!is_latin_row(r)) throw std::invalid_argument("make_circulant: not a Latin row");
  int n = static_cast<int>(r.size());
  Square g;
  g.rows = g.cols = g.order = n;
  g.cells.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = r[static_cast<size_t>(mod(j - i, n))];
  return g;
}

inline Square make_back_circulant(const Row& r) {
  if (!is_latin_row(r)) throw std::invalid_argument("make_back_circulant: not a Latin row");
  int n = static_cast<int>(r.size());
  Square g;
  g.rows = g.cols = g.order = n;
  g.cells.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = r[static_cast<size_t>(mod(j + i, n))];
  return g;
}

inline bool is_circulant(const Square& g) {
  if (!g.is_square()) throw std::invalid_argument("is_circulant: not a square");
  int n = g.order;
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.at(i + 1, j) != g.at(i, mod(j - 1, n))) return false;
  return true;
}

inline bool is_back_circulant(const Square& g) {
  if (!g.is_square()) throw std::invalid_argument("is_back_circulant: not a square");
  int n = g.order;
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.at(i + 1, j) != g.at(i, mod(j + 1, n))) return false;
  return true;
}

// Shift predicates on difference matrices (overlapping part only): row i+1
// equals row i moved one step right / left.
inline bool rows_shift_right(const IntMat& m) {
  for (int i = 0; i + 1 < m.rows; ++i)
    for (int j = 1; j < m.cols; ++j)
      if (m.at(i + 1, j) != m.at(i, j - 1)) return false;
  return true;
}

inline bool rows_shift_left(const IntMat& m) {
  for (int i = 0; i + 1 < m.rows; ++i)
    for (int j = 0; j + 1 < m.cols; ++j)
      if (m.at(i + 1, j) != m.at(i, j + 1)) return false;
  return true;
}

inline IntMat negate_matrix(const IntMat& m, int n) {
  IntMat out = m;
  for (int& x : out.a) x = mod(-x, n) == 0 ? n : mod(-x, n);
  return out;
}

}  // namespace midls
