#pragma once

// Closed-form inventory of the maximum-inner-distance rows of even order:
// generators for every Hamiltonian path/cycle of the distance-(n/2-1) graph,
// the counting formulas they satisfy, classification of an arbitrary row back
// to its generator, and the neighbor/determinedness relations used when rows
// are stacked into squares.

#include <cstdint>
#include <map>
#include <mutex>
#include <string>

#include "midls/diffs.hpp"
#include "midls/graphs.hpp"

namespace midls {

namespace detail {

inline void require_even_order(int n, const char* who) {
  if (n < 6 || n % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": order must be even and >= 6");
}

}  // namespace detail

// --- counting formulas ---

// Number of maximum-distance normal rows (Hamiltonian paths from 1).
inline uint64_t P_formula(int n) {
  detail::require_even_order(n, "P_formula");
  uint64_t base = static_cast<uint64_t>(n) * n / 4;
  return base + (n % 4 == 0 ? 2 : 1);
}

// Number of those rows that close up into Hamiltonian cycles.
inline uint64_t cycle_count_formula(int n) {
  detail::require_even_order(n, "cycle_count_formula");
  return static_cast<uint64_t>(n) + (n % 4 == 0 ? 2 : 0);
}

// Number of Latin squares of order n with maximum inner distance.
inline uint64_t midls_count_formula(int n) {
  if (n < 5) throw std::invalid_argument("midls_count_formula: order must be >= 5");
  if (n % 2 == 1) return 4ull * n;
  uint64_t p = P_formula(n);
  return static_cast<uint64_t>(n) * (p * p + 2ull * n);
}

// --- row builders (extended difference form, all at k = n/2 - 1) ---

namespace detail {

inline ExtDiffRow make_ext(int n, std::vector<int> eps, int h) {
  ExtDiffRow e;
  e.n = n;
  e.eps = std::move(eps);
  e.h = h;
  return e;
}

}  // namespace detail

// The cycle seed: (1,...,1, 0, -1,...,-1) with zero wrap. Its n rotations
// (as full n-entry sequences) exhaust the non-constant cycles.
inline ExtDiffRow row_C(int n) {
  detail::require_even_order(n, "row_C");
  int q = n / 2;
  std::vector<int> eps;
  eps.insert(eps.end(), static_cast<size_t>(q - 1), 1);
  eps.push_back(0);
  eps.insert(eps.end(), static_cast<size_t>(q - 1), -1);
  return detail::make_ext(n, std::move(eps), 0);
}

// Strictly alternating row (0,1,0,1,...,0) with wrap 1-n/2; equal to its own
// reversal and the negation of the alternating member of the type-1 family.
inline ExtDiffRow row_A(int n) {
  detail::require_even_order(n, "row_A");
  std::vector<int> eps;
  for (int j = 1; j <= n - 1; ++j) eps.push_back(j % 2 == 0 ? 1 : 0);
  return detail::make_ext(n, std::move(eps), 1 - n / 2);
}

// All steps n/2+1: valid only when 4 | n, and then also a cycle.
inline ExtDiffRow all_ones_row(int n) {
  detail::require_even_order(n, "all_ones_row");
  if (n % 4 != 0)
    throw std::invalid_argument("all_ones_row: requires order divisible by 4");
  return detail::make_ext(n, std::vector<int>(static_cast<size_t>(n - 1), 1), 1);
}

// Type-1 block row: 1^{q-h+1} (0,1)^{h-1} 1^{q-h} with wrap h. The wrap
// parity must match the order: h odd when 4 | n, h even otherwise; h = 1
// degenerates to the all-ones row.
inline ExtDiffRow type1_row(int n, int h) {
  detail::require_even_order(n, "type1_row");
  int q = n / 2;
  if (h < 1 || h > q - 1) throw std::invalid_argument("type1_row: wrap must be in [1, n/2-1]");
  if ((n % 4 == 0) != (h % 2 == 1))
    throw std::invalid_argument("type1_row: wrap parity incompatible with order");
  std::vector<int> eps;
  eps.insert(eps.end(), static_cast<size_t>(q - h + 1), 1);
  for (int i = 0; i < h - 1; ++i) {
    eps.push_back(0);
    eps.push_back(1);
  }
  eps.insert(eps.end(), static_cast<size_t>(q - h), 1);
  return detail::make_ext(n, std::move(eps), h);
}

// Alternating member of the type-1 family: (0,-1,0,-1,...,0) with wrap n/2-1.
// Exists for every even order; its negation is row_A.
inline ExtDiffRow type1_alternating_row(int n) {
  detail::require_even_order(n, "type1_alternating_row");
  std::vector<int> eps;
  for (int j = 1; j <= n - 1; ++j) eps.push_back(j % 2 == 0 ? -1 : 0);
  return detail::make_ext(n, std::move(eps), n / 2 - 1);
}

// Type-2 row: 1^m 0 (-1)^{m+1} (0,-1)^{h-1} (-1)^{q-h-m-1} 0 1^{q-h-m-1}
// with wrap h. Range: h in [1, q-2], m in [0, q-1-h]; h = 1 reproduces the
// wrap-(-1) rotations of the cycle seed up to negation.
inline ExtDiffRow type2_row(int n, int h, int m) {
  detail::require_even_order(n, "type2_row");
  int q = n / 2;
  if (h < 1 || h > q - 2) throw std::invalid_argument("type2_row: wrap must be in [1, n/2-2]");
  if (m < 0 || m > q - 1 - h)
    throw std::invalid_argument("type2_row: block length must be in [0, n/2-1-wrap]");
  std::vector<int> eps;
  eps.insert(eps.end(), static_cast<size_t>(m), 1);
  eps.push_back(0);
  eps.insert(eps.end(), static_cast<size_t>(m + 1), -1);
  for (int i = 0; i < h - 1; ++i) {
    eps.push_back(0);
    eps.push_back(-1);
  }
  eps.insert(eps.end(), static_cast<size_t>(q - h - m - 1), -1);
  eps.push_back(0);
  eps.insert(eps.end(), static_cast<size_t>(q - h - m - 1), 1);
  return detail::make_ext(n, std::move(eps), h);
}

// --- classification ---

enum class PathVariant { CycleRotation, AllOnes, Type1, Type2 };

inline const char* to_string(PathVariant v) {
  switch (v) {
    case PathVariant::CycleRotation: return "cycle-rotation";
    case PathVariant::AllOnes: return "all-ones";
    case PathVariant::Type1: return "type-1";
    case PathVariant::Type2: return "type-2";
  }
  return "?";
}

struct PathClass {
  PathVariant variant = PathVariant::CycleRotation;
  int sign = 1;              // -1 when the row is the negation of the canonical member
  int offset = 0;            // CycleRotation: right-rotations from the seed
  int h = 0;                 // the row's own wrap term
  int m = -1;                // type-2 block length (also set on |wrap|=1 rotations)
  bool alternating = false;  // type-1 alternating shape

  friend bool operator==(const PathClass&, const PathClass&) = default;

  std::string name() const {
    std::string s = to_string(variant);
    switch (variant) {
      case PathVariant::CycleRotation:
        s += "(offset=" + std::to_string(offset) + ")";
        break;
      case PathVariant::AllOnes:
        s += std::string("(sign=") + (sign > 0 ? "+1" : "-1") + ")";
        break;
      case PathVariant::Type1:
        if (alternating)
          s += std::string("(alternating, sign=") + (sign > 0 ? "+1" : "-1") + ")";
        else
          s += "(h=" + std::to_string(h) + ")";
        break;
      case PathVariant::Type2:
        s += "(h=" + std::to_string(h) + ", m=" + std::to_string(m) +
             ", sign=" + (sign > 0 ? "+1" : "-1") + ")";
        break;
    }
    return s;
  }
};

struct ClassifiedRow {
  ExtDiffRow row;
  PathClass cls;
};

// Every maximum-distance normal row of even order n, paired with its
// classification; sorted by row. Cardinality is P_formula(n).
inline std::vector<ClassifiedRow> generate_paths_classified(int n) {
  detail::require_even_order(n, "generate_paths_classified");
  int q = n / 2;
  std::vector<ClassifiedRow> out;

  // n rotations of the cycle seed; wraps are 0 at offsets {0, q}, -1 at
  // [1, q-1] and +1 at [q+1, n-1]. The |wrap|=1 ones coincide with the
  // h=1 type-2 family, so record the matching (m, sign) as attributes.
  ExtDiffRow seed = row_C(n);
  std::map<ExtDiffRow, int> type2_m;  // positive h=1 members -> m
  for (int m = 0; m <= q - 2; ++m) type2_m.emplace(type2_row(n, 1, m), m);
  for (int t = 0; t < n; ++t) {
    ExtDiffRow e = rotate_ext(seed, t);
    PathClass c;
    c.variant = PathVariant::CycleRotation;
    c.offset = t;
    c.h = e.h;
    if (e.h == 0) {
      c.sign = t == 0 ? 1 : -1;
    } else {
      c.sign = e.h;  // canonical type-2 member has wrap +1
      auto it = type2_m.find(e.h == 1 ? e : negate_ext(e));
      if (it == type2_m.end())
        throw std::logic_error("generate_paths_classified: rotation escaped the h=1 family");
      c.m = it->second;
    }
    out.push_back({std::move(e), c});
  }

  auto emit_pair = [&](const ExtDiffRow& e, PathClass c) {
    out.push_back({e, c});
    PathClass neg = c;
    neg.sign = -c.sign;
    neg.h = -c.h;
    out.push_back({negate_ext(e), neg});
  };

  if (n % 4 == 0) {
    PathClass c;
    c.variant = PathVariant::AllOnes;
    c.h = 1;
    emit_pair(all_ones_row(n), c);
  }
  for (int h = 2; h <= q - 1; ++h) {
    if ((n % 4 == 0) != (h % 2 == 1)) continue;
    PathClass c;
    c.variant = PathVariant::Type1;
    c.h = h;
    emit_pair(type1_row(n, h), c);
  }
  {
    PathClass c;
    c.variant = PathVariant::Type1;
    c.h = q - 1;
    c.alternating = true;
    emit_pair(type1_alternating_row(n), c);
  }
  for (int h = 2; h <= q - 2; ++h)
    for (int m = 0; m <= q - 1 - h; ++m) {
      PathClass c;
      c.variant = PathVariant::Type2;
      c.h = h;
      c.m = m;
      emit_pair(type2_row(n, h, m), c);
    }

  std::sort(out.begin(), out.end(),
            [](const ClassifiedRow& a, const ClassifiedRow& b) { return a.row < b.row; });
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i].row == out[i - 1].row)
      throw std::logic_error("generate_paths_classified: duplicate row emitted");
  if (out.size() != P_formula(n))
    throw std::logic_error("generate_paths_classified: cardinality disagrees with P_formula");
  return out;
}

inline std::vector<ExtDiffRow> generate_paths(int n) {
  std::vector<ExtDiffRow> out;
  for (auto& cr : generate_paths_classified(n)) out.push_back(std::move(cr.row));
  return out;
}

// The cycles alone: the n seed rotations plus both constant rows when 4 | n.
inline std::vector<ExtDiffRow> generate_cycles(int n) {
  detail::require_even_order(n, "generate_cycles");
  std::vector<ExtDiffRow> out;
  ExtDiffRow seed = row_C(n);
  for (int t = 0; t < n; ++t) out.push_back(rotate_ext(seed, t));
  if (n % 4 == 0) {
    out.push_back(all_ones_row(n));
    out.push_back(negate_ext(all_ones_row(n)));
  }
  std::sort(out.begin(), out.end());
  if (out.size() != cycle_count_formula(n))
    throw std::logic_error("generate_cycles: cardinality disagrees with formula");
  return out;
}

// Map an extended difference row back to its generator. Refuses rows that are
// not maximum-distance rows of some even order in [6, 256].
inline PathClass classify_row(const ExtDiffRow& e) {
  detail::require_even_order(e.n, "classify_row");
  if (e.n > 256) throw std::invalid_argument("classify_row: order capped at 256");
  require_ext_diff_row(e);
  static std::mutex mu;
  static std::map<int, std::map<ExtDiffRow, PathClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& table = cache[e.n];
  if (table.empty())
    for (auto& cr : generate_paths_classified(e.n)) table.emplace(cr.row, cr.cls);
  auto it = table.find(e);
  if (it == table.end())
    throw std::invalid_argument("classify_row: not a maximum-inner-distance row");
  return it->second;
}

// --- validity scanner ---

// A window [j1,j2] of positions whose steps return to the start symbol,
// attributed to one of three shapes: an adjacent canceling pair, a mixed-sign
// stretch, or a single-sign stretch.
struct PatternViolation {
  int rule = 0;  // 1, 2 or 3
  int j1 = 0, j2 = 0;

  friend bool operator==(const PatternViolation&, const PatternViolation&) = default;
};

// Scan every window of the epsilon part for a zero-sum block of steps. Empty
// result iff the row is a valid extended difference row (the wrap term is
// domain-checked but takes no part in block validity).
inline std::vector<PatternViolation> check_patterns(const ExtDiffRow& e) {
  require_ext_diff_row(e);
  int n = e.n, q = n / 2;
  std::vector<PatternViolation> out;
  for (int j1 = 1; j1 <= n - 1; ++j1) {
    int sum = 0;
    bool pos = false, neg = false;
    for (int j2 = j1; j2 <= n - 1; ++j2) {
      int eps = e.eps[static_cast<size_t>(j2) - 1];
      sum += eps + q;
      pos = pos || eps > 0;
      neg = neg || eps < 0;
      if (mod(sum, n) != 0) continue;
      PatternViolation v;
      v.j1 = j1;
      v.j2 = j2;
      v.rule = (j2 - j1 + 1 == 2) ? 1 : (pos && neg) ? 2 : 3;
      out.push_back(v);
    }
  }
  return out;
}

// --- stacking relations ---

// Offsets c such that the row of b, shifted by c, sits under the row of a
// with every column pair at distance >= n/2 - 1.
inline std::vector<int> neighbor_offsets(const ExtDiffRow& a, const ExtDiffRow& b) {
  if (a.n != b.n) throw std::invalid_argument("neighbor_offsets: order mismatch");
  int n = a.n, k = n / 2 - 1;
  Row ra = row_from_ext(a), rb = row_from_ext(b);
  std::vector<int> out;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = dist(ra[static_cast<size_t>(j)], mod(rb[static_cast<size_t>(j)] - 1 + c, n) + 1, n) >= k;
    if (ok) out.push_back(c);
  }
  return out;
}

inline bool is_neighbor(const ExtDiffRow& a, const ExtDiffRow& b) {
  return !neighbor_offsets(a, b).empty();
}

// For neighbors: whether the stacking offset is unique. Holds exactly when
// some window of the entrywise difference of epsilons sums to +-2, i.e. the
// prefix sums span a width-2 band.
inline bool is_determined(const ExtDiffRow& a, const ExtDiffRow& b) {
  if (!is_neighbor(a, b)) throw std::invalid_argument("is_determined: rows are not neighbors");
  int lo = 0, hi = 0, p = 0;
  for (size_t j = 0; j + 1 < static_cast<size_t>(a.n); ++j) {
    p += b.eps[j] - a.eps[j];
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return hi - lo == 2;
}

struct BoundsReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Necessary conditions on any neighbor pair: entrywise epsilon differences in
// {-1,0,1}, every window of differences summing within [-2,2], and wrap terms
// within 2 of each other unless both are extreme and opposite.
inline BoundsReport adjacency_bounds_check(const ExtDiffRow& a, const ExtDiffRow& b) {
  if (a.n != b.n) throw std::invalid_argument("adjacency_bounds_check: order mismatch");
  BoundsReport r;
  int n = a.n;
  for (int j = 1; j <= n - 1; ++j) {
    int d = b.eps[static_cast<size_t>(j) - 1] - a.eps[static_cast<size_t>(j) - 1];
    if (d < -1 || d > 1) {
      r.ok = false;
      r.violations.push_back("entry difference " + std::to_string(d) + " at position " +
                             std::to_string(j));
    }
  }
  for (int j1 = 1; j1 <= n - 1; ++j1) {
    int sum = 0;
    for (int j2 = j1; j2 <= n - 1; ++j2) {
      sum += b.eps[static_cast<size_t>(j2) - 1] - a.eps[static_cast<size_t>(j2) - 1];
      if (sum < -2 || sum > 2) {
        r.ok = false;
        r.violations.push_back("window [" + std::to_string(j1) + "," + std::to_string(j2) +
                               "] difference sum " + std::to_string(sum));
      }
    }
  }
  int dh = b.h - a.h;
  bool extreme_flip = std::abs(a.h) == n / 2 - 1 && b.h == -a.h;
  if (std::abs(dh) > 2 && !extreme_flip) {
    r.ok = false;
    r.violations.push_back("wrap terms " + std::to_string(a.h) + " and " + std::to_string(b.h) +
                           " differ by " + std::to_string(dh));
  }
  return r;
}

}  // namespace midls
