#pragma once

// Frozen reference grids and rows used across the test suite. All values were
// checked by independent recomputation before being hardcoded here.

#include <vector>

#include "midls/core.hpp"

namespace fixtures {

using midls::Row;

// Order-6 square of inner distance 2 (also the circulant example: each row is
// the previous one shifted right by one).
inline midls::Square ls6_distance2() {
  return midls::make_square({{1, 3, 5, 2, 6, 4},
                             {4, 1, 3, 5, 2, 6},
                             {6, 4, 1, 3, 5, 2},
                             {2, 6, 4, 1, 3, 5},
                             {5, 2, 6, 4, 1, 3},
                             {3, 5, 2, 6, 4, 1}});
}

// Order-6 square of inner distance 1.
inline midls::Square ls6_distance1() {
  return midls::make_square({{2, 1, 4, 3, 6, 5},
                             {3, 4, 6, 1, 5, 2},
                             {1, 6, 3, 5, 2, 4},
                             {5, 3, 1, 2, 4, 6},
                             {6, 5, 2, 4, 3, 1},
                             {4, 2, 5, 6, 1, 3}});
}

// 3x6 Latin rectangle of inner distance 2 (rows 4..6 of ls6_distance2).
inline midls::Rectangle lr_3x6() {
  return midls::make_rectangle(3, 6,
                               {2, 6, 4, 1, 3, 5,
                                5, 2, 6, 4, 1, 3,
                                3, 5, 2, 6, 4, 1});
}

// 1x7 Latin rectangle (single row) of inner distance 1.
inline midls::Rectangle lr_1x7() {
  return midls::make_rectangle(1, 7, {4, 2, 5, 6, 1, 3, 7});
}

// The four order-5 squares of maximum inner distance with 1 in cell (1,1),
// one per addition class. Laid out as in the reference figure: tl, tr, bl, br.
inline midls::Square mid5_tl() {
  return midls::make_square({{1, 3, 5, 2, 4},
                             {3, 5, 2, 4, 1},
                             {5, 2, 4, 1, 3},
                             {2, 4, 1, 3, 5},
                             {4, 1, 3, 5, 2}});
}
inline midls::Square mid5_tr() {
  return midls::make_square({{1, 3, 5, 2, 4},
                             {4, 1, 3, 5, 2},
                             {2, 4, 1, 3, 5},
                             {5, 2, 4, 1, 3},
                             {3, 5, 2, 4, 1}});
}
inline midls::Square mid5_bl() {
  return midls::make_square({{1, 4, 2, 5, 3},
                             {4, 2, 5, 3, 1},
                             {2, 5, 3, 1, 4},
                             {5, 3, 1, 4, 2},
                             {3, 1, 4, 2, 5}});
}
inline midls::Square mid5_br() {
  return midls::make_square({{1, 4, 2, 5, 3},
                             {3, 1, 4, 2, 5},
                             {5, 3, 1, 4, 2},
                             {2, 5, 3, 1, 4},
                             {4, 2, 5, 3, 1}});
}

// All 10 normal rows of maximum inner distance at n=6, with their extended
// difference rows (eps_1..eps_5, h). One printed wrap term in the source
// table was wrong ((1,5,2,4,6,3) shows h=-1 there); recomputation gives +1.
struct ExtRowCase {
  Row row;
  std::vector<int> eps;
  int h;
};

inline std::vector<ExtRowCase> n6_max_rows() {
  return {
      {{1, 3, 5, 2, 4, 6}, {-1, -1, 0, -1, -1}, -2},
      {{1, 3, 5, 2, 6, 4}, {-1, -1, 0, 1, 1}, 0},
      {{1, 3, 6, 4, 2, 5}, {-1, 0, 1, 1, 0}, -1},
      {{1, 4, 6, 2, 5, 3}, {0, -1, -1, 0, 1}, 1},
      {{1, 4, 6, 3, 5, 2}, {0, -1, 0, -1, 0}, 2},
      {{1, 4, 2, 5, 3, 6}, {0, 1, 0, 1, 0}, -2},
      {{1, 4, 2, 6, 3, 5}, {0, 1, 1, 0, -1}, -1},
      {{1, 5, 2, 4, 6, 3}, {1, 0, -1, -1, 0}, 1},
      {{1, 5, 3, 6, 2, 4}, {1, 1, 0, -1, -1}, 0},
      {{1, 5, 3, 6, 4, 2}, {1, 1, 0, 1, 1}, 2},
  };
}

// Maximum-distance rows at n = 8, 10, 12 with difference and extended
// difference rows.
inline Row n8_row() { return {1, 6, 2, 5, 8, 4, 7, 3}; }
inline std::vector<int> n8_diff() { return {5, 4, 3, 3, 4, 3, 4}; }
inline std::vector<int> n8_eps() { return {1, 0, -1, -1, 0, -1, 0}; }
constexpr int n8_h = 2;

inline Row n10_row() { return {1, 7, 2, 6, 10, 5, 9, 4, 8, 3}; }
inline std::vector<int> n10_eps() { return {1, 0, -1, -1, 0, -1, 0, -1, 0}; }
constexpr int n10_h = 3;

inline Row n12_row() { return {1, 8, 2, 7, 12, 6, 11, 5, 10, 4, 9, 3}; }
inline std::vector<int> n12_eps() { return {1, 0, -1, -1, 0, -1, 0, -1, 0, -1, 0}; }
constexpr int n12_h = 4;

// 2xn maximum-inner-distance rectangles: the alternating row stacked over a
// compatible second row.
inline midls::Rectangle stacked_n6() {
  return midls::make_rectangle(2, 6, {1, 4, 2, 5, 3, 6, 4, 1, 5, 3, 6, 2});
}
inline midls::Rectangle stacked_n8() {
  return midls::make_rectangle(2, 8, {1, 5, 2, 6, 3, 7, 4, 8, 6, 1, 5, 2, 7, 4, 8, 3});
}

}  // namespace fixtures
