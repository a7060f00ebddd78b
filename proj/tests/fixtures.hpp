#pragma once

#include "jdt/tableau.hpp"

namespace jdt::fixtures {

// Tableau of shape (5,4,3,1) used throughout the golden tests, bottom row
// first.
inline StandardTableau figure_tableau() {
  return StandardTableau({{1, 3, 7, 10, 13}, {2, 4, 6, 12}, {5, 8, 9}, {11}});
}

// One slide of figure_tableau(), labels kept.
inline StandardTableau figure_after_slide() {
  return StandardTableau({{2, 3, 7, 10, 13}, {4, 6, 9, 12}, {5, 8}, {11}});
}

// Modified slide of figure_tableau().
inline StandardTableau figure_after_modified_slide() {
  return StandardTableau({{1, 2, 6, 9, 12}, {3, 5, 8, 11}, {4, 7, 13}, {10}});
}

inline StandardTableau one_row(int n) {
  std::vector<int> r;
  for (int i = 1; i <= n; ++i) r.push_back(i);
  return StandardTableau({r});
}

inline StandardTableau one_column(int n) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= n; ++i) rows.push_back({i});
  return StandardTableau(rows);
}

// The two tableaux of the 2x2 square.
inline StandardTableau square2_rows() { return StandardTableau({{1, 2}, {3, 4}}); }
inline StandardTableau square2_cols() { return StandardTableau({{1, 3}, {2, 4}}); }

}  // namespace jdt::fixtures
