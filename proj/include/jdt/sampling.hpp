#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "jdt/dynamics.hpp"
#include "jdt/errors.hpp"
#include "jdt/rng.hpp"
#include "jdt/tableau.hpp"

namespace jdt {

// Uniform standard tableau of the given shape by the Greene-Nijenhuis-Wilf
// hook walk: start at a uniform cell, jump to a uniform cell of the current
// hook until a corner is reached, put the largest unused entry there.
inline StandardTableau sample_uniform_syt(const YoungDiagram& shape, Rng& rng) {
  const int n = shape.size();
  if (n < 1) throw InputError("sample_uniform_syt on an empty shape");
  std::vector<int> row_len(shape.rows());
  std::vector<int> col_h(static_cast<std::size_t>(shape.num_cols()));
  for (int x = 1; x <= shape.num_cols(); ++x)
    col_h[static_cast<std::size_t>(x - 1)] = shape.column_height(x);
  std::vector<std::vector<int>> rows;
  for (int r : shape.rows()) rows.emplace_back(static_cast<std::size_t>(r), 0);

  for (int k = n; k >= 1; --k) {
    // Uniform cell of the remaining diagram.
    auto idx = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    int y = 0;
    while (idx >= row_len[static_cast<std::size_t>(y)]) {
      idx -= row_len[static_cast<std::size_t>(y)];
      ++y;
    }
    int x = idx;  // zero-based
    for (;;) {
      const int arm = row_len[static_cast<std::size_t>(y)] - 1 - x;
      const int leg = col_h[static_cast<std::size_t>(x)] - 1 - y;
      if (arm + leg == 0) break;
      const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(arm + leg)));
      if (j <= arm) x += j;
      else y += j - arm;
    }
    rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = k;
    --row_len[static_cast<std::size_t>(y)];
    --col_h[static_cast<std::size_t>(x)];
  }
  return StandardTableau(std::move(rows));
}

inline StandardTableau sample_uniform_syt(const YoungDiagram& shape, RngSpec spec) {
  Rng rng(spec);
  return sample_uniform_syt(shape, rng);
}

struct PieriSamplerStats {
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;

  double acceptance_rate() const {
    return attempts ? static_cast<double>(accepted) / static_cast<double>(attempts) : 0.0;
  }
};

// Uniform tableau among those whose k largest entries are Pieri-ordered, by
// rejection from the uniform sampler.
inline StandardTableau sample_uniform_pieri(const YoungDiagram& shape, int k, Rng& rng,
                                            PieriSamplerStats* stats = nullptr) {
  if (k < 1 || k > shape.size()) throw InputError("sample_uniform_pieri: k out of range");
  for (;;) {
    auto t = sample_uniform_syt(shape, rng);
    if (stats) ++stats->attempts;
    if (is_pieri(t, k)) {
      if (stats) ++stats->accepted;
      return t;
    }
  }
}

inline StandardTableau sample_uniform_pieri(const YoungDiagram& shape, int k, RngSpec spec) {
  Rng rng(spec);
  return sample_uniform_pieri(shape, k, rng);
}

// Fisher-Yates shuffle of 1..n.
inline std::vector<int> sample_permutation(int n, Rng& rng) {
  if (n < 1) throw InputError("sample_permutation: n must be positive");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(p[static_cast<std::size_t>(i)], p[j]);
  }
  return p;
}

inline std::vector<int> sample_permutation(int n, RngSpec spec) {
  Rng rng(spec);
  return sample_permutation(n, rng);
}

// Random Young diagram inside the cols x rows rectangle, rows weakly decreasing.
inline YoungDiagram sample_diagram_in_box(int cols, int rows, Rng& rng) {
  std::vector<int> lengths;
  int cap = cols;
  for (int y = 0; y < rows && cap > 0; ++y) {
    cap = rng.between(0, cap);
    lengths.push_back(cap);
  }
  return YoungDiagram(std::move(lengths));
}

// Random surfer coupling: uniform water on a random diagram inside the
// side x side square, a uniform addable cell for the surfer, and k cells
// added one at a time, each uniform among addable cells whose u exceeds the
// previous one. Cells may leave the square.
inline SurferCoupling sample_synthetic_coupling(int side, int k, Rng& rng) {
  if (side < 1 || k < 1) throw InputError("sample_synthetic_coupling: bad side or k");
  const YoungDiagram shape = sample_diagram_in_box(side, side, rng);
  const StandardTableau water =
      shape.empty() ? StandardTableau() : sample_uniform_syt(shape, rng);
  const auto corners = shape.addable_cells();
  const Position surfer = corners[rng.below(corners.size())];
  std::vector<Position> cells;
  YoungDiagram grown = shape;
  for (int p = 0; p < k; ++p) {
    std::vector<Position> options;
    for (Position c : grown.addable_cells())
      if (cells.empty() || c.u() > cells.back().u()) options.push_back(c);
    // The cell on the first row is always addable and has the largest u.
    const Position c = options[rng.below(options.size())];
    cells.push_back(c);
    grown = grown.with_cell(c);
  }
  return build_coupling(water, surfer, cells);
}

}  // namespace jdt
