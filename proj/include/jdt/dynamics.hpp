#pragma once

// Jeu de taquin on fillings of Young diagrams: single slides j, the modified
// slide J, evacuation and lazy paths, Pieri tests and the surfer coupling.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "jdt/errors.hpp"
#include "jdt/tableau.hpp"

namespace jdt {

// Mutable filling that supports in-place slides with O(1) entry lookup.
// Labels are kept as they are; nothing is renumbered.
class SlideEngine {
 public:
  explicit SlideEngine(const StandardTableau& t)
      : rows_(t.rows()), size_(t.size()) {
    where_.assign(static_cast<std::size_t>(t.max_entry()) + 1, Position{});
    for (std::size_t y = 0; y < rows_.size(); ++y)
      for (std::size_t x = 0; x < rows_[y].size(); ++x)
        where_[static_cast<std::size_t>(rows_[y][x])] =
            Position{static_cast<int>(x) + 1, static_cast<int>(y) + 1};
  }

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool has_entry(int label) const {
    return label >= 1 && label < static_cast<int>(where_.size()) &&
           where_[static_cast<std::size_t>(label)].x != 0;
  }

  Position position_of(int label) const {
    if (!has_entry(label))
      throw InputError("entry " + std::to_string(label) + " not present");
    return where_[static_cast<std::size_t>(label)];
  }

  int row_length(int y) const {
    return (y >= 1 && y <= static_cast<int>(rows_.size()))
               ? static_cast<int>(rows_[static_cast<std::size_t>(y - 1)].size())
               : 0;
  }

  int at(Position p) const {
    return rows_[static_cast<std::size_t>(p.y - 1)][static_cast<std::size_t>(p.x - 1)];
  }

  // Erases the corner entry and slides the hole out; returns the cell the hole
  // leaves through. When `path` is given the hole trajectory is appended.
  Position slide(std::vector<Position>* path = nullptr) {
    if (size_ == 0) throw InputError("cannot slide an empty tableau");
    Position hole{1, 1};
    where_[static_cast<std::size_t>(at(hole))] = Position{};
    if (path) path->push_back(hole);
    for (;;) {
      const bool has_right = hole.x + 1 <= row_length(hole.y);
      const bool has_above = hole.x <= row_length(hole.y + 1);
      if (!has_right && !has_above) break;
      Position next;
      if (has_right && has_above) {
        const Position r{hole.x + 1, hole.y};
        const Position a{hole.x, hole.y + 1};
        next = at(r) < at(a) ? r : a;
      } else {
        next = has_right ? Position{hole.x + 1, hole.y} : Position{hole.x, hole.y + 1};
      }
      move_into(next, hole);
      hole = next;
      if (path) path->push_back(hole);
    }
    auto& row = rows_[static_cast<std::size_t>(hole.y - 1)];
    row.pop_back();
    if (row.empty()) rows_.pop_back();
    --size_;
    return hole;
  }

  // Adds a box holding `label` at an addable cell.
  void append(Position cell, int label) {
    if (cell.x != row_length(cell.y) + 1 ||
        (cell.y > 1 && row_length(cell.y - 1) < cell.x) ||
        cell.y > static_cast<int>(rows_.size()) + 1)
      throw InputError("cell is not addable");
    if (cell.y == static_cast<int>(rows_.size()) + 1) rows_.emplace_back();
    rows_[static_cast<std::size_t>(cell.y - 1)].push_back(label);
    if (label >= static_cast<int>(where_.size()))
      where_.resize(static_cast<std::size_t>(label) + 1, Position{});
    where_[static_cast<std::size_t>(label)] = cell;
    ++size_;
  }

  StandardTableau tableau(int label_shift = 0) const {
    if (label_shift == 0) return StandardTableau(rows_);
    auto rows = rows_;
    for (auto& r : rows)
      for (int& v : r) v += label_shift;
    return StandardTableau(std::move(rows));
  }

 private:
  void move_into(Position from, Position to) {
    const int v = at(from);
    rows_[static_cast<std::size_t>(to.y - 1)][static_cast<std::size_t>(to.x - 1)] = v;
    where_[static_cast<std::size_t>(v)] = to;
  }

  std::vector<std::vector<int>> rows_;
  std::vector<Position> where_;
  int size_ = 0;
};

struct JdtRecord {
  StandardTableau before;
  StandardTableau after;
  std::vector<Position> hole_path;
};

// One slide j(T). The output keeps the original labels of the surviving boxes.
inline JdtRecord jdt_slide(const StandardTableau& t) {
  if (t.empty()) throw InputError("jdt_slide on an empty tableau");
  JdtRecord rec{t, {}, {}};
  SlideEngine engine(t);
  engine.slide(&rec.hole_path);
  rec.after = engine.tableau();
  return rec;
}

// J(T): slide, put |T|+1 where the hole left, then lower every entry by one.
// Requires labels 1..n.
inline StandardTableau modified_jdt(const StandardTableau& t) {
  if (t.empty()) throw InputError("modified_jdt on an empty tableau");
  SlideEngine engine(t);
  const Position exit = engine.slide();
  engine.append(exit, t.max_entry() + 1);
  return engine.tableau(-1);
}

// J applied repeatedly without renumbering at every step. After i steps the
// stored label l stands for the entry l - i of J^i(T).
class ModifiedJdtEngine {
 public:
  explicit ModifiedJdtEngine(const StandardTableau& t)
      : engine_(t), next_label_(t.max_entry() + 1) {}

  void step() {
    const Position exit = engine_.slide();
    engine_.append(exit, next_label_++);
    ++steps_;
  }

  int steps() const { return steps_; }

  Position position_of(int entry) const {
    return engine_.position_of(entry + steps_);
  }

  StandardTableau tableau() const { return engine_.tableau(-steps_); }

 private:
  SlideEngine engine_;
  int next_label_;
  int steps_ = 0;
};

struct EvacuationPath {
  std::vector<Position> positions;
};

// Trajectory of the largest entry n under j, j^2, ..., j^{n-1}.
inline EvacuationPath evacuation_path(const StandardTableau& t) {
  if (t.empty()) throw InputError("evacuation_path on an empty tableau");
  const int n = t.max_entry();
  EvacuationPath out;
  out.positions.reserve(static_cast<std::size_t>(t.size()));
  SlideEngine engine(t);
  for (int i = 0; i < t.size(); ++i) {
    out.positions.push_back(engine.position_of(n));
    if (i + 1 < t.size()) engine.slide();
  }
  return out;
}

// pos_n(j^i(T)) == pos_{n-i}(J^i(T)).
inline bool happy_box_check(const StandardTableau& t, int step) {
  const int n = t.size();
  if (step < 0 || step > n - 1) throw InputError("step out of range");
  SlideEngine shrinking(t);
  ModifiedJdtEngine cycling(t);
  for (int i = 0; i < step; ++i) {
    shrinking.slide();
    cycling.step();
  }
  return shrinking.position_of(n) == cycling.position_of(n - step);
}

// Sweeps all steps 0..n-1 in one pass. Returns the first failing step.
inline std::optional<int> happy_box_first_failure(const StandardTableau& t) {
  const int n = t.size();
  SlideEngine shrinking(t);
  ModifiedJdtEngine cycling(t);
  for (int i = 0; i < n; ++i) {
    if (shrinking.position_of(n) != cycling.position_of(n - i)) return i;
    if (i + 1 < n) {
      shrinking.slide();
      cycling.step();
    }
  }
  return std::nullopt;
}

struct LazyPath {
  // q[i-1] is q_i.
  std::vector<Position> q;
};

// q_i is the last cell of the first slide's hole path whose entry in T is at
// most i. Needs labels 1..n; the filling need not be increasing.
inline LazyPath lazy_jdt_path(const StandardTableau& t) {
  if (t.empty()) throw InputError("lazy_jdt_path on an empty tableau");
  const int n = t.size();
  if (t.min_entry() != 1 || t.max_entry() != n)
    throw InputError("lazy_jdt_path needs labels 1..n");
  for (int l = 1; l <= n; ++l)
    if (!t.has_entry(l)) throw InputError("lazy_jdt_path needs labels 1..n");
  std::vector<Position> path;
  SlideEngine engine(t);
  engine.slide(&path);
  // last[e] = largest path index carrying entry e, then a running maximum.
  std::vector<int> last(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t j = 0; j < path.size(); ++j)
    last[static_cast<std::size_t>(t.at(path[j]))] = static_cast<int>(j);
  LazyPath out;
  out.q.reserve(static_cast<std::size_t>(n));
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    best = std::max(best, last[static_cast<std::size_t>(i)]);
    out.q.push_back(path[static_cast<std::size_t>(best)]);
  }
  return out;
}

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// X_t = pos_{N^2}(j^{floor(t N^2)}(T)) / N for each t. t = 1 is clamped to the
// last step N^2 - 1, where the largest entry is the sole box.
inline std::vector<Point> scaled_evacuation_curve(const StandardTableau& t,
                                                  const std::vector<double>& t_grid) {
  if (!t.shape().is_square() || t.empty())
    throw InputError("scaled_evacuation_curve requires a square tableau");
  const int side = t.shape().num_cols();
  const int n = t.size();
  std::vector<int> steps;
  steps.reserve(t_grid.size());
  for (double tv : t_grid) {
    if (!(tv >= 0.0 && tv <= 1.0)) throw InputError("t outside [0,1]");
    steps.push_back(std::min(n - 1, static_cast<int>(std::floor(tv * n))));
  }
  std::vector<std::size_t> order(t_grid.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return steps[a] < steps[b]; });
  std::vector<Point> out(t_grid.size());
  SlideEngine engine(t);
  int done = 0;
  for (std::size_t idx : order) {
    while (done < steps[idx]) {
      engine.slide();
      ++done;
    }
    const Position p = engine.position_of(n);
    out[idx] = Point{static_cast<double>(p.x) / side, static_cast<double>(p.y) / side};
  }
  return out;
}

namespace detail {

// Labels of the k largest entries, ascending.
inline std::vector<int> top_labels(const StandardTableau& t, int k) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  const int hi = t.max_entry();
  bool contiguous = true;
  for (int l = hi - k + 1; l <= hi; ++l) {
    if (!t.has_entry(l)) {
      contiguous = false;
      break;
    }
    out.push_back(l);
  }
  if (contiguous) return out;
  auto word = t.reading_word();
  std::sort(word.begin(), word.end());
  return {word.end() - k, word.end()};
}

}  // namespace detail

// True iff the k largest entries have strictly increasing u-coordinates.
inline bool is_pieri(const StandardTableau& t, int k) {
  if (k < 0 || k > t.size()) throw InputError("is_pieri: k out of range");
  if (k <= 1) return true;
  const auto labels = detail::top_labels(t, k);
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (t.position_of(labels[i - 1]).u() >= t.position_of(labels[i]).u()) return false;
  return true;
}

struct SurferCoupling {
  StandardTableau water;
  StandardTableau single;  // water plus the surfer, entry w+1
  StandardTableau multi;   // water plus multisurfers, entries w+1..w+k
  int water_size = 0;
  int surfers = 0;
};

inline SurferCoupling build_coupling(const StandardTableau& water,
                                     Position surfer_corner,
                                     const std::vector<Position>& multi_cells) {
  if (auto v = validate(water)) throw InputError("water is not standard: " + *v);
  if (multi_cells.empty()) throw InputError("need at least one multisurfer");
  const int w = water.size();
  if (!water.shape().is_addable(surfer_corner))
    throw InputError("surfer cell is not addable to the water");
  SlideEngine single(water);
  single.append(surfer_corner, w + 1);

  SlideEngine multi(water);
  YoungDiagram grown = water.shape();
  for (std::size_t p = 0; p < multi_cells.size(); ++p) {
    const Position c = multi_cells[p];
    if (!grown.is_addable(c)) throw InputError("multisurfer cell is not addable");
    if (p > 0 && multi_cells[p - 1].u() >= c.u())
      throw InputError("multisurfer u-coordinates must strictly increase");
    multi.append(c, w + 1 + static_cast<int>(p));
    grown = grown.with_cell(c);
  }
  return SurferCoupling{water, single.tableau(), multi.tableau(), w,
                        static_cast<int>(multi_cells.size())};
}

using Fraction = boost::rational<int>;

// How a multisurfer on the surfer's diagonal is counted. With kInclusive
// (u_multi <= u_surfer) a multisurfer that drains onto the surfer's diagonal
// after starting to its right is counted as left of it, so the sequence can
// increase; kStrict has no such ties and is the default.
enum class TieRule { kStrict, kInclusive };

// psi~_q for q = 0..w: share of multisurfers left of the surfer, counted as
// the largest index p over k. No qualifying p gives 0.
inline std::vector<Fraction> psi_tilde_sequence(const SurferCoupling& c,
                                                TieRule rule = TieRule::kStrict) {
  const int w = c.water_size;
  const int k = c.surfers;
  SlideEngine single(c.single);
  SlideEngine multi(c.multi);
  std::vector<Fraction> out;
  out.reserve(static_cast<std::size_t>(w) + 1);
  for (int q = 0; q <= w; ++q) {
    const int surfer_u = single.position_of(w + 1).u();
    int best = 0;
    for (int p = 1; p <= k; ++p) {
      const int u = multi.position_of(w + p).u();
      if (u < surfer_u || (rule == TieRule::kInclusive && u == surfer_u)) best = p;
    }
    out.emplace_back(best, k);
    if (q < w) {
      single.slide();
      multi.slide();
    }
  }
  return out;
}

// Longitude estimate from multisurfers w+1..w+k: largest p with
// u_{w+p} / N <= u, over k; 0 when none qualifies.
inline Fraction multisurfer_longitude(const StandardTableau& m, int w, int k, double u,
                                      int side) {
  if (k < 1 || side < 1) throw InputError("multisurfer_longitude: bad k or N");
  int best = 0;
  for (int p = 1; p <= k; ++p) {
    if (!m.has_entry(w + p)) throw InputError("multisurfer entry missing");
    if (static_cast<double>(m.position_of(w + p).u()) / side <= u) best = p;
  }
  return Fraction(best, k);
}

}  // namespace jdt
