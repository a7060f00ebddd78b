#pragma once

// Young diagrams and fillings in French convention: x is the column, y is
// the row, both 1-based, and row 1 is the bottom row.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jdt/errors.hpp"

namespace jdt {

struct Position {
  int x = 0;
  int y = 0;

  // Content of the cell, column minus row.
  constexpr int u() const { return x - y; }

  friend constexpr bool operator==(const Position&, const Position&) = default;
  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Position& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

class YoungDiagram {
 public:
  YoungDiagram() = default;

  // Row lengths, bottom row first. Trailing zeros are dropped.
  explicit YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] <= 0) throw InputError("row lengths must be positive");
      if (i > 0 && rows_[i] > rows_[i - 1])
        throw InputError("row lengths must be weakly decreasing");
    }
  }

  static YoungDiagram square(int side) {
    if (side < 0) throw InputError("negative square side");
    return YoungDiagram(std::vector<int>(static_cast<std::size_t>(side), side));
  }

  static YoungDiagram rectangle(int cols, int rows) {
    if (cols < 0 || rows < 0) throw InputError("negative rectangle side");
    if (cols == 0) return YoungDiagram();
    return YoungDiagram(std::vector<int>(static_cast<std::size_t>(rows), cols));
  }

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return rows_.empty() ? 0 : rows_.front(); }
  int size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }
  bool empty() const { return rows_.empty(); }

  // Length of row y (1-based); zero above the top row.
  int row_length(int y) const {
    return (y >= 1 && y <= num_rows()) ? rows_[static_cast<std::size_t>(y - 1)]
                                       : 0;
  }

  // Height of column x (1-based).
  int column_height(int x) const {
    int h = 0;
    while (h < num_rows() && rows_[static_cast<std::size_t>(h)] >= x) ++h;
    return h;
  }

  bool contains(Position p) const {
    return p.x >= 1 && p.y >= 1 && p.x <= row_length(p.y);
  }

  bool is_addable(Position p) const {
    if (p.x < 1 || p.y < 1) return false;
    if (p.x != row_length(p.y) + 1) return false;
    return p.y == 1 || row_length(p.y - 1) >= p.x;
  }

  bool is_removable(Position p) const {
    return contains(p) && p.x == row_length(p.y) && row_length(p.y + 1) < p.x;
  }

  std::vector<Position> addable_cells() const {
    std::vector<Position> out;
    for (int y = 1; y <= num_rows() + 1; ++y) {
      Position p{row_length(y) + 1, y};
      if (is_addable(p)) out.push_back(p);
    }
    return out;
  }

  std::vector<Position> removable_cells() const {
    std::vector<Position> out;
    for (int y = 1; y <= num_rows(); ++y) {
      Position p{row_length(y), y};
      if (is_removable(p)) out.push_back(p);
    }
    return out;
  }

  bool is_rectangle() const {
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](int r) { return r == rows_.front(); });
  }

  bool is_square() const { return is_rectangle() && num_cols() == num_rows(); }

  // Number of cells to the right and above p, plus p itself.
  int hook_length(Position p) const {
    return (row_length(p.y) - p.x) + (column_height(p.x) - p.y) + 1;
  }

  YoungDiagram transposed() const {
    std::vector<int> cols;
    for (int x = 1; x <= num_cols(); ++x) cols.push_back(column_height(x));
    return YoungDiagram(std::move(cols));
  }

  YoungDiagram with_cell(Position p) const {
    if (!is_addable(p)) throw InputError("cell is not addable");
    auto rows = rows_;
    if (p.y > num_rows()) rows.push_back(1);
    else ++rows[static_cast<std::size_t>(p.y - 1)];
    return YoungDiagram(std::move(rows));
  }

  YoungDiagram without_cell(Position p) const {
    if (!is_removable(p)) throw InputError("cell is not removable");
    auto rows = rows_;
    --rows[static_cast<std::size_t>(p.y - 1)];
    return YoungDiagram(std::move(rows));
  }

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

inline std::ostream& operator<<(std::ostream& os, const YoungDiagram& d) {
  os << '(';
  for (std::size_t i = 0; i < d.rows().size(); ++i)
    os << (i ? "," : "") << d.rows()[i];
  return os << ')';
}

// A filling of a Young diagram by distinct positive integers. Whether the
// filling is a standard tableau is a separate question answered by
// validate(); the slide engine produces fillings with labels 2..n, which are
// increasing but not labelled 1..n.
class StandardTableau {
 public:
  StandardTableau() = default;

  // rows[0] is the bottom row. Row lengths must form a partition.
  explicit StandardTableau(std::vector<std::vector<int>> rows)
      : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    std::vector<int> lengths;
    lengths.reserve(rows_.size());
    for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
    shape_ = YoungDiagram(std::move(lengths));
    rebuild_index();
  }

  StandardTableau(std::initializer_list<std::vector<int>> rows)
      : StandardTableau(std::vector<std::vector<int>>(rows)) {}

  const YoungDiagram& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int max_entry() const { return max_entry_; }
  int min_entry() const { return min_entry_; }

  int at(Position p) const {
    if (!shape_.contains(p)) throw InputError("position outside the diagram");
    return rows_[static_cast<std::size_t>(p.y - 1)]
                [static_cast<std::size_t>(p.x - 1)];
  }

  bool has_entry(int k) const {
    return k >= 1 && k < static_cast<int>(where_.size()) &&
           where_[static_cast<std::size_t>(k)].x != 0;
  }

  Position position_of(int k) const {
    if (!has_entry(k))
      throw InputError("entry " + std::to_string(k) + " not in tableau");
    return where_[static_cast<std::size_t>(k)];
  }

  // Reading word, bottom row first, left to right.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(size_));
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
  }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
    if (a.shape_.rows() != b.shape_.rows())
      return a.shape_.rows() < b.shape_.rows();
    return a.reading_word() < b.reading_word();
  }

 private:
  void rebuild_index() {
    size_ = 0;
    max_entry_ = 0;
    min_entry_ = 0;
    for (const auto& r : rows_) {
      for (int v : r) {
        if (v <= 0) throw InputError("entries must be positive");
        max_entry_ = std::max(max_entry_, v);
        min_entry_ = size_ == 0 ? v : std::min(min_entry_, v);
        ++size_;
      }
    }
    where_.assign(static_cast<std::size_t>(max_entry_) + 1, Position{});
    duplicate_.reset();
    for (std::size_t y = 0; y < rows_.size(); ++y) {
      for (std::size_t x = 0; x < rows_[y].size(); ++x) {
        auto& slot = where_[static_cast<std::size_t>(rows_[y][x])];
        if (slot.x != 0 && !duplicate_) duplicate_ = Position{int(x) + 1, int(y) + 1};
        slot = Position{static_cast<int>(x) + 1, static_cast<int>(y) + 1};
      }
    }
  }

  friend std::optional<std::string> validate_filling(const StandardTableau&);

  YoungDiagram shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Position> where_;
  std::optional<Position> duplicate_;
  int size_ = 0;
  int max_entry_ = 0;
  int min_entry_ = 0;
};

// Checks distinctness and strict increase along rows and columns. Returns a
// description of the first violation, or nullopt.
inline std::optional<std::string> validate_filling(const StandardTableau& t) {
  std::ostringstream msg;
  if (t.duplicate_) {
    msg << "duplicate entry " << t.at(*t.duplicate_) << " at " << *t.duplicate_;
    return msg.str();
  }
  const auto& rows = t.rows();
  for (std::size_t y = 0; y < rows.size(); ++y) {
    for (std::size_t x = 0; x < rows[y].size(); ++x) {
      Position p{static_cast<int>(x) + 1, static_cast<int>(y) + 1};
      if (x > 0 && rows[y][x - 1] >= rows[y][x]) {
        msg << "row not increasing at " << p;
        return msg.str();
      }
      if (y > 0 && rows[y - 1][x] >= rows[y][x]) {
        msg << "column not increasing at " << p;
        return msg.str();
      }
    }
  }
  return std::nullopt;
}

// validate_filling plus the requirement that the labels are exactly 1..n.
inline std::optional<std::string> validate(const StandardTableau& t) {
  if (auto v = validate_filling(t)) return v;
  if (t.size() > 0 && (t.min_entry() != 1 || t.max_entry() != t.size())) {
    std::ostringstream msg;
    msg << "entries are not 1.." << t.size() << " (max entry " << t.max_entry()
        << ")";
    return msg.str();
  }
  return std::nullopt;
}

inline Position position_of(const StandardTableau& t, int k) {
  if (k < 1 || k > t.max_entry())
    throw InputError("entry " + std::to_string(k) + " out of range");
  return t.position_of(k);
}

inline StandardTableau transpose(const StandardTableau& t) {
  const auto shape_t = t.shape().transposed();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape_t.num_rows()));
  for (int y = 1; y <= shape_t.num_rows(); ++y)
    for (int x = 1; x <= shape_t.row_length(y); ++x)
      rows[static_cast<std::size_t>(y - 1)].push_back(t.at(Position{y, x}));
  return StandardTableau(std::move(rows));
}

// Rotation by 180 degrees combined with k -> n+1-k. Rectangles only.
inline StandardTableau rotate_complement(const StandardTableau& t) {
  if (!t.shape().is_rectangle())
    throw InputError("rotate_complement requires a rectangular shape");
  const int a = t.shape().num_cols();
  const int b = t.shape().num_rows();
  const int n = t.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(b),
                                     std::vector<int>(static_cast<std::size_t>(a)));
  for (int y = 1; y <= b; ++y)
    for (int x = 1; x <= a; ++x)
      rows[static_cast<std::size_t>(b - y)][static_cast<std::size_t>(a - x)] =
          n + 1 - t.at(Position{x, y});
  return StandardTableau(std::move(rows));
}

inline constexpr int kEnumerateMaxSize = 12;

// All standard tableaux of the given shape, sorted by (shape, reading word).
inline std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape) {
  const int n = shape.size();
  if (n > kEnumerateMaxSize)
    throw InputError("enumerate_syt is limited to " +
                     std::to_string(kEnumerateMaxSize) + " boxes");
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows;
  for (int r : shape.rows()) rows.emplace_back(static_cast<std::size_t>(r), 0);

  // Place entries n, n-1, ... at removable corners of the shrinking shape.
  std::function<void(const YoungDiagram&, int)> fill = [&](const YoungDiagram& d,
                                                          int k) {
    if (k == 0) {
      out.emplace_back(rows);
      return;
    }
    for (Position c : d.removable_cells()) {
      rows[static_cast<std::size_t>(c.y - 1)][static_cast<std::size_t>(c.x - 1)] = k;
      fill(d.without_cell(c), k - 1);
    }
  };
  fill(shape, n);
  std::sort(out.begin(), out.end());
  return out;
}

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kHookDimensionMaxSize = 400;

// Number of standard tableaux of the shape, by the hook length formula.
inline BigInt hook_dimension(const YoungDiagram& shape) {
  const int n = shape.size();
  if (n > kHookDimensionMaxSize)
    throw InputError("hook_dimension is limited to " +
                     std::to_string(kHookDimensionMaxSize) + " boxes");
  BigInt num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  BigInt den = 1;
  for (int y = 1; y <= shape.num_rows(); ++y)
    for (int x = 1; x <= shape.row_length(y); ++x)
      den *= shape.hook_length(Position{x, y});
  return num / den;
}

// All partitions of n, each in weakly decreasing order.
inline std::vector<YoungDiagram> partitions_of(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Text format: first line holds the row lengths, then one line of entries per
// row, bottom row first.
inline void write_tableau(std::ostream& os, const StandardTableau& t) {
  const auto& lengths = t.shape().rows();
  for (std::size_t i = 0; i < lengths.size(); ++i)
    os << (i ? " " : "") << lengths[i];
  os << '\n';
  for (const auto& row : t.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
}

inline std::string to_text(const StandardTableau& t) {
  std::ostringstream os;
  write_tableau(os, t);
  return os.str();
}

namespace detail {

inline std::vector<int> parse_int_line(const std::string& line) {
  std::istringstream is(line);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw FormatError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw FormatError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace detail

// Reads one tableau. Blank lines before the header are skipped; returns
// nullopt at end of input.
inline std::optional<StandardTableau> read_tableau(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (!detail::is_blank(line)) break;
    line.clear();
  }
  if (line.empty() || detail::is_blank(line)) return std::nullopt;
  std::vector<int> lengths = detail::parse_int_line(line);
  YoungDiagram shape;
  try {
    shape = YoungDiagram(lengths);
  } catch (const InputError& e) {
    throw FormatError(std::string("bad shape line: ") + e.what());
  }
  std::vector<std::vector<int>> rows;
  for (int len : shape.rows()) {
    if (!std::getline(is, line)) throw FormatError("truncated tableau");
    auto row = detail::parse_int_line(line);
    if (static_cast<int>(row.size()) != len)
      throw FormatError("row length does not match shape line");
    rows.push_back(std::move(row));
  }
  try {
    return StandardTableau(std::move(rows));
  } catch (const InputError& e) {
    throw FormatError(e.what());
  }
}

inline StandardTableau parse_tableau(const std::string& text) {
  std::istringstream is(text);
  auto t = read_tableau(is);
  if (!t) throw FormatError("no tableau in input");
  return *t;
}

}  // namespace jdt
