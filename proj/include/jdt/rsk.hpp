#pragma once

// Robinson-Schensted correspondence and the permutation identities tying
// evacuation paths to lazy jeu de taquin paths.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jdt/dynamics.hpp"
#include "jdt/errors.hpp"
#include "jdt/tableau.hpp"

namespace jdt {

struct RskPair {
  StandardTableau insertion;  // P
  StandardTableau recording;  // Q
};

// Row insertion of a word of distinct positive integers. P holds the letters
// themselves; Q records insertion times 1..n.
inline RskPair rsk_word(const std::vector<int>& word) {
  std::vector<std::vector<int>> p_rows;
  std::vector<std::vector<int>> q_rows;
  int step = 0;
  for (int letter : word) {
    ++step;
    int carry = letter;
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p_rows.size()) {
        p_rows.push_back({carry});
        q_rows.push_back({step});
        break;
      }
      auto& r = p_rows[row];
      auto it = std::upper_bound(r.begin(), r.end(), carry);
      if (it == r.end()) {
        r.push_back(carry);
        q_rows[row].push_back(step);
        break;
      }
      if (*it == carry) throw InputError("rsk: repeated letter");
      std::swap(*it, carry);
    }
  }
  return RskPair{StandardTableau(std::move(p_rows)), StandardTableau(std::move(q_rows))};
}

inline void require_permutation(const std::vector<int>& sigma) {
  std::vector<char> seen(sigma.size() + 1, 0);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(v)])
      throw InputError("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

inline RskPair rsk(const std::vector<int>& sigma) {
  require_permutation(sigma);
  return rsk_word(sigma);
}

// sigma -> (n+1-sigma_n, ..., n+1-sigma_1).
inline std::vector<int> schuetzenberger_star(const std::vector<int>& sigma) {
  require_permutation(sigma);
  const int n = static_cast<int>(sigma.size());
  std::vector<int> out(sigma.size());
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = n + 1 - sigma[static_cast<std::size_t>(n - 1 - i)];
  return out;
}

// Order-preserving relabelling of a filling to 1..n.
inline StandardTableau standardize(const StandardTableau& t) {
  auto labels = t.reading_word();
  std::sort(labels.begin(), labels.end());
  auto rows = t.rows();
  for (auto& r : rows)
    for (int& v : r)
      v = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) -
                           labels.begin()) + 1;
  return StandardTableau(std::move(rows));
}

// j(Q(sigma)), relabelled to 1..n-1, equals Q(sigma_2, ..., sigma_n).
inline bool check_shift_identity(const std::vector<int>& sigma) {
  if (sigma.size() < 2) throw InputError("check_shift_identity needs n >= 2");
  const auto q = rsk(sigma).recording;
  const auto slid = standardize(jdt_slide(q).after);
  const std::vector<int> tail(sigma.begin() + 1, sigma.end());
  return slid == rsk_word(tail).recording;
}

// For every p: q_p(Q(sigma)) is where the largest entry sits in
// j^{n-p}(Q(eps*(sigma))).
inline bool path_equivalence_check(const std::vector<int>& sigma) {
  require_permutation(sigma);
  const int n = static_cast<int>(sigma.size());
  if (n == 0) return true;
  const auto lazy = lazy_jdt_path(rsk_word(sigma).recording);
  const auto evac = evacuation_path(rsk_word(schuetzenberger_star(sigma)).recording);
  for (int p = 1; p <= n; ++p)
    if (lazy.q[static_cast<std::size_t>(p - 1)] != evac.positions[static_cast<std::size_t>(n - p)])
      return false;
  return true;
}

namespace detail {

// Minimum-cost flow on a small graph by successive Bellman-Ford shortest paths.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  void add_edge(int from, int to, int cap, int cost) {
    adj_[static_cast<std::size_t>(from)].push_back(edges_.size());
    edges_.push_back({to, cap, cost});
    adj_[static_cast<std::size_t>(to)].push_back(edges_.size());
    edges_.push_back({from, 0, -cost});
  }

  // Pushes one unit along a cheapest path. Returns its cost, or nullopt when
  // the sink is unreachable.
  std::optional<int> augment(int source, int sink) {
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    const std::size_t nn = adj_.size();
    std::vector<int> dist(nn, kInf);
    std::vector<std::size_t> via(nn, std::numeric_limits<std::size_t>::max());
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t round = 0; round + 1 < nn; ++round) {
      bool changed = false;
      for (std::size_t v = 0; v < nn; ++v) {
        if (dist[v] == kInf) continue;
        for (std::size_t e : adj_[v]) {
          const auto& ed = edges_[e];
          if (ed.cap <= 0) continue;
          const auto to = static_cast<std::size_t>(ed.to);
          if (dist[v] + ed.cost < dist[to]) {
            dist[to] = dist[v] + ed.cost;
            via[to] = e;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[static_cast<std::size_t>(sink)] == kInf) return std::nullopt;
    for (auto v = static_cast<std::size_t>(sink); v != static_cast<std::size_t>(source);) {
      const std::size_t e = via[v];
      --edges_[e].cap;
      ++edges_[e ^ 1].cap;
      v = static_cast<std::size_t>(edges_[e ^ 1].to);
    }
    return dist[static_cast<std::size_t>(sink)];
  }

 private:
  struct Edge {
    int to;
    int cap;
    int cost;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
};

}  // namespace detail

inline constexpr int kGreeneMaxLength = 30;

// Shape predicted by Greene's theorem for word[0..p): row i is the gain in the
// largest union of i increasing subsequences over i-1 of them. Computed as
// min-cost flow of vertex-disjoint chains, independently of insertion.
inline YoungDiagram greene_shape(const std::vector<int>& word, int p) {
  if (p < 1 || p > static_cast<int>(word.size()))
    throw InputError("greene_shape: prefix length out of range");
  if (p > kGreeneMaxLength)
    throw InputError("greene_shape is limited to prefixes of length 30");
  if (std::set<int>(word.begin(), word.begin() + p).size() != static_cast<std::size_t>(p))
    throw InputError("greene_shape: letters must be distinct");
  // Node layout: source, sink, then in/out copies of each letter.
  const int source = 0;
  const int sink = 1;
  auto in = [](int i) { return 2 + 2 * i; };
  auto out = [](int i) { return 3 + 2 * i; };
  detail::MinCostFlow flow(2 + 2 * p);
  for (int i = 0; i < p; ++i) {
    flow.add_edge(source, in(i), 1, 0);
    flow.add_edge(in(i), out(i), 1, -1);
    flow.add_edge(out(i), sink, 1, 0);
    for (int j = i + 1; j < p; ++j)
      if (word[static_cast<std::size_t>(i)] < word[static_cast<std::size_t>(j)])
        flow.add_edge(out(i), in(j), 1, 0);
  }
  std::vector<int> rows;
  int covered = 0;
  while (covered < p) {
    auto cost = flow.augment(source, sink);
    if (!cost || *cost >= 0) break;
    rows.push_back(-*cost);
    covered += -*cost;
  }
  return YoungDiagram(std::move(rows));
}

}  // namespace jdt
