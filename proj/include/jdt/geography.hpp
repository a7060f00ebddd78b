#pragma once

// Empirical latitude/longitude coordinates on the unit square, estimated from
// uniform random square tableaux.
//
// Latitude is the mean scaled entry field: cell (x, y) of the N x N board has
// its mean entry / N^2 attached to the center ((x - 1/2) / N, (y - 1/2) / N),
// and the field is resampled bilinearly onto a G x G lattice with nodes at
// (i / (G-1), j / (G-1)). Longitude at latitude alpha is the distribution of
// the scaled u-coordinate of box floor(alpha N^2).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jdt/dynamics.hpp"
#include "jdt/errors.hpp"
#include "jdt/parallel.hpp"
#include "jdt/rng.hpp"
#include "jdt/sampling.hpp"
#include "jdt/tableau.hpp"

namespace jdt {

inline constexpr std::uint32_t kAtlasStreamId = 3;
inline constexpr int kAtlasSchemaVersion = 1;

inline std::vector<double> default_alpha_grid() {
  std::vector<double> out;
  for (int k = 1; k <= 49; ++k) out.push_back(k / 50.0);
  return out;
}

struct AtlasOptions {
  int grid = 64;
  std::vector<double> alpha_grid = default_alpha_grid();
  // Upper bound on N * samples.
  std::uint64_t budget = 10'000'000;
  // 0 means default_worker_count().
  int workers = 0;
};

struct GeographyAtlas {
  int N = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  int G = 0;
  std::vector<double> alpha_grid;
  // Row-major: height[j * G + i] is the value at (i / (G-1), j / (G-1)).
  std::vector<double> height;
  // u_cdf[a] holds the sorted values (x - y) / N of box floor(alpha_grid[a] N^2).
  std::vector<std::vector<double>> u_cdf;
  // Adjacent-cell order violations of the raw mean field before cleanup.
  std::uint64_t raw_violations = 0;
  std::uint64_t adjacent_pairs = 0;

  double node(int i, int j) const {
    return height[static_cast<std::size_t>(j) * static_cast<std::size_t>(G) +
                  static_cast<std::size_t>(i)];
  }

  friend bool operator==(const GeographyAtlas&, const GeographyAtlas&) = default;
};

namespace detail {

// L2 isotonic (nondecreasing) regression by pool-adjacent-violators.
inline void pav(std::vector<double>& v) {
  std::vector<double> sum;
  std::vector<std::size_t> len;
  for (double x : v) {
    sum.push_back(x);
    len.push_back(1);
    while (sum.size() > 1 &&
           sum[sum.size() - 2] / static_cast<double>(len[len.size() - 2]) >
               sum.back() / static_cast<double>(len.back())) {
      sum[sum.size() - 2] += sum.back();
      len[len.size() - 2] += len.back();
      sum.pop_back();
      len.pop_back();
    }
  }
  std::size_t k = 0;
  for (std::size_t b = 0; b < sum.size(); ++b) {
    const double mean = sum[b] / static_cast<double>(len[b]);
    for (std::size_t r = 0; r < len[b]; ++r) v[k++] = mean;
  }
}

// Rows then columns of an n x n row-major grid. Isotonic regression is order
// preserving, so the column pass keeps rows monotone.
inline void isotonic_cleanup(std::vector<double>& grid, std::size_t n) {
  std::vector<double> line(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) line[x] = grid[y * n + x];
    pav(line);
    for (std::size_t x = 0; x < n; ++x) grid[y * n + x] = line[x];
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) line[y] = grid[y * n + x];
    pav(line);
    for (std::size_t y = 0; y < n; ++y) grid[y * n + x] = line[y];
  }
}

// Empirical CDF with ties counted half, linear between distinct sample values,
// 0 below the smallest and 1 above the largest.
inline double mid_rank_cdf(const std::vector<double>& sorted, double u) {
  const auto n = static_cast<double>(sorted.size());
  auto rank = [&](double v) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    const auto hi = std::upper_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    return (static_cast<double>(lo) + static_cast<double>(hi)) / (2.0 * n);
  };
  const auto lo = std::lower_bound(sorted.begin(), sorted.end(), u);
  if (lo != sorted.end() && *lo == u) return rank(u);
  if (lo == sorted.begin()) return 0.0;
  if (lo == sorted.end()) return 1.0;
  const double a = *(lo - 1);
  const double b = *lo;
  const double w = (u - a) / (b - a);
  return (1.0 - w) * rank(a) + w * rank(b);
}

inline std::string format_alpha(double a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

}  // namespace detail

inline GeographyAtlas build_atlas(int side, int samples, RngSpec rng,
                                  const AtlasOptions& options = {}) {
  if (side < 8) throw InputError("build_atlas needs N >= 8");
  if (samples < 100) throw InputError("build_atlas needs at least 100 samples");
  if (options.grid < 2) throw InputError("build_atlas needs a grid of at least 2 nodes");
  if (options.alpha_grid.empty()) throw InputError("build_atlas needs a nonempty alpha grid");
  for (std::size_t a = 0; a < options.alpha_grid.size(); ++a) {
    const double v = options.alpha_grid[a];
    if (!(v > 0.0 && v < 1.0) || (a > 0 && v <= options.alpha_grid[a - 1]))
      throw InputError("alpha grid must be strictly increasing inside (0,1)");
  }
  const std::uint64_t work = static_cast<std::uint64_t>(side) * static_cast<std::uint64_t>(samples);
  if (work > options.budget)
    throw ResourceError("atlas of N=" + std::to_string(side) + " with " +
                        std::to_string(samples) + " samples exceeds the budget of " +
                        std::to_string(options.budget) + " for N * samples");

  const int n2 = side * side;
  const std::size_t cells = static_cast<std::size_t>(n2);
  std::vector<int> targets;
  for (double a : options.alpha_grid)
    targets.push_back(std::max(1, static_cast<int>(std::floor(a * n2))));

  // Integer sums are exact, so the merged field does not depend on how samples
  // were spread across workers.
  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (static_cast<std::size_t>(samples) + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  std::vector<std::vector<int>> u_raw(targets.size(),
                                      std::vector<int>(static_cast<std::size_t>(samples)));
  const YoungDiagram square = YoungDiagram::square(side);
  const int workers = options.workers > 0 ? options.workers : default_worker_count();
  parallel_for(chunks, workers, [&](std::size_t c) {
    auto& sums = partial[c];
    sums.assign(cells, 0);
    const std::size_t end = std::min(static_cast<std::size_t>(samples), (c + 1) * kChunk);
    for (std::size_t s = c * kChunk; s < end; ++s) {
      Rng r(RngSpec{rng.master_seed, namespaced_stream(kAtlasStreamId, s)});
      const auto t = sample_uniform_syt(square, r);
      const auto& rows = t.rows();
      for (std::size_t y = 0; y < rows.size(); ++y)
        for (std::size_t x = 0; x < rows[y].size(); ++x)
          sums[y * static_cast<std::size_t>(side) + x] += static_cast<std::uint64_t>(rows[y][x]);
      for (std::size_t a = 0; a < targets.size(); ++a) u_raw[a][s] = t.position_of(targets[a]).u();
    }
  });

  std::vector<double> mean(cells, 0.0);
  {
    std::vector<std::uint64_t> total(cells, 0);
    for (const auto& p : partial)
      for (std::size_t i = 0; i < cells; ++i) total[i] += p[i];
    const double denom = static_cast<double>(samples) * n2;
    for (std::size_t i = 0; i < cells; ++i) mean[i] = static_cast<double>(total[i]) / denom;
  }

  GeographyAtlas atlas;
  atlas.N = side;
  atlas.samples = samples;
  atlas.seed = rng.master_seed;
  atlas.G = options.grid;
  atlas.alpha_grid = options.alpha_grid;

  const auto n = static_cast<std::size_t>(side);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      if (x + 1 < n) {
        ++atlas.adjacent_pairs;
        if (mean[y * n + x] > mean[y * n + x + 1]) ++atlas.raw_violations;
      }
      if (y + 1 < n) {
        ++atlas.adjacent_pairs;
        if (mean[y * n + x] > mean[(y + 1) * n + x]) ++atlas.raw_violations;
      }
    }
  detail::isotonic_cleanup(mean, n);

  // Resample cell-center values onto the lattice, clamping at the edges.
  auto cell_coord = [&](int node) {
    const double s = static_cast<double>(node) / (atlas.G - 1);
    const double c = std::clamp(s * side + 0.5, 1.0, static_cast<double>(side));
    const int lo = std::min(side - 1, static_cast<int>(std::floor(c)));
    return std::pair<int, double>{lo, c - lo};
  };
  atlas.height.resize(static_cast<std::size_t>(atlas.G) * static_cast<std::size_t>(atlas.G));
  for (int j = 0; j < atlas.G; ++j) {
    const auto [cy, fy] = cell_coord(j);
    for (int i = 0; i < atlas.G; ++i) {
      const auto [cx, fx] = cell_coord(i);
      auto m = [&](int x, int y) {
        x = std::min(x, side);
        y = std::min(y, side);
        return mean[static_cast<std::size_t>(y - 1) * n + static_cast<std::size_t>(x - 1)];
      };
      const double v = (1 - fx) * (1 - fy) * m(cx, cy) + fx * (1 - fy) * m(cx + 1, cy) +
                       (1 - fx) * fy * m(cx, cy + 1) + fx * fy * m(cx + 1, cy + 1);
      atlas.height[static_cast<std::size_t>(j) * static_cast<std::size_t>(atlas.G) +
                   static_cast<std::size_t>(i)] = std::clamp(v, 0.0, 1.0);
    }
  }

  atlas.u_cdf.resize(targets.size());
  for (std::size_t a = 0; a < targets.size(); ++a) {
    auto& out = atlas.u_cdf[a];
    out.reserve(static_cast<std::size_t>(samples));
    for (int u : u_raw[a]) out.push_back(static_cast<double>(u) / side);
    std::sort(out.begin(), out.end());
  }
  return atlas;
}

inline double latitude(const GeographyAtlas& atlas, Point p) {
  if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0))
    throw InputError("latitude: point outside the unit square");
  const double gx = p.x * (atlas.G - 1);
  const double gy = p.y * (atlas.G - 1);
  const int i = std::min(atlas.G - 2, static_cast<int>(std::floor(gx)));
  const int j = std::min(atlas.G - 2, static_cast<int>(std::floor(gy)));
  const double fx = gx - i;
  const double fy = gy - j;
  return (1 - fx) * (1 - fy) * atlas.node(i, j) + fx * (1 - fy) * atlas.node(i + 1, j) +
         (1 - fx) * fy * atlas.node(i, j + 1) + fx * fy * atlas.node(i + 1, j + 1);
}

namespace detail {

struct AlphaBracket {
  std::size_t lo = 0;
  double weight = 0.0;  // share of row lo + 1
};

inline AlphaBracket bracket_alpha(const GeographyAtlas& atlas, double alpha) {
  const auto& g = atlas.alpha_grid;
  if (alpha < g.front() || alpha > g.back()) {
    const double clamped = std::clamp(alpha, g.front(), g.back());
    throw BoundaryError("latitude " + format_alpha(alpha) +
                        " outside the atlas alpha grid; nearest covered alpha is " +
                        format_alpha(clamped));
  }
  if (g.size() == 1) return {0, 0.0};
  auto it = std::upper_bound(g.begin(), g.end(), alpha);
  std::size_t hi = std::min(static_cast<std::size_t>(it - g.begin()), g.size() - 1);
  const std::size_t lo = hi - 1;
  return {lo, std::clamp((alpha - g[lo]) / (g[hi] - g[lo]), 0.0, 1.0)};
}

inline double blended_cdf(const GeographyAtlas& atlas, AlphaBracket b, double u) {
  const double f0 = mid_rank_cdf(atlas.u_cdf[b.lo], u);
  if (b.weight == 0.0) return f0;
  return (1.0 - b.weight) * f0 + b.weight * mid_rank_cdf(atlas.u_cdf[b.lo + 1], u);
}

}  // namespace detail

// Longitude of p: the CDF of mu_alpha at u(p), alpha = latitude(p).
inline double longitude_at(const GeographyAtlas& atlas, double alpha, double u) {
  return detail::blended_cdf(atlas, detail::bracket_alpha(atlas, alpha), u);
}

inline double longitude(const GeographyAtlas& atlas, Point p) {
  return longitude_at(atlas, latitude(atlas, p), p.x - p.y);
}

// Point with latitude alpha and longitude psi.
inline Point meridian_point(const GeographyAtlas& atlas, double alpha, double psi) {
  if (!(psi >= 0.0 && psi <= 1.0)) throw InputError("meridian_point: psi outside [0,1]");
  const auto bracket = detail::bracket_alpha(atlas, alpha);
  // Smallest u with CDF >= psi.
  double lo = -1.0;
  double hi = 1.0;
  for (int it = 0; it < 64; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (detail::blended_cdf(atlas, bracket, mid) >= psi) hi = mid;
    else lo = mid;
  }
  const double u = hi;
  // Height is nondecreasing along x - y = u as x grows.
  double x_lo = std::max(0.0, u);
  double x_hi = std::min(1.0, 1.0 + u);
  auto h = [&](double x) { return latitude(atlas, Point{x, std::clamp(x - u, 0.0, 1.0)}); };
  if (h(x_lo) > alpha || h(x_hi) < alpha)
    throw BoundaryError("level set " + detail::format_alpha(alpha) +
                        " does not meet the line x - y = " + detail::format_alpha(u) +
                        " inside the unit square");
  for (int it = 0; it < 64; ++it) {
    const double mid = 0.5 * (x_lo + x_hi);
    if (h(mid) >= alpha) x_hi = mid;
    else x_lo = mid;
  }
  const double x = 0.5 * (x_lo + x_hi);
  return Point{x, std::clamp(x - u, 0.0, 1.0)};
}

// max |height(x, y) - height(y, x)| over lattice nodes.
inline double transpose_deviation(const GeographyAtlas& atlas) {
  double d = 0.0;
  for (int j = 0; j < atlas.G; ++j)
    for (int i = 0; i < atlas.G; ++i) d = std::max(d, std::abs(atlas.node(i, j) - atlas.node(j, i)));
  return d;
}

// max |height(x, y) + height(1 - x, 1 - y) - 1| over lattice nodes.
inline double complement_deviation(const GeographyAtlas& atlas) {
  double d = 0.0;
  const int last = atlas.G - 1;
  for (int j = 0; j < atlas.G; ++j)
    for (int i = 0; i < atlas.G; ++i)
      d = std::max(d, std::abs(atlas.node(i, j) + atlas.node(last - i, last - j) - 1.0));
  return d;
}

inline void save_atlas(const GeographyAtlas& atlas, const std::string& path) {
  nlohmann::json j;
  j["schema"] = "jdt-atlas";
  j["version"] = kAtlasSchemaVersion;
  j["N"] = atlas.N;
  j["samples"] = atlas.samples;
  j["seed"] = atlas.seed;
  j["G"] = atlas.G;
  j["alpha_grid"] = atlas.alpha_grid;
  j["height"] = atlas.height;
  j["u_cdf"] = atlas.u_cdf;
  j["raw_violations"] = atlas.raw_violations;
  j["adjacent_pairs"] = atlas.adjacent_pairs;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write atlas to " + path);
  out << j.dump() << '\n';
  if (!out) throw IoError("failed writing atlas to " + path);
}

inline GeographyAtlas load_atlas(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open atlas " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("atlas " + path + " is not valid JSON: " + e.what());
  }
  try {
    if (!j.is_object() || j.value("schema", std::string()) != "jdt-atlas")
      throw FormatError("atlas " + path + " has no jdt-atlas schema tag");
    const int version = j.at("version").get<int>();
    if (version != kAtlasSchemaVersion)
      throw UnsupportedVersionError("atlas " + path + " has schema version " +
                                    std::to_string(version) + "; this build reads version " +
                                    std::to_string(kAtlasSchemaVersion));
    GeographyAtlas a;
    a.N = j.at("N").get<int>();
    a.samples = j.at("samples").get<int>();
    a.seed = j.at("seed").get<std::uint64_t>();
    a.G = j.at("G").get<int>();
    a.alpha_grid = j.at("alpha_grid").get<std::vector<double>>();
    a.height = j.at("height").get<std::vector<double>>();
    a.u_cdf = j.at("u_cdf").get<std::vector<std::vector<double>>>();
    a.raw_violations = j.at("raw_violations").get<std::uint64_t>();
    a.adjacent_pairs = j.at("adjacent_pairs").get<std::uint64_t>();
    if (a.G < 2 || a.height.size() != static_cast<std::size_t>(a.G) * static_cast<std::size_t>(a.G))
      throw FormatError("atlas " + path + ": height grid does not match G");
    if (a.alpha_grid.empty() || a.u_cdf.size() != a.alpha_grid.size())
      throw FormatError("atlas " + path + ": u_cdf rows do not match the alpha grid");
    for (const auto& row : a.u_cdf)
      if (row.empty() || !std::is_sorted(row.begin(), row.end()))
        throw FormatError("atlas " + path + ": u_cdf rows must be sorted and nonempty");
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("atlas " + path + " is missing or mistypes a field: " + e.what());
  }
}

}  // namespace jdt
