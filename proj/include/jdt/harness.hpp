#pragma once

// Monte Carlo experiments on random square tableaux: scaled evacuation paths
// and scaled lazy jeu de taquin paths compared against atlas meridians.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "jdt/dynamics.hpp"
#include "jdt/errors.hpp"
#include "jdt/geography.hpp"
#include "jdt/parallel.hpp"
#include "jdt/rng.hpp"
#include "jdt/sampling.hpp"
#include "jdt/stats.hpp"

#ifndef JDT_VERSION_STRING
#define JDT_VERSION_STRING "unknown"
#endif

namespace jdt {

inline constexpr std::uint32_t kEvacuationStreamId = 1;
inline constexpr std::uint32_t kLazyStreamId = 2;

enum class ExperimentKind { kEvacuation, kLazy };

inline const char* to_string(ExperimentKind k) {
  return k == ExperimentKind::kEvacuation ? "evacuation" : "lazy";
}

inline std::vector<double> default_t_grid() {
  std::vector<double> out;
  for (int k = 1; k <= 19; ++k) out.push_back(k / 20.0);
  return out;
}

// Where an experiment gets its atlas: a file, or built on the fly.
struct AtlasSource {
  std::string path;
  bool build = false;
  int build_n = 0;  // 0 means the experiment's N
  int build_samples = 2000;
  std::uint64_t build_seed = 0;
};

struct ExperimentConfig {
  int N = 40;
  int trials = 400;
  std::vector<double> t_grid = default_t_grid();
  double t0 = 0.5;
  double c = 0.1;
  std::uint64_t master_seed = 1;
  AtlasSource atlas;
  std::string out_dir;
  // 0 means default_worker_count().
  int workers = 0;

  void validate() const {
    if (N < 1) throw ConfigError("N must be positive");
    if (trials < 0) throw ConfigError("trials must be nonnegative");
    if (!(0.0 < c && c < t0 && t0 < 1.0 - c))
      throw ConfigError("need 0 < c < t0 < 1 - c");
    for (double t : t_grid)
      if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("t grid must lie in [0,1]");
  }
};

inline constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

struct PathSample {
  double t = 0.0;
  Point point;
  double latitude = kUndefined;
  double longitude = kUndefined;
  double latitude_deviation = kUndefined;
  double longitude_deviation = kUndefined;
  double distance = kUndefined;  // |X_t - P_{target(t), Psi}|
};

struct TrialReport {
  int trial = 0;
  double psi = kUndefined;
  std::vector<PathSample> samples;
  // Suprema over t in [c, 1 - c]; an undefined value in range makes the
  // supremum infinite.
  double sup_latitude = 0.0;
  double sup_longitude = 0.0;
  double sup_distance = 0.0;
};

struct ExperimentSummary {
  ExperimentKind kind = ExperimentKind::kEvacuation;
  int trials = 0;
  std::optional<double> ks_d;  // absent without defined Psi values
  int undefined_psi = 0;
  std::optional<double> median_sup_latitude;
  std::optional<double> median_sup_longitude;
  std::optional<double> median_sup_distance;
  std::optional<double> q90_sup_latitude;
  std::optional<double> q90_sup_longitude;
  std::optional<double> q90_sup_distance;
};

struct ExperimentResult {
  ExperimentConfig config;
  ExperimentSummary summary;
  std::vector<TrialReport> reports;
  int atlas_n = 0;
  int atlas_samples = 0;
};

inline GeographyAtlas resolve_atlas(const ExperimentConfig& cfg) {
  if (!cfg.atlas.path.empty()) return load_atlas(cfg.atlas.path);
  if (cfg.atlas.build) {
    AtlasOptions opts;
    opts.workers = cfg.workers;
    return build_atlas(cfg.atlas.build_n > 0 ? cfg.atlas.build_n : cfg.N, cfg.atlas.build_samples,
                       RngSpec{cfg.atlas.build_seed, 0}, opts);
  }
  throw ConfigError("experiment has no atlas: give a file or ask for one to be built");
}

namespace detail {

inline bool in_sup_range(double t, double c) {
  constexpr double kEps = 1e-12;
  return t >= c - kEps && t <= 1.0 - c + kEps;
}

template <class F>
double guarded(F&& f) {
  try {
    return f();
  } catch (const BoundaryError&) {
    return kUndefined;
  }
}

// Scaled lazy path point (1/N) q_{ceil(t N^2)}, with ceil(0) read as 1.
inline std::vector<Point> scaled_lazy_curve(const StandardTableau& t,
                                            const std::vector<double>& grid) {
  const int side = t.shape().num_cols();
  const int n = t.size();
  const auto q = lazy_jdt_path(t).q;
  std::vector<Point> out;
  out.reserve(grid.size());
  for (double tv : grid) {
    const int i = std::clamp(static_cast<int>(std::ceil(tv * n)), 1, n);
    const Position p = q[static_cast<std::size_t>(i - 1)];
    out.push_back(Point{static_cast<double>(p.x) / side, static_cast<double>(p.y) / side});
  }
  return out;
}

inline TrialReport run_trial(ExperimentKind kind, const ExperimentConfig& cfg,
                             const GeographyAtlas& atlas, int trial) {
  const std::uint32_t id = kind == ExperimentKind::kEvacuation ? kEvacuationStreamId : kLazyStreamId;
  Rng rng(RngSpec{cfg.master_seed, namespaced_stream(id, static_cast<std::uint64_t>(trial))});
  const auto t = sample_uniform_syt(YoungDiagram::square(cfg.N), rng);

  // The reference time is evaluated with the grid so one pass serves both.
  std::vector<double> grid = cfg.t_grid;
  grid.push_back(cfg.t0);
  const auto pts = kind == ExperimentKind::kEvacuation ? scaled_evacuation_curve(t, grid)
                                                        : scaled_lazy_curve(t, grid);
  TrialReport r;
  r.trial = trial;
  r.psi = guarded([&] { return longitude(atlas, pts.back()); });
  const bool psi_ok = !std::isnan(r.psi);
  r.samples.reserve(cfg.t_grid.size());
  for (std::size_t i = 0; i < cfg.t_grid.size(); ++i) {
    PathSample s;
    s.t = cfg.t_grid[i];
    s.point = pts[i];
    const double target = kind == ExperimentKind::kEvacuation ? 1.0 - s.t : s.t;
    s.latitude = latitude(atlas, s.point);
    s.latitude_deviation = std::abs(s.latitude - target);
    s.longitude = guarded([&] { return longitude(atlas, s.point); });
    if (psi_ok && !std::isnan(s.longitude)) s.longitude_deviation = std::abs(s.longitude - r.psi);
    if (psi_ok)
      s.distance = guarded([&] { return distance(s.point, meridian_point(atlas, target, r.psi)); });
    if (in_sup_range(s.t, cfg.c)) {
      auto fold = [](double& sup, double v) {
        sup = std::isnan(v) ? std::numeric_limits<double>::infinity() : std::max(sup, v);
      };
      fold(r.sup_latitude, s.latitude_deviation);
      fold(r.sup_longitude, s.longitude_deviation);
      fold(r.sup_distance, s.distance);
    }
    r.samples.push_back(s);
  }
  return r;
}

}  // namespace detail

inline ExperimentSummary summarize(ExperimentKind kind, const std::vector<TrialReport>& reports) {
  ExperimentSummary s;
  s.kind = kind;
  s.trials = static_cast<int>(reports.size());
  if (reports.empty()) return s;
  std::vector<double> psi;
  std::vector<double> lat;
  std::vector<double> lon;
  std::vector<double> dist;
  for (const auto& r : reports) {
    if (std::isnan(r.psi)) ++s.undefined_psi;
    else psi.push_back(r.psi);
    lat.push_back(r.sup_latitude);
    lon.push_back(r.sup_longitude);
    dist.push_back(r.sup_distance);
  }
  if (!psi.empty()) s.ks_d = ks_uniformity(psi);
  s.median_sup_latitude = median(lat);
  s.median_sup_longitude = median(lon);
  s.median_sup_distance = median(dist);
  s.q90_sup_latitude = quantile(lat, 0.9);
  s.q90_sup_longitude = quantile(lon, 0.9);
  s.q90_sup_distance = quantile(dist, 0.9);
  return s;
}

inline ExperimentResult run_experiment(ExperimentKind kind, const ExperimentConfig& cfg,
                                       const GeographyAtlas& atlas) {
  cfg.validate();
  ExperimentResult result;
  result.config = cfg;
  result.atlas_n = atlas.N;
  result.atlas_samples = atlas.samples;
  result.reports.resize(static_cast<std::size_t>(cfg.trials));
  const int workers = cfg.workers > 0 ? cfg.workers : default_worker_count();
  parallel_for(result.reports.size(), workers, [&](std::size_t i) {
    result.reports[i] = detail::run_trial(kind, cfg, atlas, static_cast<int>(i));
  });
  result.summary = summarize(kind, result.reports);
  return result;
}

inline ExperimentResult run_evacuation_experiment(const ExperimentConfig& cfg,
                                                  const GeographyAtlas& atlas) {
  return run_experiment(ExperimentKind::kEvacuation, cfg, atlas);
}

inline ExperimentResult run_lazy_path_experiment(const ExperimentConfig& cfg,
                                                 const GeographyAtlas& atlas) {
  return run_experiment(ExperimentKind::kLazy, cfg, atlas);
}

inline ExperimentResult run_evacuation_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  return run_evacuation_experiment(cfg, resolve_atlas(cfg));
}

inline ExperimentResult run_lazy_path_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  return run_lazy_path_experiment(cfg, resolve_atlas(cfg));
}

// Shortest text that parses back to the same double; empty when undefined.
inline std::string format_double(double v) {
  if (std::isnan(v)) return {};
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s) {
  if (s.empty()) return kUndefined;
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw FormatError("not a number: '" + s + "'");
  return v;
}

inline constexpr const char* kPathCsvHeader = "trial,t,x,y,latitude,longitude";

namespace detail {

inline nlohmann::json optional_json(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace detail

inline std::string paths_csv(const std::vector<TrialReport>& reports) {
  std::string out = std::string(kPathCsvHeader) + "\n";
  for (const auto& r : reports)
    for (const auto& s : r.samples) {
      out += std::to_string(r.trial);
      for (double v : {s.t, s.point.x, s.point.y, s.latitude, s.longitude}) {
        out += ',';
        out += format_double(v);
      }
      out += '\n';
    }
  return out;
}

inline std::string trials_csv(const std::vector<TrialReport>& reports) {
  std::string out = "trial,psi,sup_latitude,sup_longitude,sup_distance\n";
  for (const auto& r : reports) {
    out += std::to_string(r.trial);
    for (double v : {r.psi, r.sup_latitude, r.sup_longitude, r.sup_distance}) {
      out += ',';
      out += std::isinf(v) ? std::string("inf") : format_double(v);
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json summary_json(const ExperimentResult& r) {
  const auto& cfg = r.config;
  const auto& s = r.summary;
  nlohmann::json j;
  j["version"] = JDT_VERSION_STRING;
  j["experiment"] = to_string(s.kind);
  j["seed"] = cfg.master_seed;
  j["config"] = {{"N", cfg.N},         {"trials", cfg.trials}, {"t_grid", cfg.t_grid},
                 {"t0", cfg.t0},       {"c", cfg.c},           {"master_seed", cfg.master_seed},
                 {"atlas_path", cfg.atlas.path}, {"atlas_built", cfg.atlas.build},
                 {"atlas_N", r.atlas_n}, {"atlas_samples", r.atlas_samples}};
  j["summary"] = {{"trials", s.trials},
                  {"ks_d", detail::optional_json(s.ks_d)},
                  {"undefined_psi", s.undefined_psi},
                  {"median_sup_latitude", detail::optional_json(s.median_sup_latitude)},
                  {"median_sup_longitude", detail::optional_json(s.median_sup_longitude)},
                  {"median_sup_distance", detail::optional_json(s.median_sup_distance)},
                  {"q90_sup_latitude", detail::optional_json(s.q90_sup_latitude)},
                  {"q90_sup_longitude", detail::optional_json(s.q90_sup_longitude)},
                  {"q90_sup_distance", detail::optional_json(s.q90_sup_distance)}};
  return j;
}

// Writes paths.csv, trials.csv and summary.json into dir, creating it if needed.
inline void emit_reports(const ExperimentResult& r, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir);
  const fs::path base(dir);
  detail::write_file(base / "paths.csv", paths_csv(r.reports));
  detail::write_file(base / "trials.csv", trials_csv(r.reports));
  detail::write_file(base / "summary.json", summary_json(r).dump(2) + "\n");
}

struct CsvPathRow {
  int trial = 0;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double latitude = kUndefined;
  double longitude = kUndefined;
};

inline std::vector<CsvPathRow> parse_paths_csv(const std::string& text) {
  std::vector<CsvPathRow> rows;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (header) {
      if (line != kPathCsvHeader) throw FormatError("unexpected paths CSV header: " + line);
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t a = 0;
    for (;;) {
      const std::size_t b = line.find(',', a);
      f.push_back(line.substr(a, b == std::string::npos ? std::string::npos : b - a));
      if (b == std::string::npos) break;
      a = b + 1;
    }
    if (f.size() != 6) throw FormatError("paths CSV row needs 6 fields: " + line);
    CsvPathRow r;
    r.trial = static_cast<int>(parse_double(f[0]));
    r.t = parse_double(f[1]);
    r.x = parse_double(f[2]);
    r.y = parse_double(f[3]);
    r.latitude = parse_double(f[4]);
    r.longitude = parse_double(f[5]);
    rows.push_back(r);
  }
  if (header) throw FormatError("paths CSV is empty");
  return rows;
}

}  // namespace jdt
