#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "jdt/geography.hpp"
#include "jdt/stats.hpp"

namespace jdt {
namespace {

const GeographyAtlas& shared_atlas() {
  static const GeographyAtlas atlas = [] {
    AtlasOptions o;
    o.workers = 2;
    return build_atlas(24, 2000, RngSpec{41, 0}, o);
  }();
  return atlas;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("jdt_geo_" + name)).string();
}

TEST(Pav, PoolsViolators) {
  std::vector<double> v{1, 3, 2, 2, 5, 4};
  detail::pav(v);
  EXPECT_EQ(v, (std::vector<double>{1, 7.0 / 3, 7.0 / 3, 7.0 / 3, 4.5, 4.5}));
  std::vector<double> sorted{0, 1, 2};
  detail::pav(sorted);
  EXPECT_EQ(sorted, (std::vector<double>{0, 1, 2}));
}

TEST(MidRankCdf, TiesAndInterpolation) {
  const std::vector<double> s{-0.5, 0.0, 0.0, 0.5};
  EXPECT_DOUBLE_EQ(detail::mid_rank_cdf(s, -1.0), 0.0);
  EXPECT_DOUBLE_EQ(detail::mid_rank_cdf(s, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(detail::mid_rank_cdf(s, -0.5), 0.125);
  EXPECT_DOUBLE_EQ(detail::mid_rank_cdf(s, 0.0), 0.5);
  EXPECT_DOUBLE_EQ(detail::mid_rank_cdf(s, 0.25), 0.5 * (0.5 + 0.875));
}

TEST(BuildAtlas, CornersAndMedian) {
  const auto& a = shared_atlas();
  EXPECT_LT(a.node(0, 0), 0.01);
  EXPECT_GT(a.node(a.G - 1, a.G - 1), 0.99);
  // alpha = 0.5 is the 25th grid value.
  ASSERT_DOUBLE_EQ(a.alpha_grid[24], 0.5);
  EXPECT_NEAR(median(a.u_cdf[24]), 0.0, 0.05);
}

TEST(BuildAtlas, FieldInvariants) {
  const auto& a = shared_atlas();
  for (int j = 0; j < a.G; ++j)
    for (int i = 0; i < a.G; ++i) {
      EXPECT_GE(a.node(i, j), 0.0);
      EXPECT_LE(a.node(i, j), 1.0);
      if (i + 1 < a.G) {
        EXPECT_LE(a.node(i, j), a.node(i + 1, j));
      }
      if (j + 1 < a.G) {
        EXPECT_LE(a.node(i, j), a.node(i, j + 1));
      }
    }
  for (const auto& row : a.u_cdf) {
    EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
    EXPECT_GE(row.front(), -1.0);
    EXPECT_LE(row.back(), 1.0);
  }
  EXPECT_LT(static_cast<double>(a.raw_violations), 0.01 * static_cast<double>(a.adjacent_pairs));
  EXPECT_LT(transpose_deviation(a), 0.03);
  EXPECT_LT(complement_deviation(a), 0.03);
}

TEST(BuildAtlas, IndependentOfWorkerCount) {
  AtlasOptions one;
  one.workers = 1;
  AtlasOptions three;
  three.workers = 3;
  EXPECT_EQ(build_atlas(10, 300, RngSpec{5, 0}, one), build_atlas(10, 300, RngSpec{5, 0}, three));
  EXPECT_NE(build_atlas(10, 300, RngSpec{5, 0}, one).height,
            build_atlas(10, 300, RngSpec{6, 0}, one).height);
}

TEST(BuildAtlas, Preconditions) {
  EXPECT_THROW(build_atlas(7, 200, RngSpec{1, 0}), InputError);
  EXPECT_THROW(build_atlas(8, 99, RngSpec{1, 0}), InputError);
  AtlasOptions tight;
  tight.budget = 1000;
  EXPECT_THROW(build_atlas(10, 200, RngSpec{1, 0}, tight), ResourceError);
  AtlasOptions bad_alpha;
  bad_alpha.alpha_grid = {0.5, 0.4};
  EXPECT_THROW(build_atlas(8, 100, RngSpec{1, 0}, bad_alpha), InputError);
}

TEST(Latitude, CornersAndTranspose) {
  const auto& a = shared_atlas();
  EXPECT_NEAR(latitude(a, {0, 0}), 0.0, 0.01);
  EXPECT_NEAR(latitude(a, {1, 1}), 1.0, 0.01);
  for (double x = 0.05; x < 1; x += 0.1)
    for (double y = 0.05; y < 1; y += 0.15)
      EXPECT_NEAR(latitude(a, {x, y}), latitude(a, {y, x}), 0.03);
  EXPECT_THROW(latitude(a, {1.01, 0.5}), InputError);
  EXPECT_THROW(latitude(a, {0.5, -0.01}), InputError);
}

TEST(Longitude, AntiDiagonalAndExtremes) {
  const auto& a = shared_atlas();
  const Point mid = meridian_point(a, 0.5, 0.5);
  EXPECT_NEAR(longitude_at(a, 0.5, 0.0), 0.5, 0.05);
  EXPECT_NEAR(longitude(a, Point{mid.x, mid.x}), 0.5, 0.05);
  EXPECT_DOUBLE_EQ(longitude_at(a, 0.5, -1.0), 0.0);
  EXPECT_DOUBLE_EQ(longitude_at(a, 0.5, 1.0), 1.0);
  EXPECT_THROW(longitude(a, {0, 0}), BoundaryError);
  try {
    longitude_at(a, 0.995, 0.0);
    FAIL() << "expected a boundary error";
  } catch (const BoundaryError& e) {
    EXPECT_NE(std::string(e.what()).find("0.98"), std::string::npos);
  }
}

TEST(MeridianPoint, SymmetryAndCorner) {
  const auto& a = shared_atlas();
  const Point p = meridian_point(a, 0.5, 0.5);
  EXPECT_NEAR(p.x, p.y, 0.03);
  const Point corner = meridian_point(a, 0.02, 0.5);
  EXPECT_LT(std::hypot(corner.x, corner.y), 0.25);
  EXPECT_THROW(meridian_point(a, 0.5, 1.5), InputError);
  EXPECT_THROW(meridian_point(a, 0.01, 0.5), BoundaryError);
}

TEST(MeridianPoint, RoundTripOnInteriorGrid) {
  const auto& a = shared_atlas();
  for (int i = 1; i <= 9; ++i)
    for (int k = 1; k <= 9; ++k) {
      const double alpha = i / 10.0;
      const double psi = k / 10.0;
      const Point p = meridian_point(a, alpha, psi);
      EXPECT_NEAR(latitude(a, p), alpha, 0.03);
      EXPECT_NEAR(longitude(a, p), psi, 0.03);
    }
}

TEST(AtlasFile, RoundTrip) {
  const auto& a = shared_atlas();
  const auto path = temp_path("roundtrip.json");
  save_atlas(a, path);
  EXPECT_EQ(load_atlas(path), a);
  std::filesystem::remove(path);
}

TEST(AtlasFile, Errors) {
  AtlasOptions o;
  o.workers = 1;
  const auto small = build_atlas(8, 100, RngSpec{2, 0}, o);
  const auto path = temp_path("broken.json");
  save_atlas(small, path);
  std::string text;
  {
    std::ifstream in(path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  {
    std::ofstream out(path, std::ios::trunc);
    out << text.substr(0, text.size() / 2);
  }
  EXPECT_THROW(load_atlas(path), FormatError);

  auto j = nlohmann::json::parse(text);
  j["version"] = 0;
  {
    std::ofstream out(path, std::ios::trunc);
    out << j.dump();
  }
  EXPECT_THROW(load_atlas(path), UnsupportedVersionError);

  j["version"] = kAtlasSchemaVersion;
  j["schema"] = "something-else";
  {
    std::ofstream out(path, std::ios::trunc);
    out << j.dump();
  }
  EXPECT_THROW(load_atlas(path), FormatError);
  std::filesystem::remove(path);
  EXPECT_THROW(load_atlas(temp_path("does_not_exist.json")), IoError);
}

}  // namespace
}  // namespace jdt
