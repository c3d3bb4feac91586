#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "powertour/constructions.hpp"
#include "powertour/error.hpp"
#include "powertour/graphs.hpp"
#include "powertour/mst.hpp"
#include "powertour/serialization.hpp"

namespace pt = powertour;
namespace fs = std::filesystem;

TEST(PointSetJson, RoundTrip) {
  const auto x = pt::uniform_cube(3, 20, 5);
  const auto j = pt::to_json(x);
  EXPECT_EQ(j.at("k"), 3);
  EXPECT_EQ(j.at("container"), "unit_cube");
  EXPECT_EQ(pt::point_set_from_json(j).points(), x.points());
}

TEST(PointSetJson, Malformed) {
  EXPECT_THROW((void)pt::point_set_from_json(nlohmann::json{{"k", 2}}), pt::InputError);
  EXPECT_THROW((void)pt::point_set_from_json(nlohmann::json::parse(R"({"k":2,"points":[[0.5,2]]})")),
               pt::InputError);
  EXPECT_THROW(
      (void)pt::point_set_from_json(nlohmann::json::parse(R"({"k":2,"container":"torus","points":[[0.5,0.5]]})")),
      pt::InputError);
}

TEST(PointSetCsv, RoundTripIsExact) {
  const auto x = pt::uniform_half_cube(4, 30, 2);
  std::stringstream s;
  pt::write_csv(s, x);
  EXPECT_EQ(pt::read_csv(s, pt::Container::HalfCube).points(), x.points());
  std::stringstream bad("0.1,0.2\n0.3,x\n");
  EXPECT_THROW((void)pt::read_csv(bad), pt::InputError);
  std::stringstream ragged("0.1,0.2\n0.3\n");
  EXPECT_THROW((void)pt::read_csv(ragged), pt::InputError);
}

TEST(PointSetFiles, ExtensionSelectsFormat) {
  const auto dir = fs::temp_directory_path() / "powertour_serialization_test";
  fs::create_directories(dir);
  const auto x = pt::k3_code4();
  for (const char* name : {"a.json", "a.csv"}) {
    const auto path = (dir / name).string();
    pt::save_point_set(path, x);
    EXPECT_EQ(pt::load_point_set(path).points(), x.points());
  }
  EXPECT_THROW((void)pt::load_point_set((dir / "missing.json").string()), pt::InputError);
  fs::remove_all(dir);
}

TEST(CostJson, OverflowGivesNull) {
  const auto c = pt::power_cost_from_lengths(std::vector<double>{std::sqrt(1000.0)}, 1000);
  const auto j = pt::to_json(c);
  EXPECT_TRUE(j.at("S_k").is_null());
  EXPECT_GT(j.at("s_k").get<double>(), 31.0);
  EXPECT_EQ(j.at("k"), 1000);
}

TEST(StructureJson, TourAndEdges) {
  pt::PointSet x(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto tour = pt::make_tour(x, {0, 1, 2, 3});
  const auto j = pt::to_json(tour, 2);
  EXPECT_EQ(j.at("order"), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_DOUBLE_EQ(j.at("cost").at("S_k").get<double>(), 4.0);
  EXPECT_EQ(pt::tour_from_json(j, x).order, tour.order);

  const auto t = pt::build_mst(x);
  const auto tj = pt::to_json(t, 2);
  EXPECT_EQ(tj.at("edges").size(), 3u);
  EXPECT_EQ(pt::edges_from_json(tj, x), t.edges);
}
