#include <chrono>
#include <ostream>

#include "common.hpp"
#include "powertour/error.hpp"
#include "powertour/graphs.hpp"
#include "powertour/greedy_path.hpp"
#include "powertour/newman.hpp"
#include "powertour/oracle.hpp"
#include "powertour/sekanina.hpp"
#include "powertour/serialization.hpp"
#include "powertour/two_phase.hpp"
#include "powertour/verifiers.hpp"
#include "powertour_cli/cli.hpp"

namespace powertour::cli {

namespace {

nlohmann::json phase_json(const PhaseReport& r) {
  return {{"cutoff", r.cutoff},
          {"tree_count", r.tree_count},
          {"largest_tree", r.largest_tree},
          {"forest", to_json(r.forest_cost)},
          {"cycles", to_json(r.cycles_cost)},
          {"initial_paths", to_json(r.initial_paths)},
          {"greedy_added", to_json(r.greedy_added)},
          {"tour", to_json(r.tour_cost)}};
}

}  // namespace

int run_tour(const TourOptions& o, std::ostream& out) {
  const auto points = load_point_set(o.input);
  const unsigned k = o.k.value_or(static_cast<unsigned>(points.dimension()));
  if (k == 0) throw InputError("--k must be positive");

  nlohmann::json doc{{"schema_version", kSchemaVersion}};
  if (!o.no_timestamp) doc["timestamp"] = timestamp_utc();
  doc["input"] = o.input;
  doc["algorithm"] = o.algo;
  doc["n"] = points.size();
  doc["dimension"] = points.dimension();

  const auto start = std::chrono::steady_clock::now();
  Tour tour;
  if (o.algo == "mst-sekanina") {
    tour = mst_sekanina_tour(points, k).tour;
  } else if (o.algo == "greedy") {
    tour = close_path(greedy_ham_path(points).path, points);
  } else if (o.algo == "two-phase") {
    auto r = two_phase_tour(points, k, o.cutoff);
    tour = std::move(r.tour);
    doc["phase_report"] = phase_json(r.report);
  } else if (o.algo == "newman2d") {
    if (k != 2 || points.dimension() != 2) throw InputError("newman2d needs planar points and k = 2");
    if (o.diagonal != "main" && o.diagonal != "anti") throw InputError("--diagonal must be main or anti");
    tour = planar::newman_square_tour(
        points, o.diagonal == "main" ? planar::SquareDiagonal::Main : planar::SquareDiagonal::Anti);
  } else if (o.algo == "oracle") {
    tour = exact_min_tour(points, k).tour;
  } else {
    throw InputError("unknown algorithm '" + o.algo + "'");
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const auto cost = power_cost(tour.edges, k);
  doc["tour"] = to_json(tour, k);
  bool pass = true;
  if (k >= 2) {
    const auto report = bound_report(points, k, {{o.algo, cost, wall_ms}}, o.input);
    doc["report"] = to_json(report, !o.no_timestamp);
    pass = report.certified_pass();
  } else {
    doc["report"] = nullptr;
  }
  doc["bound_pass"] = pass;
  print_json(out, doc);
  return pass ? kOk : kBoundViolation;
}

}  // namespace powertour::cli
