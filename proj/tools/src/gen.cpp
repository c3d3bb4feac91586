#include <fstream>
#include <ostream>

#include "common.hpp"
#include "powertour/constructions.hpp"
#include "powertour/error.hpp"
#include "powertour/random.hpp"
#include "powertour/serialization.hpp"
#include "powertour_cli/cli.hpp"

namespace powertour::cli {

namespace {

bool is_random(const std::string& g) {
  return g == "uniform" || g == "half-cube" || g == "cube-vertices" || g == "clustered";
}

PointSet generate(const GenOptions& o) {
  const auto& g = o.generator;
  if (g == "uniform") return uniform_cube(o.k, o.n, o.seed);
  if (g == "half-cube") return uniform_half_cube(o.k, o.n, o.seed);
  if (g == "cube-vertices") return cube_vertex_subset(o.k, o.n, o.seed);
  if (g == "clustered") return clustered(o.k, o.n, o.clusters, o.radius, o.seed);
  if (g == "even-weight") return even_weight_code(o.k);
  if (g == "k3-code4") return k3_code4();
  if (g == "k4-code8") return k4_even_weight_code();
  if (g == "diagonal") return diagonal_pair(o.k);
  if (g == "figure1-corners") return figure1_sets().corners;
  if (g == "figure1-pair") return figure1_sets().pair;
  if (g == "figure1-five") return figure1_sets().five;
  throw InputError("unknown generator '" + g + "'");
}

}  // namespace

int run_gen(const GenOptions& o, std::ostream& out) {
  const auto points = generate(o);
  std::string format = o.format;
  if (format.empty()) {
    format = o.output.size() >= 4 && o.output.compare(o.output.size() - 4, 4, ".csv") == 0 ? "csv" : "json";
  }
  if (format != "json" && format != "csv") throw InputError("format must be json or csv");

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw InputError("cannot write " + o.output);
  }
  std::ostream& dest = o.output.empty() ? out : file;
  if (format == "csv") {
    write_csv(dest, points);
  } else {
    auto j = to_json(points);
    j["generator"] = {{"name", o.generator}};
    if (is_random(o.generator)) {
      j["generator"]["seed"] = o.seed;
      j["generator"]["rng"] = kRngAlgorithm;
    }
    print_json(dest, j);
  }
  return kOk;
}

}  // namespace powertour::cli
