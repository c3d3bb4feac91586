#include "powertour/serialization.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "powertour/error.hpp"

namespace powertour {

using nlohmann::json;

json to_json(const PointSet& points) {
  return json{{"k", points.dimension()},
              {"container", std::string(to_string(points.container()))},
              {"points", points.points()}};
}

PointSet point_set_from_json(const json& j) {
  try {
    const auto k = j.at("k").get<std::size_t>();
    Container c = Container::UnitCube;
    if (j.contains("container")) c = container_from_string(j.at("container").get<std::string>());
    auto pts = j.at("points").get<std::vector<Point>>();
    return PointSet(k, std::move(pts), c);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed point-set JSON: ") + e.what());
  }
}

void write_csv(std::ostream& out, const PointSet& points) {
  std::ostringstream line;
  line.precision(17);
  for (const auto& p : points.points()) {
    line.str("");
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c > 0) line << ',';
      line << p[c];
    }
    out << line.str() << '\n';
  }
}

PointSet read_csv(std::istream& in, Container container) {
  std::vector<Point> pts;
  std::string row;
  std::size_t line_no = 0;
  while (std::getline(in, row)) {
    ++line_no;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.find_first_not_of(" \t") == std::string::npos) continue;
    Point p;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        p.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::logic_error&) {
        throw InputError("CSV line " + std::to_string(line_no) + ": bad number '" + cell + "'");
      }
    }
    pts.push_back(std::move(p));
  }
  if (pts.empty()) throw InputError("CSV holds no points");
  const std::size_t k = pts.front().size();
  return PointSet(k, std::move(pts), container);
}

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

PointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  if (has_suffix(path, ".csv")) return read_csv(in);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return point_set_from_json(j);
}

void save_point_set(const std::string& path, const PointSet& points) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  if (has_suffix(path, ".csv")) {
    write_csv(out, points);
  } else {
    out << to_json(points).dump(2) << '\n';
  }
}

json to_json(const PowerCost& cost) {
  json j{{"k", cost.exponent}, {"s_k", cost.scaled}, {"log_S_k", nullptr}};
  j["S_k"] = cost.overflow ? json(nullptr) : json(cost.unscaled);
  if (std::isfinite(cost.log_unscaled)) j["log_S_k"] = cost.log_unscaled;
  return j;
}

namespace {

json order_json(const std::vector<std::size_t>& order, const std::vector<Edge>& edges, unsigned k) {
  return json{{"order", order}, {"cost", to_json(power_cost(edges, k))}};
}

}  // namespace

json to_json(const Tour& t, unsigned k) { return order_json(t.order, t.edges, k); }
json to_json(const HamPath& p, unsigned k) { return order_json(p.order, p.edges, k); }

json edges_to_json(const std::vector<Edge>& edges, unsigned k) {
  json list = json::array();
  for (const auto& e : edges) list.push_back({e.u, e.v});
  return json{{"edges", std::move(list)}, {"cost", to_json(power_cost(edges, k))}};
}

json to_json(const SpanningTree& t, unsigned k) { return edges_to_json(t.edges, k); }
json to_json(const Matching& m, unsigned k) { return edges_to_json(m.edges, k); }

Tour tour_from_json(const json& j, const PointSet& points) {
  try {
    return make_tour(points, j.at("order").get<std::vector<std::size_t>>());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed tour JSON: ") + e.what());
  }
}

std::vector<Edge> edges_from_json(const json& j, const PointSet& points) {
  std::vector<Edge> edges;
  try {
    for (const auto& pair : j.at("edges")) {
      if (pair.size() != 2) throw InputError("edge entries must be [u, v]");
      edges.push_back(make_edge(points, pair[0].get<std::size_t>(), pair[1].get<std::size_t>()));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed edge JSON: ") + e.what());
  }
  return edges;
}

json to_json(const BoundCheck& c) {
  return json{{"name", c.name},     {"bound", c.bound},         {"log_bound", c.log_bound},
              {"achieved", c.achieved}, {"upper", c.upper}, {"certified", c.certified},
              {"pass", c.pass}};
}

json to_json(const NamedBounds& b) {
  json j{{"k", b.k},
         {"conjectured_cycle", b.conjectured_cycle},
         {"bollobas_meir", b.bollobas_meir},
         {"mst_ball_packing", b.mst_ball_packing},
         {"k3_lower", b.k3_lower},
         {"revised_cycle", b.revised_cycle},
         {"revised_path", nullptr}};
  if (b.revised_path) j["revised_path"] = *b.revised_path;
  return j;
}

json to_json(const BoundReport& r, bool include_timing) {
  json results = json::array();
  for (const auto& res : r.results) {
    json checks = json::array();
    for (const auto& c : res.checks) checks.push_back(to_json(c));
    json entry{{"algorithm", res.run.algorithm},
               {"cost", to_json(res.run.cost)},
               {"checks", std::move(checks)}};
    if (include_timing && res.run.wall_ms) entry["wall_ms"] = *res.run.wall_ms;
    results.push_back(std::move(entry));
  }
  return json{{"instance", r.instance},
              {"k", r.k},
              {"n", r.n},
              {"bounds", to_json(r.bounds)},
              {"results", std::move(results)},
              {"certified_pass", r.certified_pass()}};
}

}  // namespace powertour
