#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "powertour/geometry.hpp"
#include "powertour/graphs.hpp"
#include "powertour/power_cost.hpp"
#include "powertour/verifiers.hpp"

namespace powertour {

inline constexpr int kSchemaVersion = 1;

// Point sets: {"k": int, "container": "unit_cube", "points": [[...], ...]}
[[nodiscard]] nlohmann::json to_json(const PointSet& points);
[[nodiscard]] PointSet point_set_from_json(const nlohmann::json& j);

// CSV: one point per row, k comma-separated columns, no header.
void write_csv(std::ostream& out, const PointSet& points);
[[nodiscard]] PointSet read_csv(std::istream& in, Container container = Container::UnitCube);

/// Reads .json or .csv by extension.
[[nodiscard]] PointSet load_point_set(const std::string& path);
void save_point_set(const std::string& path, const PointSet& points);

// {"k":..,"S_k":..,"s_k":..,"log_S_k":..}; S_k is null on overflow.
[[nodiscard]] nlohmann::json to_json(const PowerCost& cost);

// {"order": [...], "cost": {...}}
[[nodiscard]] nlohmann::json to_json(const Tour& t, unsigned k);
[[nodiscard]] nlohmann::json to_json(const HamPath& p, unsigned k);
// {"edges": [[u,v], ...], "cost": {...}}
[[nodiscard]] nlohmann::json to_json(const SpanningTree& t, unsigned k);
[[nodiscard]] nlohmann::json to_json(const Matching& m, unsigned k);
[[nodiscard]] nlohmann::json edges_to_json(const std::vector<Edge>& edges, unsigned k);

[[nodiscard]] Tour tour_from_json(const nlohmann::json& j, const PointSet& points);
[[nodiscard]] std::vector<Edge> edges_from_json(const nlohmann::json& j, const PointSet& points);

[[nodiscard]] nlohmann::json to_json(const BoundCheck& c);
[[nodiscard]] nlohmann::json to_json(const NamedBounds& b);
/// include_timing = false drops wall times so output is reproducible.
[[nodiscard]] nlohmann::json to_json(const BoundReport& r, bool include_timing = true);

}  // namespace powertour
