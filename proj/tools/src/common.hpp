#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace powertour::cli {

/// "3..8", "3,5,9" or "4". Throws InputError on anything else.
std::vector<std::size_t> parse_range(const std::string& text);

/// Current UTC time as 2026-01-31T12:00:00Z.
std::string timestamp_utc();

void print_json(std::ostream& out, const nlohmann::json& j);

struct GenOptions {
  std::string generator;
  std::size_t k = 2;
  std::size_t n = 10;
  std::uint64_t seed = 0;
  std::size_t clusters = 4;
  double radius = 0.05;
  std::string output;
  std::string format;  // json | csv; empty picks by extension
};

struct TourOptions {
  std::string algo;
  std::string input;
  std::optional<unsigned> k;
  std::optional<double> cutoff;
  std::string diagonal = "main";
  bool no_timestamp = false;
};

struct VerifyOptions {
  std::string suite;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string k_range;  // empty: suite default
  std::string n_range;
};

struct BenchOptions {
  std::string k_range = "3..5";
  std::string n_range = "10,100";
  std::string algos = "mst-sekanina,greedy,two-phase";
  std::string instance = "uniform";
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool no_timestamp = false;
};

int run_gen(const GenOptions& o, std::ostream& out);
int run_tour(const TourOptions& o, std::ostream& out);
int run_verify(const VerifyOptions& o, std::ostream& out);
int run_bench(const BenchOptions& o, std::ostream& out);

}  // namespace powertour::cli
