#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "common.hpp"
#include "powertour/constructions.hpp"
#include "powertour/error.hpp"
#include "powertour/graphs.hpp"
#include "powertour/greedy_path.hpp"
#include "powertour/newman.hpp"
#include "powertour/oracle.hpp"
#include "powertour/parallel.hpp"
#include "powertour/random.hpp"
#include "powertour/sekanina.hpp"
#include "powertour/two_phase.hpp"
#include "powertour_cli/cli.hpp"

namespace powertour::cli {

namespace {

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

PointSet instance(const std::string& kind, std::size_t k, std::size_t n, std::uint64_t seed) {
  if (kind == "uniform") return uniform_cube(k, n, seed);
  if (kind == "clustered") return clustered(k, n, std::max<std::size_t>(1, n / 20), 0.02, seed);
  if (kind == "cube-vertices") return cube_vertex_subset(k, n, seed);
  if (kind == "diagonal") return diagonal_pair(k);
  throw InputError("unknown instance kind '" + kind + "'");
}

Tour run_algorithm(const std::string& algo, const PointSet& x, unsigned k) {
  if (algo == "mst-sekanina") return mst_sekanina_tour(x, k).tour;
  if (algo == "greedy") return close_path(greedy_ham_path(x).path, x);
  if (algo == "two-phase") return two_phase_tour(x, k).tour;
  if (algo == "newman2d") return planar::newman_square_tour(x);
  if (algo == "oracle") return exact_min_tour(x, k).tour;
  throw InputError("unknown algorithm '" + algo + "'");
}

std::string number(double v) {
  if (std::isinf(v)) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Job {
  std::size_t k;
  std::size_t n;
  std::uint64_t seed;
};

}  // namespace

int run_bench(const BenchOptions& o, std::ostream& out) {
  const auto ks = parse_range(o.k_range);
  const auto ns = o.instance == "diagonal" ? std::vector<std::size_t>{2} : parse_range(o.n_range);
  const auto algos = split(o.algos);
  if (o.trials == 0) throw InputError("--trials must be positive");
  for (const auto& a : algos) {
    if (a == "newman2d" && (ks.size() != 1 || ks.front() != 2)) throw InputError("newman2d needs --k 2");
    if (a == "oracle" && *std::max_element(ns.begin(), ns.end()) > kMaxOracleTour) {
      throw InputError("oracle needs n <= " + std::to_string(kMaxOracleTour));
    }
  }
  for (auto k : ks) {
    if (k == 0) throw InputError("k must be positive");
  }

  std::vector<Job> jobs;
  for (auto k : ks)
    for (auto n : ns)
      for (std::size_t t = 0; t < o.trials; ++t) jobs.push_back({k, n, mix_seed(o.seed, t)});

  std::vector<std::vector<std::string>> rows(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto& job = jobs[i];
    const auto x = instance(o.instance, job.k, job.n, job.seed);
    const auto k = static_cast<unsigned>(job.k);
    for (const auto& algo : algos) {
      const auto start = std::chrono::steady_clock::now();
      const auto tour = run_algorithm(algo, x, k);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      const auto cost = power_cost(tour.edges, k);
      rows[i].push_back(std::to_string(job.k) + ',' + std::to_string(x.size()) + ',' + algo + ',' +
                        std::to_string(job.seed) + ',' + number(cost.unscaled) + ',' +
                        number(cost.scaled) + ',' + number(cost.scaled / std::sqrt(double(k))) + ',' +
                        (o.no_timestamp ? std::string() : number(ms)));
    }
  });

  out << "k,n,algo,seed,S_k,s_k,s_k_over_sqrt_k,time_ms\n";
  for (const auto& r : rows)
    for (const auto& line : r) out << line << '\n';
  return kOk;
}

}  // namespace powertour::cli
