#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>

#include "common.hpp"
#include "powertour/bounds.hpp"
#include "powertour/constructions.hpp"
#include "powertour/error.hpp"
#include "powertour/graphs.hpp"
#include "powertour/greedy_path.hpp"
#include "powertour/mst.hpp"
#include "powertour/newman.hpp"
#include "powertour/oracle.hpp"
#include "powertour/parallel.hpp"
#include "powertour/random.hpp"
#include "powertour/sekanina.hpp"
#include "powertour/serialization.hpp"
#include "powertour/two_phase.hpp"
#include "powertour/verifiers.hpp"
#include "powertour_cli/cli.hpp"

namespace powertour::cli {

namespace {

struct Outcome {
  bool ok = true;
  double score = 0.0;  // check-specific; the worst value is reported
};

struct Check {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<std::size_t> first_failure;
  double worst = -std::numeric_limits<double>::infinity();
};

// Trial i draws from Rng(mix_seed(seed, stream + i)); results merge by index.
Check run_trials(const std::string& name, std::size_t trials, std::uint64_t seed,
                 std::uint64_t stream, const std::function<Outcome(Rng&, std::size_t)>& trial) {
  std::vector<Outcome> results(trials);
  parallel_for(trials, [&](std::size_t i) {
    Rng rng(mix_seed(seed, stream + i));
    results[i] = trial(rng, i);
  });
  Check c{name, trials, 0, {}, -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < trials; ++i) {
    c.worst = std::max(c.worst, results[i].score);
    if (!results[i].ok) {
      ++c.failures;
      if (!c.first_failure) c.first_failure = i;
    }
  }
  return c;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& values) {
  return values[rng.below(values.size())];
}

std::vector<std::size_t> range_or(const std::string& text, const std::string& fallback) {
  return parse_range(text.empty() ? fallback : text);
}

bool rel_eq(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

std::vector<Check> suite_lemma1(const VerifyOptions& o) {
  const auto ks = range_or(o.k_range, "2..10");
  const auto ns = range_or(o.n_range, "3..50");
  return {run_trials("mst_ball_packing", o.trials, o.seed, 0, [&](Rng& rng, std::size_t) {
    const auto x = uniform_cube(pick(rng, ks), pick(rng, ns), rng.next());
    const auto bad = mst_ball_packing_check(build_mst(x), x);
    return Outcome{bad.empty(), static_cast<double>(bad.size())};
  })};
}

std::vector<Check> suite_lemma5(const VerifyOptions& o) {
  std::vector<Check> out;
  for (std::size_t k : range_or(o.k_range, "2..20")) {
    out.push_back(run_trials("random_pairs_k" + std::to_string(k), o.trials, o.seed, k << 32,
                             [&](Rng& rng, std::size_t) {
                               Point u(k), v(k);
                               for (auto& c : u) c = rng.uniform(-0.5, 0.5);
                               for (auto& c : v) c = rng.uniform(-0.5, 0.5);
                               const auto r = lemma5_check(u, v);
                               return Outcome{r.ok, r.lhs / r.rhs};
                             }));
  }
  std::vector<std::size_t> tight;
  for (std::size_t k = 5; k <= 50; k += 5) tight.push_back(k);
  out.push_back(run_trials("tight_vectors", tight.size(), o.seed, 0, [&](Rng&, std::size_t i) {
    const auto [u, v] = lemma5_tight_vectors(tight[i]);
    const auto r = lemma5_check(u, v);
    return Outcome{r.ok && rel_eq(r.lhs, r.rhs, o.tol), std::abs(r.lhs - r.rhs) / r.rhs};
  }));
  return out;
}

std::vector<Check> suite_lemma7(const VerifyOptions& o) {
  return {run_trials("pair_sum_closed_form", kMaxPairSumM, o.seed, 0, [](Rng&, std::size_t i) {
    const std::size_t m = i + 1;
    const auto r = lemma7_max_pair_sum(m);
    return Outcome{r.value == (m / 2) * ((m + 1) / 2), static_cast<double>(r.value)};
  })};
}

std::vector<Check> suite_lemma9(const VerifyOptions& o) {
  const auto ks = range_or(o.k_range, "1..10");
  const auto ns = range_or(o.n_range, "3..200");
  std::vector<Check> out;
  out.push_back(run_trials("closest_pair_m3", o.trials, o.seed, 0, [&](Rng& rng, std::size_t) {
    const auto x = uniform_cube(pick(rng, ks), pick(rng, ns), rng.next());
    const auto r = closest_pair_bound_check(x, 3);
    return Outcome{r.ok, r.squared_distance / r.bound};
  }));
  out.push_back(run_trials("closest_pair_m_all", o.trials, o.seed, 1u << 30, [&](Rng& rng, std::size_t) {
    const auto x = uniform_cube(pick(rng, ks), pick(rng, ns), rng.next());
    const auto r = closest_pair_bound_check(x, x.size());
    return Outcome{r.ok, r.squared_distance / r.bound};
  }));
  // All greedy edges but the last have |e|^2 <= 2k/3 (closest pair among 3 path ends).
  out.push_back(run_trials("greedy_two_thirds", o.trials, o.seed, 2u << 30, [&](Rng& rng, std::size_t i) {
    const std::size_t k = pick(rng, ks);
    const std::size_t n = pick(rng, ns);
    const auto x = i % 2 == 0 || n > (std::size_t{1} << std::min<std::size_t>(k, 20))
                       ? uniform_cube(k, n, rng.next())
                       : cube_vertex_subset(k, n, rng.next());
    const auto trace = greedy_ham_path(x).trace;
    double worst = 0.0;
    for (std::size_t e = 0; e + 1 < trace.size(); ++e) {
      worst = std::max(worst, trace[e].weight * trace[e].weight / (2.0 * k / 3.0));
    }
    return Outcome{worst <= 1.0 + o.tol, worst};
  }));
  return out;
}

std::vector<Check> suite_bincode(const VerifyOptions& o) {
  const auto ks = range_or(o.k_range, "3..12");
  const auto ns = range_or(o.n_range, "2..200");
  auto draw = [&](Rng& rng) {
    const std::size_t k = pick(rng, ks);
    const std::size_t cap = k >= 63 ? ns.back() : std::size_t{1} << k;
    const std::size_t n = std::max<std::size_t>(2, std::min(pick(rng, ns), cap));
    return cube_vertex_subset(k, n, rng.next());
  };
  std::vector<Check> out;
  out.push_back(run_trials("greedy_edge_counts", o.trials, o.seed, 0, [&](Rng& rng, std::size_t) {
    const auto x = draw(rng);
    const std::size_t k = x.dimension();
    const auto trace = greedy_ham_path(x).trace;
    bool ok = true;
    double worst = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      const double count = static_cast<double>(greedy_edge_count_by_length(trace, double(j)));
      const double bound = std::exp2(double(k - j + 1));
      ok = ok && count < bound;
      worst = std::max(worst, count / bound);
    }
    return Outcome{ok, worst};
  }));
  out.push_back(run_trials("at_most_one_very_long", o.trials, o.seed, 1u << 30, [&](Rng& rng, std::size_t) {
    const auto x = draw(rng);
    const auto c = classify_edges(greedy_ham_path(x).path, static_cast<unsigned>(x.dimension()));
    return Outcome{c.very_long_edges <= 1, static_cast<double>(c.very_long_edges)};
  }));
  out.push_back(run_trials("singleton_bounds", o.trials, o.seed, 2u << 30, [&](Rng& rng, std::size_t) {
    const auto x = draw(rng);
    const auto d = hamming_min_distance(x);
    const auto r = singleton_check(x.dimension(), d, x.size());
    return Outcome{r.singleton_ok && r.improved_ok, double(x.size()) / r.singleton_bound};
  }));
  return out;
}

std::vector<Check> suite_bounds_sweep(const VerifyOptions& o) {
  const auto ks = range_or(o.k_range, "3..8");
  const auto ns = range_or(o.n_range, "2..200");
  std::vector<std::string> algos{"mst-sekanina", "two-phase", "greedy"};
  std::vector<Check> out;
  for (std::size_t k : ks) {
    if (k < 2) throw InputError("bounds-sweep needs k >= 2");
    auto names = algos;
    if (k == 2) names.push_back("newman2d");
    for (std::size_t a = 0; a < names.size(); ++a) {
      const std::string algo = names[a];
      // The same seeds for every algorithm at a given k: all see the same instances.
      out.push_back(run_trials(algo + "_k" + std::to_string(k), o.trials, o.seed, k << 32,
                               [&, algo, k](Rng& rng, std::size_t) {
                                 const unsigned kk = static_cast<unsigned>(k);
                                 const auto x = uniform_cube(k, pick(rng, ns), rng.next());
                                 Tour t;
                                 if (algo == "mst-sekanina") {
                                   t = mst_sekanina_tour(x, kk).tour;
                                 } else if (algo == "two-phase") {
                                   t = two_phase_tour(x, kk).tour;
                                 } else if (algo == "greedy") {
                                   t = close_path(greedy_ham_path(x).path, x);
                                 } else {
                                   t = planar::newman_square_tour(x);
                                 }
                                 const auto report = bound_report(x, kk, {{algo, power_cost(t.edges, kk), {}}});
                                 double worst = 0.0;
                                 for (const auto& c : report.results[0].checks) {
                                   if (c.certified && c.upper) worst = std::max(worst, c.achieved / c.bound);
                                 }
                                 return Outcome{report.certified_pass(), worst};
                               }));
    }
  }
  return out;
}

std::vector<Check> suite_tight_examples(const VerifyOptions& o) {
  struct Case {
    std::string name;
    std::function<bool()> run;
  };
  const auto sets = figure1_sets();
  std::vector<Case> cases;
  const std::pair<const char*, const PointSet*> figure[] = {
      {"figure1_corners", &sets.corners}, {"figure1_pair", &sets.pair}, {"figure1_five", &sets.five}};
  for (const auto& [name, x] : figure) {
    cases.push_back({std::string(name) + "_oracle",
                     [x = x, &o] { return rel_eq(exact_min_tour(*x, 2).cost.unscaled, 4.0, o.tol); }});
    cases.push_back({std::string(name) + "_newman", [x = x, &o] {
                       return rel_eq(power_cost(planar::newman_square_tour(*x).edges, 2).unscaled, 4.0, o.tol);
                     }});
  }
  cases.push_back({"k3_code4_scaled", [&o] {
                     return rel_eq(exact_min_tour(k3_code4(), 3).cost.scaled, std::pow(2.0, 7.0 / 6.0), o.tol);
                   }});
  cases.push_back({"k4_code8_unscaled", [&o] {
                     return rel_eq(exact_min_tour(k4_even_weight_code(), 4).cost.unscaled, 32.0, o.tol);
                   }});
  for (std::size_t k : range_or(o.k_range, "1..12")) {
    cases.push_back({"diagonal_k" + std::to_string(k), [k, &o] {
                       const double expect = std::log(2.0) + 0.5 * double(k) * std::log(double(k));
                       const auto cost = exact_min_tour(diagonal_pair(k), static_cast<unsigned>(k)).cost;
                       return std::abs(cost.log_unscaled - expect) <= o.tol;
                     }});
  }
  std::vector<Check> out;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    out.push_back(run_trials(cases[i].name, 1, o.seed, i, [&](Rng&, std::size_t) {
      return Outcome{cases[i].run(), 0.0};
    }));
  }
  return out;
}

}  // namespace

int run_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.trials == 0) throw InputError("--trials must be positive");
  if (!(o.tol >= 0.0)) throw InputError("--tol must be nonnegative");
  std::vector<Check> checks;
  if (o.suite == "lemma1") {
    checks = suite_lemma1(o);
  } else if (o.suite == "lemma5") {
    checks = suite_lemma5(o);
  } else if (o.suite == "lemma7") {
    checks = suite_lemma7(o);
  } else if (o.suite == "lemma9") {
    checks = suite_lemma9(o);
  } else if (o.suite == "bincode") {
    checks = suite_bincode(o);
  } else if (o.suite == "bounds-sweep") {
    checks = suite_bounds_sweep(o);
  } else if (o.suite == "tight-examples") {
    checks = suite_tight_examples(o);
  } else {
    throw InputError("unknown suite '" + o.suite + "'");
  }

  bool pass = true;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"name", c.name}, {"trials", c.trials}, {"failures", c.failures},
                     {"pass", c.failures == 0}, {"worst", c.worst}};
    if (c.first_failure) j["first_failure"] = *c.first_failure;
    list.push_back(std::move(j));
    pass = pass && c.failures == 0;
  }
  print_json(out, {{"schema_version", kSchemaVersion},
                   {"suite", o.suite},
                   {"trials", o.trials},
                   {"seed", o.seed},
                   {"tol", o.tol},
                   {"checks", std::move(list)},
                   {"pass", pass}});
  return pass ? kOk : kBoundViolation;
}

}  // namespace powertour::cli
