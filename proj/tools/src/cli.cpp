#include "powertour_cli/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "common.hpp"
#include "powertour/error.hpp"

namespace powertour::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-cost tours, paths and trees over point sets in the unit cube", "powertour"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "powertour 0.1.0");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a named or random point set");
  gen_cmd->add_option("generator", gen.generator,
                      "uniform | half-cube | cube-vertices | clustered | even-weight | k3-code4 | "
                      "k4-code8 | diagonal | figure1-corners | figure1-pair | figure1-five")
      ->required();
  gen_cmd->add_option("--k", gen.k, "Dimension")->capture_default_str()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--n", gen.n, "Number of points")->capture_default_str()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--clusters", gen.clusters, "Cluster count (clustered)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--radius", gen.radius, "Cluster radius (clustered)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("-o,--output", gen.output, "Output file; stdout when omitted");
  gen_cmd->add_option("--format", gen.format, "json | csv (default: by extension, else json)")
      ->check(CLI::IsMember({"json", "csv"}));

  TourOptions tour;
  auto* tour_cmd = app.add_subcommand("tour", "Build a tour and compare it with the named bounds");
  tour_cmd->add_option("--algo", tour.algo, "mst-sekanina | greedy | two-phase | newman2d | oracle")
      ->required()
      ->check(CLI::IsMember({"mst-sekanina", "greedy", "two-phase", "newman2d", "oracle"}));
  tour_cmd->add_option("--k", tour.k, "Cost exponent (default: the dimension)")->check(CLI::PositiveNumber);
  tour_cmd->add_option("--cutoff", tour.cutoff, "Forest threshold for two-phase (default k^-1/4)")
      ->check(CLI::NonNegativeNumber);
  tour_cmd->add_option("--diagonal", tour.diagonal, "Square split for newman2d: main | anti")
      ->capture_default_str()
      ->check(CLI::IsMember({"main", "anti"}));
  tour_cmd->add_flag("--no-timestamp", tour.no_timestamp, "Omit timestamp and wall times");
  tour_cmd->add_option("input", tour.input, "Point-set file (.json or .csv)")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite and print a JSON summary");
  verify_cmd->add_option("suite", verify.suite,
                         "lemma1 | lemma5 | lemma7 | lemma9 | bincode | bounds-sweep | tight-examples")
      ->required()
      ->check(CLI::IsMember(
          {"lemma1", "lemma5", "lemma7", "lemma9", "bincode", "bounds-sweep", "tight-examples"}));
  verify_cmd->add_option("--trials", verify.trials, "Trials per check")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Base seed")->capture_default_str();
  verify_cmd->add_option("--tol", verify.tol, "Relative tolerance for equalities")->capture_default_str();
  verify_cmd->add_option("--k", verify.k_range, "Dimensions, e.g. 3..8 or 3,5");
  verify_cmd->add_option("--n", verify.n_range, "Point counts, e.g. 2..200");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep a grid and print CSV rows");
  bench_cmd->add_option("--k", bench.k_range, "Dimensions")->capture_default_str();
  bench_cmd->add_option("--n", bench.n_range, "Point counts")->capture_default_str();
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms")->capture_default_str();
  bench_cmd->add_option("--instance", bench.instance, "uniform | clustered | cube-vertices | diagonal")
      ->capture_default_str()
      ->check(CLI::IsMember({"uniform", "clustered", "cube-vertices", "diagonal"}));
  bench_cmd->add_option("--trials", bench.trials, "Instances per (k, n)")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
  bench_cmd->add_flag("--no-timestamp", bench.no_timestamp, "Leave time_ms empty");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (tour_cmd->parsed()) return run_tour(tour, out);
    if (verify_cmd->parsed()) return run_verify(verify, out);
    return run_bench(bench, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace powertour::cli
