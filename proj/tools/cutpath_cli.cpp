#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cutpath/bench.hpp"
#include "cutpath/selftest.hpp"

namespace bench = cutpath::bench;

namespace {

int cmd_generate(const std::string& config_path, const std::string& output) {
  auto cfg = bench::load_config(config_path);
  if (!output.empty()) cfg.output = output;
  if (cfg.output.empty()) throw bench::ConfigError(0, "generate needs 'output' (instance directory)");
  const auto instances = bench::generate_instances(cfg, &std::cerr);
  bench::write_instances(cfg.output, instances);
  std::cerr << "wrote " << instances.size() << " instances to " << cfg.output << '\n';
  return bench::kExitOk;
}

int cmd_run(const std::string& config_path, const std::string& input, const std::string& output) {
  auto cfg = bench::load_config(config_path);
  if (!input.empty()) cfg.input = input;
  if (!output.empty()) cfg.output = output;
  const auto instances =
      cfg.input.empty() ? bench::generate_instances(cfg, &std::cerr) : bench::read_instances(cfg.input);
  const auto rows = bench::run_all(cfg, instances);
  if (cfg.output.empty() || cfg.output == "-") {
    bench::write_csv(std::cout, rows);
  } else {
    std::ofstream os(cfg.output);
    if (!os) throw std::runtime_error("cannot write " + cfg.output);
    bench::write_csv(os, rows);
  }
  return bench::kExitOk;
}

int cmd_compare(const std::string& csv, const std::string& baseline) {
  std::ifstream in(csv);
  if (!in) throw bench::MissingInput("cannot open " + csv);
  const auto records = bench::read_csv(in);
  bench::write_compare(std::cout, bench::compare(records, baseline));
  return bench::kExitOk;
}

int cmd_selftest(std::size_t cases, std::uint64_t seed) {
  using namespace cutpath::selftest;
  const std::pair<const char*, Result> suites[] = {
      {"path engine", check_path_engine(cases, 10, seed)},
      {"cut engine", check_cut_engine(cases, 12, seed + 1)},
      {"algorithms", check_algorithms(cases / 5 + 1, 9, seed + 2)},
  };
  bool ok = true;
  for (const auto& [name, r] : suites) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << name << " (" << r.cases << " cases, " << r.failures
              << " failures)";
    if (!r.ok()) std::cout << ": " << r.first_failure;
    std::cout << '\n';
    ok = ok && r.ok();
  }
  return ok ? bench::kExitOk : bench::kExitAnalysis;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasibility checking on prior roadmaps"};
  app.require_subcommand(1);

  std::string config, input, output, csv, baseline = "idpc";
  std::size_t cases = 1000;
  std::uint64_t seed = 1;

  auto* gen = app.add_subcommand("generate", "Write instance files for a sweep");
  gen->add_option("config", config, "Config file")->required();
  gen->add_option("-o,--output", output, "Instance directory (overrides config)");

  auto* run = app.add_subcommand("run", "Run algorithms and emit CSV");
  run->add_option("config", config, "Config file")->required();
  run->add_option("-i,--input", input, "Instance directory (overrides config)");
  run->add_option("-o,--output", output, "CSV path, '-' for stdout (overrides config)");

  auto* cmp = app.add_subcommand("compare", "Paired differences against a baseline");
  cmp->add_option("csv", csv, "CSV produced by run")->required();
  cmp->add_option("-b,--baseline", baseline, "Baseline algorithm")->capture_default_str();

  auto* self = app.add_subcommand("selftest", "Cross-check against brute-force oracles");
  self->add_option("--cases", cases, "Random cases per suite")->capture_default_str();
  self->add_option("--seed", seed, "Seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_generate(config, output);
    if (*run) return cmd_run(config, input, output);
    if (*cmp) return cmd_compare(csv, baseline);
    return cmd_selftest(cases, seed);
  } catch (const bench::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bench::kExitConfig;
  } catch (const bench::MissingInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bench::kExitMissingInput;
  } catch (const cutpath::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bench::kExitMissingInput;
  } catch (const bench::AnalysisError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bench::kExitAnalysis;
  }
}
