#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutpath/generators.hpp"
#include "cutpath/geometry.hpp"
#include "cutpath/roadmap.hpp"
#include "cutpath/verdict.hpp"

namespace cutpath::bench {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitMissingInput = 3;
inline constexpr int kExitAnalysis = 4;

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MissingInput : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class AnalysisError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// `key = value` lines, comma-separated lists, '#' comments.
//   scene                        bundled scene names, or paths to scene files
//   roadmap.type                 prm | grid | sparse
//   roadmap.n_edges              prm: edge targets (vertices = edges / 4)
//   roadmap.n_vertices           prm with roadmap.k, grid (rounded to a square),
//                                sparse (sampling attempts)
//   roadmap.k                    prm neighbor count
//   roadmap.radius               sparse visibility radius
//   prior.mode                   perfect, noisy, none
//   prior.params                 a, b, c, d for noisy
//   feasibility                  feasible, infeasible
//   algorithm.names              ipc, idpc, path_only, cut_only, bfs
//   algorithm.paths_per_iteration
//   seeds                        integers or ranges lo..hi
//   output                       directory (generate) or CSV path (run)
//   input                        instance directory written by generate
struct BenchConfig {
  std::vector<std::string> scenes;
  std::string roadmap_type = "prm";
  std::vector<std::size_t> n_edges;
  std::vector<std::size_t> n_vertices;
  std::optional<std::size_t> k;
  double radius = 0.15;
  std::vector<PriorMode> priors{PriorMode::kNoisy};
  double prior_params[4] = {0.3, 0.4, 0.6, 0.7};
  std::vector<bool> infeasible_variants{false, true};
  std::vector<std::string> algorithms;
  std::vector<std::size_t> paths_per_iteration{1};
  std::vector<std::uint64_t> seeds;
  std::string output;
  std::string input;
};

BenchConfig parse_config(std::istream& is);
BenchConfig load_config(const std::filesystem::path& path);

const std::vector<std::string>& algorithm_names();

// One query instance: a roadmap with priors and attached query, and the
// ground truth of every edge.
struct Instance {
  std::string id;
  std::string scene_name;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  PriorMode prior = PriorMode::kNoisy;
  bool infeasible_variant = false;
  Scene scene;
  Roadmap roadmap{2};
  std::vector<EdgeState> truth;
  bool ground_truth_feasible = false;
};

// Start-goal connectivity over truth-FREE edges (union-find).
bool truth_feasible(const Roadmap& roadmap, std::span<const EdgeState> truth);

// Builds every instance of the sweep (scene x size x seed x feasibility x
// prior), reusing one roadmap per (scene, size, seed). Instances whose
// query cannot be attached are reported to `log` and skipped.
std::vector<Instance> generate_instances(const BenchConfig& config, std::ostream* log = nullptr);

void write_instances(const std::filesystem::path& dir, const std::vector<Instance>& instances);
std::vector<Instance> read_instances(const std::filesystem::path& dir);

struct BenchRecord {
  std::string algorithm;
  std::string scene;
  std::string instance_id;
  std::uint64_t seed = 0;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::string prior_mode;
  bool ground_truth_feasible = false;
  bool verdict_feasible = false;
  bool correct = false;
  std::size_t n_evaluations = 0;
  std::size_t n_iterations = 0;
  std::size_t n_path_calls = 0;
  std::size_t n_cut_calls = 0;
  std::size_t max_cut_input_vertices = 0;
  double wall_time_us = 0.0;
  std::size_t size = 0;
  std::size_t cut_input_vertices_sum = 0;
  std::size_t paths_per_iteration = 1;
};

// Runs one algorithm on a fresh copy of the instance roadmap.
Verdict run_algorithm(const std::string& name, const Instance& instance,
                      std::size_t paths_per_iteration);

// Runs and checks one algorithm. Throws AnalysisError on a wrong verdict or
// an invalid certificate.
BenchRecord run_record(const std::string& name, const Instance& instance,
                       std::size_t paths_per_iteration);

// Every (instance, algorithm, paths_per_iteration) row in deterministic
// order; instances run in parallel.
std::vector<BenchRecord> run_all(const BenchConfig& config, const std::vector<Instance>& instances);

void write_csv(std::ostream& os, std::span<const BenchRecord> records);
std::vector<BenchRecord> read_csv(std::istream& is);

struct MeanCi {
  std::size_t n = 0;
  double mean = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

// Mean and two-sided Student-t confidence interval (n-1 dof). With fewer
// than two samples the interval is NaN.
MeanCi mean_ci(std::span<const double> xs, double level = 0.95);

struct CompareRow {
  std::string algorithm;
  std::string scene;
  std::size_t size = 0;
  std::string feasibility_class;  // feasible, infeasible, mixed
  std::string metric;  // n_evaluations, wall_time_us
  MeanCi diff;
};

// Paired differences metric(alg) - metric(baseline) over matching
// (instance, paths_per_iteration) rows. Throws AnalysisError when the
// baseline is absent.
std::vector<CompareRow> compare(std::span<const BenchRecord> records, const std::string& baseline);
void write_compare(std::ostream& os, std::span<const CompareRow> rows);

}  // namespace cutpath::bench
