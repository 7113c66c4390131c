#include "cutpath/bench.hpp"

#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "cutpath/baselines.hpp"
#include "cutpath/idpc.hpp"
#include "cutpath/ipc.hpp"
#include "cutpath/oracle.hpp"
#include "text_reader.hpp"

namespace cutpath::bench {

namespace fs = std::filesystem;

bool truth_feasible(const Roadmap& roadmap, std::span<const EdgeState> truth) {
  if (truth.size() != roadmap.num_edges()) throw std::invalid_argument("truth_feasible: size mismatch");
  std::vector<std::size_t> parent(roadmap.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < truth.size(); ++e)
    if (truth[e] == EdgeState::kFree) {
      const auto& ed = roadmap.edge(static_cast<EdgeId>(e));
      parent[find(ed.u)] = find(ed.v);
    }
  return find(roadmap.start()) == find(roadmap.goal());
}

namespace {

std::uint64_t mix(std::uint64_t x, std::uint64_t tag) {
  x += 0x9E3779B97F4A7C15ULL * (tag + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Scene resolve_scene(const std::string& name) {
  const auto& bundled = bundled_scene_names();
  if (std::find(bundled.begin(), bundled.end(), name) != bundled.end()) return bundled_scene(name, false);
  std::ifstream in(name);
  if (!in) throw ConfigError(0, "unknown scene '" + name + "'");
  Scene scene = read_scene(in, fs::path(name).stem().string());
  scene.toggles_active = false;
  if (!scene.start || !scene.goal) throw ConfigError(0, "scene '" + name + "' has no start/goal");
  return scene;
}

std::vector<std::size_t> sizes_of(const BenchConfig& cfg) {
  if (!cfg.n_edges.empty()) return cfg.n_edges;
  return cfg.n_vertices;
}

Roadmap build_roadmap(const BenchConfig& cfg, const Scene& scene, std::size_t size, std::uint64_t seed) {
  if (cfg.roadmap_type == "prm") {
    if (!cfg.n_edges.empty()) return prm_with_edges(scene, std::max<std::size_t>(2, size / 4), size, seed);
    return prm(scene, size, *cfg.k, seed);
  }
  if (cfg.roadmap_type == "grid") {
    const auto side = std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(std::sqrt(size))));
    return grid(scene, side, side);
  }
  return sparse_roadmap(scene, size, cfg.radius, seed);
}

std::string instance_id(const std::string& scene, std::size_t size, std::uint64_t seed, bool infeasible,
                        PriorMode prior) {
  std::ostringstream os;
  os << scene << '-' << size << "-s" << seed << '-' << (infeasible ? "infeasible" : "feasible") << '-'
     << to_string(prior);
  return os.str();
}

EdgeState parse_status(const std::string& s) {
  if (s == "free") return EdgeState::kFree;
  if (s == "collision") return EdgeState::kCollision;
  throw std::invalid_argument("bad status '" + s + "'");
}

}  // namespace

std::vector<Instance> generate_instances(const BenchConfig& config, std::ostream* log) {
  const auto sizes = sizes_of(config);
  if (!config.scenes.empty() && sizes.empty())
    throw ConfigError(0, "no roadmap size given (roadmap.n_edges or roadmap.n_vertices)");
  std::vector<Instance> out;
  for (const auto& scene_name : config.scenes) {
    const Scene base = resolve_scene(scene_name);
    for (std::size_t size : sizes)
      for (std::uint64_t seed : config.seeds) {
        const Roadmap roadmap = build_roadmap(config, base, size, seed);
        for (bool infeasible : config.infeasible_variants)
          for (PriorMode prior : config.priors) {
            Instance inst;
            inst.scene_name = base.name.empty() ? scene_name : base.name;
            inst.id = instance_id(inst.scene_name, size, seed, infeasible, prior);
            inst.size = size;
            inst.seed = seed;
            inst.prior = prior;
            inst.infeasible_variant = infeasible;
            inst.scene = base;
            inst.scene.toggles_active = infeasible;
            inst.roadmap = roadmap;
            PriorCalibration cal{prior,
                                 config.prior_params[0],
                                 config.prior_params[1],
                                 config.prior_params[2],
                                 config.prior_params[3],
                                 mix(seed, (infeasible ? 16 : 0) + static_cast<std::uint64_t>(prior))};
            inst.truth = label_and_calibrate(inst.roadmap, inst.scene, cal);
            const Scene& scene = inst.scene;
            try {
              attach_query(inst.roadmap, *scene.start, *scene.goal,
                           [&](const Configuration& a, const Configuration& b) {
                             return evaluate_segment(scene, a, b);
                           });
            } catch (const QueryNotEmbeddable& e) {
              if (log) *log << "skipping " << inst.id << ": " << e.what() << '\n';
              continue;
            }
            inst.truth.resize(inst.roadmap.num_edges(), EdgeState::kFree);
            inst.ground_truth_feasible = truth_feasible(inst.roadmap, inst.truth);
            out.push_back(std::move(inst));
          }
      }
  }
  return out;
}

void write_instances(const fs::path& dir, const std::vector<Instance>& instances) {
  fs::create_directories(dir);
  auto open = [&](const fs::path& p) {
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot write " + p.string());
    return os;
  };
  auto manifest = open(dir / "manifest.txt");
  manifest << "# cutpath-instances v1\n# id scene size seed prior variant\n";
  for (const auto& inst : instances) {
    manifest << inst.id << ' ' << inst.scene_name << ' ' << inst.size << ' ' << inst.seed << ' '
             << to_string(inst.prior) << ' ' << (inst.infeasible_variant ? "infeasible" : "feasible")
             << '\n';
    auto scene = open(dir / (inst.id + ".scene"));
    write_scene(scene, inst.scene);
    auto roadmap = open(dir / (inst.id + ".roadmap"));
    write_roadmap(roadmap, inst.roadmap);
    auto truth = open(dir / (inst.id + ".truth"));
    truth << std::setprecision(17);
    for (std::size_t e = 0; e < inst.truth.size(); ++e) {
      const auto& ed = inst.roadmap.edge(static_cast<EdgeId>(e));
      truth << ed.u << ' ' << ed.v << ' ' << to_string(inst.truth[e]) << ' '
            << inst.roadmap.prior(static_cast<EdgeId>(e)) << '\n';
    }
    auto query = open(dir / (inst.id + ".query"));
    query << "query " << inst.roadmap.start() << ' ' << inst.roadmap.goal() << '\n';
  }
}

std::vector<Instance> read_instances(const fs::path& dir) {
  auto open = [&](const fs::path& p) {
    std::ifstream is(p);
    if (!is) throw MissingInput("missing instance file " + p.string());
    return is;
  };
  auto manifest = open(dir / "manifest.txt");
  detail::LineReader lines(manifest);
  std::vector<std::string> tok;
  std::vector<Instance> out;
  while (lines.next(tok)) {
    if (tok.size() != 6) lines.fail("manifest: expected 6 fields");
    Instance inst;
    inst.id = tok[0];
    inst.scene_name = tok[1];
    inst.size = static_cast<std::size_t>(lines.to_int(tok[2]));
    inst.seed = std::stoull(tok[3]);
    inst.prior = parse_prior_mode(tok[4]);
    inst.infeasible_variant = tok[5] == "infeasible";

    auto scene = open(dir / (inst.id + ".scene"));
    inst.scene = read_scene(scene, inst.scene_name);
    auto roadmap = open(dir / (inst.id + ".roadmap"));
    inst.roadmap = read_roadmap(roadmap);

    auto query = open(dir / (inst.id + ".query"));
    detail::LineReader qlines(query);
    std::vector<std::string> q;
    if (!qlines.next(q) || q.size() != 3 || q[0] != "query") qlines.fail("expected 'query <start> <goal>'");
    inst.roadmap.set_query(qlines.to_int(q[1]), qlines.to_int(q[2]));

    auto truth = open(dir / (inst.id + ".truth"));
    detail::LineReader tlines(truth);
    std::vector<std::string> t;
    while (tlines.next(t)) {
      if (t.size() != 4) tlines.fail("expected 'u v status p'");
      const auto e = inst.truth.size();
      if (e >= inst.roadmap.num_edges()) tlines.fail("more truth lines than edges");
      const auto& ed = inst.roadmap.edge(static_cast<EdgeId>(e));
      if (ed.u != tlines.to_int(t[0]) || ed.v != tlines.to_int(t[1])) tlines.fail("edge mismatch");
      try {
        inst.truth.push_back(parse_status(t[2]));
      } catch (const std::invalid_argument& err) {
        tlines.fail(err.what());
      }
    }
    if (inst.truth.size() != inst.roadmap.num_edges())
      throw ParseError(0, inst.id + ".truth: fewer truth lines than edges");
    inst.ground_truth_feasible = truth_feasible(inst.roadmap, inst.truth);
    out.push_back(std::move(inst));
  }
  return out;
}

Verdict run_algorithm(const std::string& name, const Instance& instance, std::size_t paths_per_iteration) {
  Roadmap roadmap = instance.roadmap;
  roadmap.clear_evaluations();
  const TableOracle oracle(instance.truth);
  if (name == "ipc") return run_ipc(roadmap, oracle, {paths_per_iteration});
  if (name == "idpc") {
    IdpcOptions options;
    options.paths_per_iteration = paths_per_iteration;
    return run_idpc(roadmap, oracle, options);
  }
  if (name == "path_only") return path_only(roadmap, oracle);
  if (name == "cut_only") return cut_only(roadmap, oracle);
  if (name == "bfs") return bfs_feasibility(roadmap, oracle);
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

BenchRecord run_record(const std::string& name, const Instance& instance, std::size_t paths_per_iteration) {
  const Verdict verdict = run_algorithm(name, instance, paths_per_iteration);
  BenchRecord r;
  r.algorithm = name;
  r.scene = instance.scene_name;
  r.instance_id = instance.id;
  r.seed = instance.seed;
  r.n_vertices = instance.roadmap.num_vertices();
  r.n_edges = instance.roadmap.num_edges();
  r.prior_mode = to_string(instance.prior);
  r.ground_truth_feasible = instance.ground_truth_feasible;
  r.verdict_feasible = verdict.feasible();
  r.correct = r.verdict_feasible == r.ground_truth_feasible;
  const auto& s = verdict.stats;
  r.n_evaluations = s.n_evaluations;
  r.n_iterations = s.n_iterations;
  r.n_path_calls = s.n_path_calls;
  r.n_cut_calls = s.n_cut_calls;
  r.max_cut_input_vertices = s.max_cut_input_vertices;
  r.wall_time_us = s.wall_time_us;
  r.size = instance.size;
  r.cut_input_vertices_sum = s.cut_input_vertices_sum;
  r.paths_per_iteration = paths_per_iteration;
  if (!r.correct)
    throw AnalysisError(name + " returned the wrong verdict on " + instance.id);
  if (const auto err = certificate_error(instance.roadmap, verdict, instance.truth); !err.empty())
    throw AnalysisError(name + " returned an invalid certificate on " + instance.id + ": " + err);
  return r;
}

std::vector<BenchRecord> run_all(const BenchConfig& config, const std::vector<Instance>& instances) {
  struct Task {
    std::size_t instance;
    std::size_t ppi;
    const std::string* algorithm;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (std::size_t ppi : config.paths_per_iteration)
      for (const auto& a : config.algorithms) tasks.push_back({i, ppi, &a});

  std::vector<BenchRecord> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < n; ++t) {
    try {
      rows[t] = run_record(*tasks[t].algorithm, instances[tasks[t].instance], tasks[t].ppi);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

namespace {

constexpr const char* kCsvVersion = "# cutpath-bench v1";
constexpr const char* kCsvHeader =
    "algorithm,scene,instance_id,seed,n_vertices,n_edges,prior_mode,ground_truth_feasible,verdict,"
    "correct,n_evaluations,n_iterations,n_path_calls,n_cut_calls,max_cut_input_vertices,wall_time_us,"
    "size,cut_input_vertices_sum,paths_per_iteration";

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

void write_csv(std::ostream& os, std::span<const BenchRecord> records) {
  os << kCsvVersion << '\n' << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.algorithm << ',' << r.scene << ',' << r.instance_id << ',' << r.seed << ',' << r.n_vertices
       << ',' << r.n_edges << ',' << r.prior_mode << ',' << bool_str(r.ground_truth_feasible) << ','
       << (r.verdict_feasible ? "FEASIBLE" : "INFEASIBLE") << ',' << bool_str(r.correct) << ','
       << r.n_evaluations << ',' << r.n_iterations << ',' << r.n_path_calls << ',' << r.n_cut_calls << ','
       << r.max_cut_input_vertices << ',' << std::fixed << std::setprecision(3) << r.wall_time_us
       << std::defaultfloat << ',' << r.size << ',' << r.cut_input_vertices_sum << ','
       << r.paths_per_iteration << '\n';
  }
}

std::vector<BenchRecord> read_csv(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<BenchRecord> out;
  auto fail = [&](const std::string& what) {
    throw AnalysisError("csv line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kCsvHeader) fail("unexpected header");
      header = true;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 19) fail("expected 19 fields");
    try {
      BenchRecord r;
      r.algorithm = f[0];
      r.scene = f[1];
      r.instance_id = f[2];
      r.seed = std::stoull(f[3]);
      r.n_vertices = std::stoul(f[4]);
      r.n_edges = std::stoul(f[5]);
      r.prior_mode = f[6];
      r.ground_truth_feasible = f[7] == "true";
      r.verdict_feasible = f[8] == "FEASIBLE";
      r.correct = f[9] == "true";
      r.n_evaluations = std::stoul(f[10]);
      r.n_iterations = std::stoul(f[11]);
      r.n_path_calls = std::stoul(f[12]);
      r.n_cut_calls = std::stoul(f[13]);
      r.max_cut_input_vertices = std::stoul(f[14]);
      r.wall_time_us = std::stod(f[15]);
      r.size = std::stoul(f[16]);
      r.cut_input_vertices_sum = std::stoul(f[17]);
      r.paths_per_iteration = std::stoul(f[18]);
      out.push_back(std::move(r));
    } catch (const std::logic_error&) {
      fail("malformed number");
    }
  }
  if (!header) throw AnalysisError("csv: missing header");
  return out;
}

std::vector<CompareRow> compare(std::span<const BenchRecord> records, const std::string& baseline) {
  using Pair = std::pair<std::string, std::size_t>;
  std::map<Pair, const BenchRecord*> base;
  std::vector<std::string> algorithms;
  for (const auto& r : records) {
    if (r.algorithm == baseline) base[{r.instance_id, r.paths_per_iteration}] = &r;
    if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end())
      algorithms.push_back(r.algorithm);
  }
  if (base.empty()) throw AnalysisError("baseline '" + baseline + "' not in the CSV");

  using Key = std::tuple<std::size_t, std::string, std::size_t, std::string, std::string>;
  std::map<Key, std::vector<double>> groups;
  for (const auto& r : records) {
    const auto it = base.find({r.instance_id, r.paths_per_iteration});
    if (it == base.end()) continue;
    const auto& b = *it->second;
    const auto alg = static_cast<std::size_t>(
        std::find(algorithms.begin(), algorithms.end(), r.algorithm) - algorithms.begin());
    const std::string cls = r.ground_truth_feasible ? "feasible" : "infeasible";
    for (const std::string& c : {cls, std::string("mixed")}) {
      groups[{alg, r.scene, r.size, c, "n_evaluations"}].push_back(
          static_cast<double>(r.n_evaluations) - static_cast<double>(b.n_evaluations));
      groups[{alg, r.scene, r.size, c, "wall_time_us"}].push_back(r.wall_time_us - b.wall_time_us);
    }
  }
  std::vector<CompareRow> rows;
  for (const auto& [key, diffs] : groups) {
    const auto& [alg, scene, size, cls, metric] = key;
    rows.push_back({algorithms[alg], scene, size, cls, metric, mean_ci(diffs)});
  }
  return rows;
}

void write_compare(std::ostream& os, std::span<const CompareRow> rows) {
  os << "algorithm,scene,size,class,metric,n,mean,ci_lo,ci_hi\n";
  os << std::setprecision(6);
  for (const auto& r : rows)
    os << r.algorithm << ',' << r.scene << ',' << r.size << ',' << r.feasibility_class << ',' << r.metric
       << ',' << r.diff.n << ',' << r.diff.mean << ',' << r.diff.lo << ',' << r.diff.hi << '\n';
}

}  // namespace cutpath::bench
