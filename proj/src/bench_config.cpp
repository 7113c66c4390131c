#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cutpath/bench.hpp"

namespace cutpath::bench {

ConfigError::ConfigError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "config line " + std::to_string(line) + ": " + what : "config: " + what),
      line_(line) {}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"ipc", "idpc", "path_only", "cut_only", "bfs"};
  return names;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& s, std::size_t line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError(line, "expected a number, got '" + s + "'");
  return v;
}

template <typename T>
std::vector<T> parse_numbers(const std::string& value, std::size_t line) {
  std::vector<T> out;
  for (const auto& item : split_list(value)) out.push_back(parse_number<T>(item, line));
  return out;
}

std::vector<std::size_t> parse_positive(const std::string& value, std::size_t line) {
  auto out = parse_numbers<std::size_t>(value, line);
  for (auto v : out)
    if (v == 0) throw ConfigError(line, "values must be positive");
  return out;
}

}  // namespace

BenchConfig parse_config(std::istream& is) {
  BenchConfig cfg;
  std::string raw;
  std::size_t line = 0;
  std::vector<std::string> seen;
  while (std::getline(is, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(std::string_view(raw).substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw ConfigError(line, "duplicate key '" + key + "'");
    seen.push_back(key);

    if (key == "scene") {
      cfg.scenes = split_list(value);
    } else if (key == "roadmap.type") {
      if (value != "prm" && value != "grid" && value != "sparse")
        throw ConfigError(line, "roadmap.type must be prm, grid or sparse");
      cfg.roadmap_type = value;
    } else if (key == "roadmap.n_edges") {
      cfg.n_edges = parse_positive(value, line);
    } else if (key == "roadmap.n_vertices") {
      cfg.n_vertices = parse_positive(value, line);
    } else if (key == "roadmap.k") {
      cfg.k = parse_number<std::size_t>(value, line);
      if (*cfg.k == 0) throw ConfigError(line, "roadmap.k must be positive");
    } else if (key == "roadmap.radius") {
      cfg.radius = parse_number<double>(value, line);
      if (!(cfg.radius > 0.0)) throw ConfigError(line, "roadmap.radius must be positive");
    } else if (key == "prior.mode") {
      cfg.priors.clear();
      for (const auto& m : split_list(value)) {
        try {
          cfg.priors.push_back(parse_prior_mode(m));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(line, e.what());
        }
      }
    } else if (key == "prior.params") {
      const auto ps = parse_numbers<double>(value, line);
      if (ps.size() != 4) throw ConfigError(line, "prior.params needs four values a, b, c, d");
      PriorCalibration probe{PriorMode::kNoisy, ps[0], ps[1], ps[2], ps[3], 0};
      try {
        probe.validate();
      } catch (const std::invalid_argument& e) {
        throw ConfigError(line, e.what());
      }
      std::copy(ps.begin(), ps.end(), cfg.prior_params);
    } else if (key == "feasibility") {
      cfg.infeasible_variants.clear();
      for (const auto& f : split_list(value)) {
        if (f == "feasible")
          cfg.infeasible_variants.push_back(false);
        else if (f == "infeasible")
          cfg.infeasible_variants.push_back(true);
        else
          throw ConfigError(line, "feasibility entries must be feasible or infeasible");
      }
    } else if (key == "algorithm.names") {
      cfg.algorithms = split_list(value);
      for (const auto& a : cfg.algorithms)
        if (std::find(algorithm_names().begin(), algorithm_names().end(), a) == algorithm_names().end())
          throw ConfigError(line, "unknown algorithm '" + a + "'");
    } else if (key == "algorithm.paths_per_iteration") {
      cfg.paths_per_iteration = parse_positive(value, line);
      if (cfg.paths_per_iteration.empty())
        throw ConfigError(line, "algorithm.paths_per_iteration is empty");
    } else if (key == "seeds") {
      cfg.seeds.clear();
      for (const auto& item : split_list(value)) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
          cfg.seeds.push_back(parse_number<std::uint64_t>(item, line));
          continue;
        }
        const auto lo = parse_number<std::uint64_t>(trim(item.substr(0, dots)), line);
        const auto hi = parse_number<std::uint64_t>(trim(item.substr(dots + 2)), line);
        if (lo > hi) throw ConfigError(line, "empty seed range " + item);
        for (auto s = lo; s <= hi; ++s) cfg.seeds.push_back(s);
      }
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "input") {
      cfg.input = value;
    } else {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
  }

  if (cfg.roadmap_type == "prm" && !cfg.n_vertices.empty() && !cfg.k && cfg.n_edges.empty())
    throw ConfigError(0, "prm with roadmap.n_vertices needs roadmap.k");
  if (cfg.roadmap_type != "prm" && !cfg.n_edges.empty())
    throw ConfigError(0, "roadmap.n_edges applies to prm only");
  if (!cfg.n_edges.empty() && !cfg.n_vertices.empty())
    throw ConfigError(0, "give roadmap.n_edges or roadmap.n_vertices, not both");
  return cfg;
}

BenchConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingInput("cannot open config " + path.string());
  return parse_config(in);
}

}  // namespace cutpath::bench
