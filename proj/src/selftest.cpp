#include "cutpath/selftest.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "cutpath/baselines.hpp"
#include "cutpath/brute_force.hpp"
#include "cutpath/idpc.hpp"
#include "cutpath/ipc.hpp"
#include "cutpath/search.hpp"

namespace cutpath::selftest {

void Result::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

Result check_path_engine(std::size_t cases, std::size_t max_vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
    const auto g = brute::random_graph(rng, max_vertices, 0.5);
    std::vector<ExtValue> w;
    for (double p : g.probs) w.push_back(weight_from_prob(p));
    const int t = static_cast<int>(g.n) - 1;
    const auto expect = brute::best_path_product(g.n, g.edges, g.probs, 0, t);
    const auto got = most_probable_path(g.n, g.edges, w, 0, t);
    std::ostringstream why;
    if (expect.has_value() != got.has_value()) {
      why << "case " << c << ": existence mismatch";
    } else if (got) {
      const double product = std::exp(-got->total_weight);
      if (std::abs(product - *expect) > 1e-9 * *expect)
        why << "case " << c << ": product " << product << " vs " << *expect;
      double check = 1.0;
      for (EdgeId e : got->edges) check *= g.probs[e];
      if (std::abs(check - product) > 1e-9 * product) why << "case " << c << ": weight/product mismatch";
    }
    if (!why.str().empty()) r.fail(why.str());
  }
  return r;
}

Result check_cut_engine(std::size_t cases, std::size_t max_vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t c = 0; c < cases; ++c, ++r.cases) {
    const auto g = brute::random_graph(rng, max_vertices, 0.5);
    std::vector<ExtValue> caps;
    std::vector<double> raw;
    for (double p : g.probs) {
      caps.push_back(capacity_from_prob(p));
      raw.push_back(caps.back().is_inf() ? INFINITY : caps.back().value());
    }
    const VertexId s = 0;
    const VertexId t = static_cast<VertexId>(g.n) - 1;
    const double expect = brute::min_cut_capacity(g.n, g.edges, raw, s, t);
    const auto got = most_probable_cut(g.n, g.edges, caps, std::span<const VertexId>(&s, 1),
                                       std::span<const VertexId>(&t, 1));
    std::ostringstream why;
    if (std::isinf(expect) != !got.has_value()) {
      why << "case " << c << ": existence mismatch";
    } else if (got) {
      const double flow = brute::edmonds_karp(g.n, g.edges, raw, s, t);
      if (std::abs(got->total_capacity - expect) > 1e-9)
        why << "case " << c << ": cut " << got->total_capacity << " vs " << expect;
      else if (std::abs(got->flow_value - expect) > 1e-9)
        why << "case " << c << ": flow " << got->flow_value << " vs " << expect;
      else if (std::abs(flow - expect) > 1e-9)
        why << "case " << c << ": reference flow " << flow << " vs " << expect;
      std::vector<bool> keep(g.edges.size(), true);
      for (EdgeId e : got->edges) keep[e] = false;
      if (brute::connected(g.n, g.edges, keep, s, t)) why << "case " << c << ": cut does not separate";
    }
    if (!why.str().empty()) r.fail(why.str());
  }
  return r;
}

Result check_algorithms(std::size_t cases, std::size_t max_vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Result r;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto g = brute::random_graph(rng, max_vertices, unit(rng) * 0.6 + 0.2);
    const double free_rate = unit(rng);
    Roadmap roadmap(1);
    for (std::size_t v = 0; v < g.n; ++v) roadmap.add_vertex({static_cast<double>(v)});
    std::vector<EdgeState> truth;
    std::vector<bool> free_mask;
    for (const auto& e : g.edges) {
      const bool free = unit(rng) < free_rate;
      const double roll = unit(rng);
      const double p = roll < 0.1 ? (free ? 1.0 : 0.0) : 0.01 + 0.98 * unit(rng);
      roadmap.add_edge(e.u, e.v, p);
      truth.push_back(free ? EdgeState::kFree : EdgeState::kCollision);
      free_mask.push_back(free);
    }
    roadmap.set_query(0, static_cast<VertexId>(g.n) - 1);
    const bool feasible = brute::connected(g.n, g.edges, free_mask, 0, static_cast<int>(g.n) - 1);
    const TableOracle oracle(truth);
    const std::size_t ppi = 1 + c % 3;

    auto check = [&](const char* name, auto&& run) {
      ++r.cases;
      Roadmap copy = roadmap;
      std::ostringstream why;
      try {
        const Verdict v = run(copy);
        if (v.feasible() != feasible) why << name << " case " << c << ": wrong verdict";
        else if (auto err = certificate_error(roadmap, v, truth); !err.empty())
          why << name << " case " << c << ": " << err;
        else if (v.stats.n_evaluations > g.edges.size())
          why << name << " case " << c << ": too many evaluations";
        else if (v.stats.n_iterations > g.edges.size() + 1)
          why << name << " case " << c << ": too many iterations";
        else if (v.stats.stalled_iterations != 0)
          why << name << " case " << c << ": stalled iteration";
      } catch (const std::exception& e) {
        why << name << " case " << c << ": threw " << e.what();
      }
      if (!why.str().empty()) r.fail(why.str());
    };
    check("ipc", [&](Roadmap& m) { return run_ipc(m, oracle, {ppi}); });
    check("idpc", [&](Roadmap& m) {
      IdpcOptions o;
      o.paths_per_iteration = ppi;
      return run_idpc(m, oracle, o);
    });
    check("path_only", [&](Roadmap& m) { return path_only(m, oracle); });
    check("cut_only", [&](Roadmap& m) { return cut_only(m, oracle); });
    check("bfs", [&](Roadmap& m) { return bfs_feasibility(m, oracle); });
  }
  return r;
}

}  // namespace cutpath::selftest
