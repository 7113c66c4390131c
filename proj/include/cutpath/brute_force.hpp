#pragma once

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cutpath/roadmap.hpp"

// Exhaustive reference computations for small graphs. They share no code
// with the search engines and are used to cross-check them.
namespace cutpath::brute {

// Largest product of edge probabilities over simple s-t paths; nullopt when
// every path has product 0 (or none exists).
std::optional<double> best_path_product(std::size_t n, std::span<const Edge> edges,
                                        std::span<const double> probs, int s, int t);

// Minimum total capacity of edges crossing an s/t vertex bipartition, over
// all 2^(n-2) bipartitions. Capacities may be +infinity.
double min_cut_capacity(std::size_t n, std::span<const Edge> edges, std::span<const double> caps, int s,
                        int t);

// Max-flow value by BFS augmenting paths on the undirected network.
double edmonds_karp(std::size_t n, std::span<const Edge> edges, std::span<const double> caps, int s,
                    int t);

// Start-goal connectivity over the edges whose flag is set (union-find).
bool connected(std::size_t n, std::span<const Edge> edges, const std::vector<bool>& usable, int s, int t);

struct RandomGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<double> probs;
};

// Random simple graph with 2..max_n vertices; probabilities include exact 0
// and 1 with small probability.
RandomGraph random_graph(std::mt19937_64& rng, std::size_t max_n, double density);

}  // namespace cutpath::brute
