#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cutpath/oracle.hpp"
#include "cutpath/roadmap.hpp"
#include "cutpath/search.hpp"

namespace cutpath {

// Counters for one algorithm run. wall_time_us excludes oracle time.
struct IterationStats {
  std::size_t n_iterations = 0;
  std::size_t n_evaluations = 0;
  std::size_t n_cut_calls = 0;
  std::size_t n_path_calls = 0;
  std::size_t max_cut_input_vertices = 0;
  // Largest cut input over all calls except the first one.
  std::size_t max_cut_input_vertices_after_first = 0;
  std::size_t cut_input_vertices_sum = 0;
  // Non-terminal iterations that revealed no new edge (expected to stay 0).
  std::size_t stalled_iterations = 0;
  double wall_time_us = 0.0;

  void record_cut_call(std::size_t input_vertices);
};

// Terminal certificate: a path of FREE edges or a cut of COLLISION edges.
struct Verdict {
  std::variant<CandidatePath, CandidateCut> certificate;
  IterationStats stats;

  bool feasible() const { return std::holds_alternative<CandidatePath>(certificate); }
  const CandidatePath& path() const { return std::get<CandidatePath>(certificate); }
  const CandidateCut& cut() const { return std::get<CandidateCut>(certificate); }
};

// Empty when the certificate is sound against the roadmap's known statuses:
// a connected start-to-goal path of FREE edges, or a set of COLLISION edges
// whose removal disconnects start from goal. Otherwise a diagnostic.
std::string certificate_error(const Roadmap& roadmap, const Verdict& verdict);

// Same checks, but statuses are read from a ground-truth table.
std::string certificate_error(const Roadmap& roadmap, const Verdict& verdict,
                              std::span<const EdgeState> truth);

// Edges leaving the set reached from the start over edges not known to be in
// collision. Throws std::logic_error if the goal is reachable that way.
CandidateCut frontier_cut(const Roadmap& roadmap);

// Start-to-goal path over edges known FREE (BFS order), if any.
std::optional<CandidatePath> known_free_path(const Roadmap& roadmap);

namespace detail {

// Shared bookkeeping for a single run: ledger, counters and timing.
class RunContext {
 public:
  RunContext(Roadmap& roadmap, const EdgeOracle& oracle);

  Roadmap& roadmap() { return roadmap_; }
  const EdgeOracle& oracle() const { return oracle_; }
  EvaluationLedger& ledger() { return ledger_; }
  IterationStats& stats() { return stats_; }

  // Starts a new iteration and checks the progress bound.
  void begin_iteration();
  // Marks the current iteration non-terminal; counts it if it revealed nothing.
  void end_iteration();

  Verdict finish(CandidatePath path);
  Verdict finish(CandidateCut cut);

 private:
  Verdict finish_impl(std::variant<CandidatePath, CandidateCut> cert);

  Roadmap& roadmap_;
  const EdgeOracle& oracle_;
  EvaluationLedger ledger_;
  IterationStats stats_;
  std::size_t evaluations_at_iteration_start_ = 0;
  std::chrono::steady_clock::time_point started_;
};

}  // namespace detail

}  // namespace cutpath
