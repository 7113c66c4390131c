#include "cutpath/ipc.hpp"

#include <stdexcept>

namespace cutpath {

bool evaluate_path_candidate(const CandidatePath& path, Roadmap& roadmap, const EdgeOracle& oracle,
                             EvaluationLedger& ledger) {
  bool all_free = true;
  for (EdgeId e : path.edges) {
    if (roadmap.known_status(e) == EdgeState::kUnknown) evaluate_edge(ledger, oracle, roadmap, e);
    if (roadmap.known_status(e) != EdgeState::kFree) all_free = false;
  }
  return all_free;
}

bool evaluate_cut_candidate(const CandidateCut& cut, Roadmap& roadmap, const EdgeOracle& oracle,
                            EvaluationLedger& ledger) {
  bool all_collision = true;
  for (EdgeId e : cut.edges) {
    if (roadmap.known_status(e) == EdgeState::kUnknown) evaluate_edge(ledger, oracle, roadmap, e);
    if (roadmap.known_status(e) != EdgeState::kCollision) all_collision = false;
  }
  return all_collision;
}

std::size_t cut_edge_position(std::span<const EdgeState> statuses) {
  std::size_t best_start = 0, best_len = 0;
  for (std::size_t i = 0; i < statuses.size();) {
    if (statuses[i] != EdgeState::kCollision) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < statuses.size() && statuses[j] == EdgeState::kCollision) ++j;
    if (j - i > best_len) {
      best_start = i;
      best_len = j - i;
    }
    i = j;
  }
  if (best_len == 0) throw ContractViolation("choose_cut_edge: path has no collision edge");
  return best_start + (best_len - 1) / 2;
}

EdgeId choose_cut_edge(const CandidatePath& path, Roadmap& roadmap,
                       const std::function<bool(EdgeId)>& eligible) {
  // Ineligible edges act as run separators.
  std::vector<EdgeState> statuses;
  for (EdgeId e : path.edges)
    statuses.push_back(!eligible || eligible(e) ? roadmap.known_status(e) : EdgeState::kFree);
  const EdgeId chosen = path.edges[cut_edge_position(statuses)];
  for (EdgeId e : path.edges) {
    if (eligible && !eligible(e)) continue;
    roadmap.set_capacity(e, e == chosen ? ExtValue::zero() : ExtValue::inf());
  }
  return chosen;
}

void reset_edge_values(const CandidatePath& path, Roadmap& roadmap) {
  for (EdgeId e : path.edges) roadmap.restore_capacity(e);
}

Verdict run_ipc(Roadmap& roadmap, const EdgeOracle& oracle, const IpcOptions& options) {
  if (options.paths_per_iteration < 1)
    throw std::invalid_argument("run_ipc: paths_per_iteration must be >= 1");
  detail::RunContext ctx(roadmap, oracle);
  auto& stats = ctx.stats();

  for (;;) {
    ctx.begin_iteration();
    std::optional<CandidatePath> path;
    for (std::size_t round = 0; round < options.paths_per_iteration; ++round) {
      auto next = most_probable_path(roadmap);
      ++stats.n_path_calls;
      if (!next) return ctx.finish(frontier_cut(roadmap));
      path = std::move(next);
      if (evaluate_path_candidate(*path, roadmap, oracle, ctx.ledger()))
        return ctx.finish(std::move(*path));
    }

    choose_cut_edge(*path, roadmap);
    auto cut = most_probable_cut(roadmap);
    stats.record_cut_call(roadmap.num_vertices());
    if (cut && evaluate_cut_candidate(*cut, roadmap, oracle, ctx.ledger())) {
      reset_edge_values(*path, roadmap);
      return ctx.finish(std::move(*cut));
    }
    reset_edge_values(*path, roadmap);
    ctx.end_iteration();
  }
}

}  // namespace cutpath
