#include "cutpath/baselines.hpp"

#include <deque>
#include <stdexcept>

#include "cutpath/ipc.hpp"
#include "cutpath/search.hpp"

namespace cutpath {

Verdict path_only(Roadmap& roadmap, const EdgeOracle& oracle) {
  detail::RunContext ctx(roadmap, oracle);
  for (;;) {
    ctx.begin_iteration();
    auto path = most_probable_path(roadmap);
    ++ctx.stats().n_path_calls;
    if (!path) return ctx.finish(frontier_cut(roadmap));
    if (evaluate_path_candidate(*path, roadmap, oracle, ctx.ledger()))
      return ctx.finish(std::move(*path));
    ctx.end_iteration();
  }
}

Verdict cut_only(Roadmap& roadmap, const EdgeOracle& oracle) {
  detail::RunContext ctx(roadmap, oracle);
  for (;;) {
    ctx.begin_iteration();
    if (roadmap.start() == roadmap.goal()) return ctx.finish(CandidatePath{{}, {roadmap.start()}, 0.0});
    auto cut = most_probable_cut(roadmap);
    ctx.stats().record_cut_call(roadmap.num_vertices());
    if (!cut) {
      auto path = known_free_path(roadmap);
      if (!path) throw std::logic_error("cut_only: no finite cut but no FREE path");
      return ctx.finish(std::move(*path));
    }
    if (evaluate_cut_candidate(*cut, roadmap, oracle, ctx.ledger())) return ctx.finish(std::move(*cut));
    ctx.end_iteration();
  }
}

Verdict bfs_feasibility(Roadmap& roadmap, const EdgeOracle& oracle) {
  detail::RunContext ctx(roadmap, oracle);
  ctx.begin_iteration();
  const VertexId s = roadmap.start();
  const VertexId g = roadmap.goal();
  std::vector<bool> seen(roadmap.num_vertices(), false);
  std::deque<VertexId> queue{s};
  seen[s] = true;
  bool goal_reached = s == g;
  while (!queue.empty()) {
    if (goal_reached) {
      if (auto path = known_free_path(roadmap)) return ctx.finish(std::move(*path));
    }
    const VertexId u = queue.front();
    queue.pop_front();
    for (const auto& inc : roadmap.incident(u)) {
      if (roadmap.known_status(inc.edge) == EdgeState::kUnknown)
        evaluate_edge(ctx.ledger(), oracle, roadmap, inc.edge);
      if (roadmap.known_status(inc.edge) != EdgeState::kFree || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = true;
      if (inc.neighbor == g) goal_reached = true;
      queue.push_back(inc.neighbor);
    }
  }
  if (goal_reached) {
    if (auto path = known_free_path(roadmap)) return ctx.finish(std::move(*path));
    throw std::logic_error("bfs_feasibility: goal reached but no FREE path");
  }
  return ctx.finish(frontier_cut(roadmap));
}

}  // namespace cutpath
