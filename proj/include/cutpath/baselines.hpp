#pragma once

#include "cutpath/oracle.hpp"
#include "cutpath/roadmap.hpp"
#include "cutpath/verdict.hpp"

namespace cutpath {

// Repeated most-probable-path search and evaluation.
Verdict path_only(Roadmap& roadmap, const EdgeOracle& oracle);

// Repeated whole-graph min cut and evaluation. When no finite cut is left,
// a FREE path is recovered by BFS.
Verdict cut_only(Roadmap& roadmap, const EdgeOracle& oracle);

// Outer BFS from the start that evaluates touched edges and expands only
// over FREE edges; an inner BFS over FREE edges confirms connectivity.
Verdict bfs_feasibility(Roadmap& roadmap, const EdgeOracle& oracle);

}  // namespace cutpath
