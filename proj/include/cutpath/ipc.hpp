#pragma once

#include <functional>
#include <optional>
#include <span>

#include "cutpath/oracle.hpp"
#include "cutpath/roadmap.hpp"
#include "cutpath/search.hpp"
#include "cutpath/verdict.hpp"

namespace cutpath {

struct IpcOptions {
  std::size_t paths_per_iteration = 1;
};

// Iterative path and cut finding over the whole roadmap. The roadmap's
// evaluation state is mutated; call clear_evaluations() to reuse it.
Verdict run_ipc(Roadmap& roadmap, const EdgeOracle& oracle, const IpcOptions& options = {});

// Evaluates every UNKNOWN edge of P in order. True iff all of P is FREE.
bool evaluate_path_candidate(const CandidatePath& path, Roadmap& roadmap, const EdgeOracle& oracle,
                             EvaluationLedger& ledger);

// Evaluates every UNKNOWN edge of C. True iff all of C is COLLISION.
bool evaluate_cut_candidate(const CandidateCut& cut, Roadmap& roadmap, const EdgeOracle& oracle,
                            EvaluationLedger& ledger);

// Position of the center of the longest run of COLLISION entries. Ties go
// to the earliest run; even-length runs use the lower middle.
// Throws ContractViolation when there is no COLLISION entry.
std::size_t cut_edge_position(std::span<const EdgeState> statuses);

// Picks the forced edge among the edges of P accepted by `eligible` (all by
// default), sets its capacity to 0 and the capacity of the other eligible
// edges of P to INF. Returns the chosen edge.
EdgeId choose_cut_edge(const CandidatePath& path, Roadmap& roadmap,
                       const std::function<bool(EdgeId)>& eligible = {});

// Re-derives the capacities of P's edges from prior and evaluation state.
void reset_edge_values(const CandidatePath& path, Roadmap& roadmap);

}  // namespace cutpath
