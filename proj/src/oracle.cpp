#include "cutpath/oracle.hpp"

#include <stdexcept>
#include <string>

namespace cutpath {

EdgeState SceneOracle::evaluate(const Roadmap& roadmap, EdgeId e) const {
  const auto& edge = roadmap.edge(e);
  return evaluate_segment(scene_, roadmap.vertex(edge.u), roadmap.vertex(edge.v));
}

TableOracle::TableOracle(std::vector<EdgeState> truth) : truth_(std::move(truth)) {
  for (auto s : truth_)
    if (s == EdgeState::kUnknown)
      throw std::invalid_argument("TableOracle: truth entries must be FREE or COLLISION");
}

EdgeState TableOracle::evaluate(const Roadmap&, EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= truth_.size())
    throw std::out_of_range("TableOracle: no entry for edge " + std::to_string(e));
  return truth_[e];
}

EdgeState FunctionOracle::evaluate(const Roadmap& roadmap, EdgeId e) const {
  return fn_(roadmap, e);
}

TableOracle tabulate(const EdgeOracle& oracle, const Roadmap& roadmap) {
  std::vector<EdgeState> truth(roadmap.num_edges());
  for (std::size_t e = 0; e < truth.size(); ++e)
    truth[e] = oracle.evaluate(roadmap, static_cast<EdgeId>(e));
  return TableOracle(std::move(truth));
}

EdgeState evaluate_edge(EvaluationLedger& ledger, const EdgeOracle& oracle, Roadmap& roadmap,
                        EdgeId e) {
  if (ledger.statuses.at(e) != EdgeState::kUnknown || roadmap.state(e) != EdgeState::kUnknown)
    throw ContractViolation("evaluate_edge: edge " + std::to_string(e) + " evaluated twice");
  const auto t0 = std::chrono::steady_clock::now();
  const EdgeState status = oracle.evaluate(roadmap, e);
  ledger.oracle_time += std::chrono::steady_clock::now() - t0;
  if (status == EdgeState::kUnknown) throw std::logic_error("oracle returned UNKNOWN");
  ledger.statuses[e] = status;
  ledger.order[e] = static_cast<long>(ledger.n_evaluations);
  ++ledger.n_evaluations;
  roadmap.record_evaluation(e, status);
  return status;
}

}  // namespace cutpath
