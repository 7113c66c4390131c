#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <vector>

#include "cutpath/geometry.hpp"
#include "cutpath/roadmap.hpp"

namespace cutpath {

// Ground-truth edge evaluation. Implementations are immutable after
// construction and may be shared between threads.
class EdgeOracle {
 public:
  virtual ~EdgeOracle() = default;
  // Returns FREE or COLLISION for edge `e` of `roadmap`.
  virtual EdgeState evaluate(const Roadmap& roadmap, EdgeId e) const = 0;
};

// Collision-checks the straight segment between the edge endpoints.
class SceneOracle final : public EdgeOracle {
 public:
  explicit SceneOracle(Scene scene) : scene_(std::move(scene)) { validate_scene(scene_); }
  EdgeState evaluate(const Roadmap& roadmap, EdgeId e) const override;
  const Scene& scene() const { return scene_; }

 private:
  Scene scene_;
};

// Precomputed truth indexed by edge id. Lookups only.
class TableOracle final : public EdgeOracle {
 public:
  explicit TableOracle(std::vector<EdgeState> truth);
  EdgeState evaluate(const Roadmap& roadmap, EdgeId e) const override;
  const std::vector<EdgeState>& truth() const { return truth_; }

 private:
  std::vector<EdgeState> truth_;
};

// Adapts any callable.
class FunctionOracle final : public EdgeOracle {
 public:
  using Fn = std::function<EdgeState(const Roadmap&, EdgeId)>;
  explicit FunctionOracle(Fn fn) : fn_(std::move(fn)) {}
  EdgeState evaluate(const Roadmap& roadmap, EdgeId e) const override;

 private:
  Fn fn_;
};

// Builds a table oracle by evaluating every roadmap edge once.
TableOracle tabulate(const EdgeOracle& oracle, const Roadmap& roadmap);

// Record of revealed statuses for one run. order[e] is the position of e in
// the evaluation sequence, or -1.
struct EvaluationLedger {
  explicit EvaluationLedger(std::size_t num_edges)
      : statuses(num_edges, EdgeState::kUnknown), order(num_edges, -1) {}

  std::vector<EdgeState> statuses;
  std::vector<long> order;
  std::size_t n_evaluations = 0;
  std::chrono::nanoseconds oracle_time{0};
};

// Queries the oracle once, records the result in the ledger and the roadmap.
// Throws ContractViolation if the edge is already evaluated.
EdgeState evaluate_edge(EvaluationLedger& ledger, const EdgeOracle& oracle, Roadmap& roadmap,
                        EdgeId e);

}  // namespace cutpath
