#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "cutpath/oracle.hpp"
#include "cutpath/roadmap.hpp"
#include "cutpath/search.hpp"
#include "cutpath/verdict.hpp"

namespace cutpath {

using SubgraphId = int;  // 1-based

// Vertex partition into subgraphs. An edge belongs to subgraph k when both
// endpoints are assigned k and it has not appeared in an executed cut.
class SubgraphSet {
 public:
  explicit SubgraphSet(const Roadmap& roadmap);

  int g() const { return static_cast<int>(members_.size()); }
  SubgraphId of(VertexId v) const { return assignment_[v]; }
  const std::vector<SubgraphId>& assignment() const { return assignment_; }
  const std::vector<VertexId>& members(SubgraphId k) const { return members_.at(k - 1); }
  bool removed(EdgeId e) const { return removed_[e]; }
  bool in_subgraph(const Roadmap& roadmap, EdgeId e, SubgraphId k) const;
  std::vector<EdgeId> edge_set(const Roadmap& roadmap, SubgraphId k) const;

  // Moves the given members of k into a new subgraph g+1 and marks the cut
  // edges removed. Returns the new id.
  SubgraphId split(SubgraphId k, std::span<const VertexId> moved, std::span<const EdgeId> cut_edges);

 private:
  std::vector<SubgraphId> assignment_;
  std::vector<bool> removed_;
  std::vector<std::vector<VertexId>> members_;
};

enum class Tau : unsigned char { kSubstart, kSubgoal };
enum class AbstractEdgeKind : unsigned char { kIntraPair, kConfirmedCross, kIntraSameType };

const char* to_string(Tau t);
const char* to_string(AbstractEdgeKind k);

struct AbstractVertex {
  VertexId vertex;  // delta
  SubgraphId subgraph;  // Delta
  Tau tau;
};

struct AbstractEdgeInfo {
  AbstractEdgeKind kind;
  bool confirmed;  // c
};

// Bookkeeping graph over substarts and subgoals. Abstract vertices of the
// same subgraph are pairwise joined by intra edges; confirmed-free cut
// edges join their endpoints across subgraphs.
class AbstractGraph {
 public:
  AbstractGraph(std::size_t num_roadmap_vertices, VertexId start, VertexId goal);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const AbstractVertex& vertex(int a) const { return vertices_.at(a); }
  const std::vector<AbstractVertex>& vertices() const { return vertices_; }
  const std::map<std::pair<int, int>, AbstractEdgeInfo>& edges() const { return edges_; }

  // Abstract index of roadmap vertex v, or -1.
  int find(VertexId v) const { return index_[v]; }
  const AbstractEdgeInfo* edge(int a, int b) const;

  // Adds delta^-1(v) if absent and joins it to every abstract vertex of
  // subgraph k. Returns the index.
  int add_vertex(VertexId v, SubgraphId k, Tau tau);
  void add_cross_edge(int a, int b);
  void confirm(int a, int b);
  // Changes Delta of the given abstract vertices to k, then drops intra
  // edges that now cross subgraphs.
  void move_to(std::span<const int> ids, SubgraphId k);

  bool connected(VertexId s, VertexId t) const;

 private:
  static std::pair<int, int> key(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

  std::vector<AbstractVertex> vertices_;
  std::vector<int> index_;
  std::vector<std::vector<int>> adjacency_;
  std::map<std::pair<int, int>, AbstractEdgeInfo> edges_;
};

AbstractGraph initialize_abstract_graph(const Roadmap& roadmap);

// Marks c = TRUE between abstract vertices joined by a FREE stretch of P
// inside one subgraph. Returns the subgraph id of every vertex of P.
std::vector<SubgraphId> reflect_path_evaluation(const SubgraphSet& subgraphs, AbstractGraph& abstract,
                                                const Roadmap& roadmap, const CandidatePath& path);

// Subgraph holding the longest run of COLLISION edges along P (earliest on
// ties). Throws ContractViolation if P has no COLLISION edge.
SubgraphId choose_subgraph(const Roadmap& roadmap, const CandidatePath& path,
                           std::span<const SubgraphId> subgraph_ids);

struct ClusteredTerminals {
  std::vector<VertexId> substarts;
  std::vector<VertexId> subgoals;
};

// Substarts and subgoals of k, minus those in a confirmed substart-subgoal pair.
ClusteredTerminals cluster_substarts_and_subgoals(SubgraphId k, const AbstractGraph& abstract);

struct LocalCut {
  CandidateCut cut;  // edges are roadmap ids; partition unused
  std::vector<VertexId> sink_side;  // members of k on the dummy-goal side
  std::size_t input_vertices = 0;
};

// Min cut inside subgraph k between a dummy start joined to the substarts
// and a dummy goal joined to the subgoals, both by INF edges.
std::optional<LocalCut> local_cut(const Roadmap& roadmap, const SubgraphSet& subgraphs, SubgraphId k,
                                  const ClusteredTerminals& terminals);

// Splits k along an evaluated local cut and updates the abstract graph.
// Returns the id of the new subgraph.
SubgraphId subgraph_partition(const Roadmap& roadmap, SubgraphSet& subgraphs, AbstractGraph& abstract,
                              SubgraphId k, const LocalCut& cut);

// True iff delta^-1(v_g) is unreachable from delta^-1(v_s).
bool check_cut_existence(const AbstractGraph& abstract, const Roadmap& roadmap);

struct IdpcIterationView {
  std::size_t iteration;
  const Roadmap& roadmap;
  const SubgraphSet& subgraphs;
  const AbstractGraph& abstract;
  bool disconnected;
};

struct IdpcOptions {
  std::size_t paths_per_iteration = 1;
  // One line per iteration: iter k_star cut_size free_in_cut g |V~| |E~|
  // (cut_size is -1 when the cut was skipped).
  std::ostream* trace = nullptr;
  std::function<void(const IdpcIterationView&)> observer;
};

Verdict run_idpc(Roadmap& roadmap, const EdgeOracle& oracle, const IdpcOptions& options = {});

}  // namespace cutpath
