#include "cutpath/idpc.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "cutpath/ipc.hpp"

namespace cutpath {

SubgraphSet::SubgraphSet(const Roadmap& roadmap)
    : assignment_(roadmap.num_vertices(), 1), removed_(roadmap.num_edges(), false) {
  members_.emplace_back();
  for (std::size_t v = 0; v < roadmap.num_vertices(); ++v)
    members_[0].push_back(static_cast<VertexId>(v));
}

bool SubgraphSet::in_subgraph(const Roadmap& roadmap, EdgeId e, SubgraphId k) const {
  const auto& ed = roadmap.edge(e);
  return !removed_[e] && assignment_[ed.u] == k && assignment_[ed.v] == k;
}

std::vector<EdgeId> SubgraphSet::edge_set(const Roadmap& roadmap, SubgraphId k) const {
  std::vector<EdgeId> out;
  for (VertexId u : members(k))
    for (const auto& inc : roadmap.incident(u))
      if (u == roadmap.edge(inc.edge).u && in_subgraph(roadmap, inc.edge, k)) out.push_back(inc.edge);
  std::sort(out.begin(), out.end());
  return out;
}

SubgraphId SubgraphSet::split(SubgraphId k, std::span<const VertexId> moved,
                              std::span<const EdgeId> cut_edges) {
  const SubgraphId fresh = g() + 1;
  for (VertexId v : moved) {
    if (assignment_.at(v) != k) throw std::logic_error("SubgraphSet::split: vertex outside k");
    assignment_[v] = fresh;
  }
  auto& old = members_.at(k - 1);
  std::erase_if(old, [&](VertexId v) { return assignment_[v] == fresh; });
  members_.emplace_back(moved.begin(), moved.end());
  std::sort(members_.back().begin(), members_.back().end());
  for (EdgeId e : cut_edges) removed_.at(e) = true;
  return fresh;
}

const char* to_string(Tau t) { return t == Tau::kSubstart ? "SUBSTART" : "SUBGOAL"; }

const char* to_string(AbstractEdgeKind k) {
  switch (k) {
    case AbstractEdgeKind::kIntraPair: return "INTRA_PAIR";
    case AbstractEdgeKind::kConfirmedCross: return "CONFIRMED_CROSS";
    case AbstractEdgeKind::kIntraSameType: return "INTRA_SAME_TYPE";
  }
  return "?";
}

AbstractGraph::AbstractGraph(std::size_t num_roadmap_vertices, VertexId start, VertexId goal)
    : index_(num_roadmap_vertices, -1) {
  if (start == goal) throw std::invalid_argument("AbstractGraph: start equals goal");
  add_vertex(start, 1, Tau::kSubstart);
  add_vertex(goal, 1, Tau::kSubgoal);
}

const AbstractEdgeInfo* AbstractGraph::edge(int a, int b) const {
  const auto it = edges_.find(key(a, b));
  return it == edges_.end() ? nullptr : &it->second;
}

int AbstractGraph::add_vertex(VertexId v, SubgraphId k, Tau tau) {
  if (index_.at(v) >= 0) return index_[v];
  const int a = static_cast<int>(vertices_.size());
  vertices_.push_back({v, k, tau});
  adjacency_.emplace_back();
  index_[v] = a;
  for (int b = 0; b < a; ++b) {
    if (vertices_[b].subgraph != k) continue;
    const auto kind =
        vertices_[b].tau == tau ? AbstractEdgeKind::kIntraSameType : AbstractEdgeKind::kIntraPair;
    edges_.emplace(key(a, b), AbstractEdgeInfo{kind, false});
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  return a;
}

void AbstractGraph::add_cross_edge(int a, int b) {
  if (vertices_.at(a).subgraph == vertices_.at(b).subgraph)
    throw std::logic_error("AbstractGraph: cross edge inside one subgraph");
  const auto [it, inserted] =
      edges_.insert_or_assign(key(a, b), AbstractEdgeInfo{AbstractEdgeKind::kConfirmedCross, true});
  if (inserted) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
}

void AbstractGraph::confirm(int a, int b) {
  const auto it = edges_.find(key(a, b));
  if (it == edges_.end()) throw std::logic_error("AbstractGraph::confirm: no such edge");
  it->second.confirmed = true;
}

void AbstractGraph::move_to(std::span<const int> ids, SubgraphId k) {
  for (int a : ids) vertices_.at(a).subgraph = k;
  for (int a : ids) {
    std::erase_if(adjacency_[a], [&](int b) {
      if (vertices_[b].subgraph == k) return false;
      const auto it = edges_.find(key(a, b));
      if (it->second.kind == AbstractEdgeKind::kConfirmedCross) return false;
      edges_.erase(it);
      std::erase(adjacency_[b], a);
      return true;
    });
  }
}

bool AbstractGraph::connected(VertexId s, VertexId t) const {
  const int as = find(s);
  const int at = find(t);
  if (as < 0 || at < 0) throw std::logic_error("AbstractGraph::connected: terminal missing");
  std::vector<bool> seen(vertices_.size(), false);
  std::deque<int> queue{as};
  seen[as] = true;
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    if (a == at) return true;
    for (int b : adjacency_[a])
      if (!seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
  }
  return false;
}

AbstractGraph initialize_abstract_graph(const Roadmap& roadmap) {
  if (!roadmap.has_query()) throw std::invalid_argument("initialize_abstract_graph: no query");
  return AbstractGraph(roadmap.num_vertices(), roadmap.start(), roadmap.goal());
}

std::vector<SubgraphId> reflect_path_evaluation(const SubgraphSet& subgraphs, AbstractGraph& abstract,
                                                const Roadmap& roadmap, const CandidatePath& path) {
  std::vector<SubgraphId> ids;
  ids.reserve(path.vertices.size());
  for (VertexId v : path.vertices) {
    const SubgraphId k = subgraphs.of(v);
    if (k < 1 || k > subgraphs.g()) throw std::logic_error("reflect_path_evaluation: unassigned vertex");
    ids.push_back(k);
  }

  std::vector<int> run;
  auto flush = [&] {
    for (std::size_t i = 0; i < run.size(); ++i)
      for (std::size_t j = i + 1; j < run.size(); ++j) abstract.confirm(run[i], run[j]);
    run.clear();
  };
  auto note = [&](VertexId v) {
    const int a = abstract.find(v);
    if (a >= 0) run.push_back(a);
  };
  note(path.vertices.front());
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const bool same = ids[i] == ids[i + 1];
    if (!same || roadmap.known_status(path.edges[i]) != EdgeState::kFree) flush();
    note(path.vertices[i + 1]);
  }
  flush();
  return ids;
}

SubgraphId choose_subgraph(const Roadmap& roadmap, const CandidatePath& path,
                           std::span<const SubgraphId> subgraph_ids) {
  if (subgraph_ids.size() != path.vertices.size())
    throw std::invalid_argument("choose_subgraph: subgraph id count mismatch");
  std::size_t best_len = 0;
  SubgraphId best = 0;
  for (std::size_t i = 0; i < path.edges.size();) {
    if (roadmap.known_status(path.edges[i]) != EdgeState::kCollision) {
      ++i;
      continue;
    }
    const SubgraphId k = subgraph_ids[i];
    std::size_t j = i;
    while (j < path.edges.size() && roadmap.known_status(path.edges[j]) == EdgeState::kCollision &&
           subgraph_ids[j] == k && subgraph_ids[j + 1] == k)
      ++j;
    if (j == i) throw std::logic_error("choose_subgraph: collision edge crosses subgraphs");
    if (j - i > best_len) {
      best_len = j - i;
      best = k;
    }
    i = j;
  }
  if (best_len == 0) throw ContractViolation("choose_subgraph: path has no collision edge");
  return best;
}

ClusteredTerminals cluster_substarts_and_subgoals(SubgraphId k, const AbstractGraph& abstract) {
  std::vector<int> starts, goals;
  for (int a = 0; a < static_cast<int>(abstract.num_vertices()); ++a) {
    const auto& av = abstract.vertex(a);
    if (av.subgraph != k) continue;
    (av.tau == Tau::kSubstart ? starts : goals).push_back(a);
  }
  std::vector<bool> drop(abstract.num_vertices(), false);
  for (int s : starts)
    for (int t : goals) {
      const auto* info = abstract.edge(s, t);
      if (info && info->confirmed) drop[s] = drop[t] = true;
    }
  ClusteredTerminals out;
  for (int s : starts)
    if (!drop[s]) out.substarts.push_back(abstract.vertex(s).vertex);
  for (int t : goals)
    if (!drop[t]) out.subgoals.push_back(abstract.vertex(t).vertex);
  return out;
}

std::optional<LocalCut> local_cut(const Roadmap& roadmap, const SubgraphSet& subgraphs, SubgraphId k,
                                  const ClusteredTerminals& terminals) {
  if (terminals.substarts.empty() || terminals.subgoals.empty())
    throw std::invalid_argument("local_cut: empty terminal set");
  const auto& members = subgraphs.members(k);
  const int m = static_cast<int>(members.size());
  std::vector<int> local(roadmap.num_vertices(), -1);
  for (int i = 0; i < m; ++i) local[members[i]] = i;

  std::vector<Edge> edges;
  std::vector<ExtValue> caps;
  std::vector<EdgeId> ids;
  for (EdgeId e : subgraphs.edge_set(roadmap, k)) {
    const auto& ed = roadmap.edge(e);
    edges.push_back({local[ed.u], local[ed.v]});
    caps.push_back(roadmap.capacity(e));
    ids.push_back(e);
  }
  const VertexId dummy_start = m;
  const VertexId dummy_goal = m + 1;
  for (VertexId v : terminals.substarts) {
    edges.push_back({dummy_start, local.at(v)});
    caps.push_back(ExtValue::inf());
  }
  for (VertexId v : terminals.subgoals) {
    edges.push_back({local.at(v), dummy_goal});
    caps.push_back(ExtValue::inf());
  }

  auto cut = most_probable_cut(static_cast<std::size_t>(m) + 2, edges, caps,
                               std::span<const VertexId>(&dummy_start, 1),
                               std::span<const VertexId>(&dummy_goal, 1));
  if (!cut) return std::nullopt;
  LocalCut out;
  out.input_vertices = static_cast<std::size_t>(m) + 2;
  out.cut.total_capacity = cut->total_capacity;
  out.cut.flow_value = cut->flow_value;
  for (EdgeId le : cut->edges) out.cut.edges.push_back(ids.at(le));
  for (int i = 0; i < m; ++i)
    if (cut->partition[i] == Side::kSink) out.sink_side.push_back(members[i]);
  return out;
}

SubgraphId subgraph_partition(const Roadmap& roadmap, SubgraphSet& subgraphs, AbstractGraph& abstract,
                              SubgraphId k, const LocalCut& cut) {
  const SubgraphId fresh = subgraphs.split(k, cut.sink_side, cut.cut.edges);

  std::vector<int> moved;
  for (VertexId v : cut.sink_side)
    if (const int a = abstract.find(v); a >= 0) moved.push_back(a);
  abstract.move_to(moved, fresh);

  for (EdgeId e : cut.cut.edges) {
    if (roadmap.known_status(e) != EdgeState::kFree) continue;
    const auto& ed = roadmap.edge(e);
    VertexId src = ed.u, dst = ed.v;
    if (subgraphs.of(src) == fresh) std::swap(src, dst);
    if (subgraphs.of(src) != k || subgraphs.of(dst) != fresh)
      throw std::logic_error("subgraph_partition: cut edge does not cross the split");
    const int a = abstract.add_vertex(src, k, Tau::kSubgoal);
    const int b = abstract.add_vertex(dst, fresh, Tau::kSubstart);
    abstract.add_cross_edge(a, b);
  }
  return fresh;
}

bool check_cut_existence(const AbstractGraph& abstract, const Roadmap& roadmap) {
  return !abstract.connected(roadmap.start(), roadmap.goal());
}

Verdict run_idpc(Roadmap& roadmap, const EdgeOracle& oracle, const IdpcOptions& options) {
  if (options.paths_per_iteration < 1)
    throw std::invalid_argument("run_idpc: paths_per_iteration must be >= 1");
  detail::RunContext ctx(roadmap, oracle);
  auto& stats = ctx.stats();
  if (roadmap.start() == roadmap.goal()) {
    ctx.begin_iteration();
    return ctx.finish(CandidatePath{{}, {roadmap.start()}, 0.0});
  }

  SubgraphSet subgraphs(roadmap);
  AbstractGraph abstract = initialize_abstract_graph(roadmap);

  for (;;) {
    ctx.begin_iteration();
    CandidatePath path;
    std::vector<SubgraphId> ids;
    for (std::size_t round = 0; round < options.paths_per_iteration; ++round) {
      auto next = most_probable_path(roadmap);
      ++stats.n_path_calls;
      if (!next) return ctx.finish(frontier_cut(roadmap));
      path = std::move(*next);
      const bool free = evaluate_path_candidate(path, roadmap, oracle, ctx.ledger());
      ids = reflect_path_evaluation(subgraphs, abstract, roadmap, path);
      if (free) return ctx.finish(std::move(path));
    }

    const SubgraphId k = choose_subgraph(roadmap, path, ids);
    const auto terminals = cluster_substarts_and_subgoals(k, abstract);
    long cut_size = -1;
    long free_in_cut = 0;
    bool disconnected = false;
    if (!terminals.substarts.empty() && !terminals.subgoals.empty()) {
      choose_cut_edge(path, roadmap,
                      [&](EdgeId e) { return subgraphs.in_subgraph(roadmap, e, k); });
      auto cut = local_cut(roadmap, subgraphs, k, terminals);
      stats.record_cut_call(subgraphs.members(k).size() + 2);
      if (cut) {
        evaluate_cut_candidate(cut->cut, roadmap, oracle, ctx.ledger());
        cut_size = static_cast<long>(cut->cut.edges.size());
        for (EdgeId e : cut->cut.edges)
          if (roadmap.known_status(e) == EdgeState::kFree) ++free_in_cut;
        subgraph_partition(roadmap, subgraphs, abstract, k, *cut);
        disconnected = check_cut_existence(abstract, roadmap);
      }
      reset_edge_values(path, roadmap);
    }

    if (options.trace)
      *options.trace << stats.n_iterations << ' ' << k << ' ' << cut_size << ' ' << free_in_cut << ' '
                     << subgraphs.g() << ' ' << abstract.num_vertices() << ' '
                     << abstract.num_edges() << '\n';
    if (options.observer)
      options.observer(IdpcIterationView{stats.n_iterations, roadmap, subgraphs, abstract, disconnected});
    if (disconnected) return ctx.finish(frontier_cut(roadmap));
    ctx.end_iteration();
  }
}

}  // namespace cutpath
