#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cutpath/bench.hpp"
#include "cutpath/idpc.hpp"
#include "cutpath/ipc.hpp"

using namespace cutpath;

namespace {

constexpr auto F = EdgeState::kFree;
constexpr auto C = EdgeState::kCollision;

// Two triangles {0,1,2} and {3,4,5} joined by edges 2-3 and 1-4.
Roadmap two_triangles(double p) {
  Roadmap r(2);
  for (int i = 0; i < 6; ++i) r.add_vertex({double(i), 0.0});
  r.add_edge(0, 1, p);  // 0
  r.add_edge(0, 2, p);  // 1
  r.add_edge(1, 2, p);  // 2
  r.add_edge(2, 3, p);  // 3
  r.add_edge(1, 4, p);  // 4
  r.add_edge(3, 4, p);  // 5
  r.add_edge(3, 5, p);  // 6
  r.add_edge(4, 5, p);  // 7
  r.set_query(0, 5);
  return r;
}

}  // namespace

TEST_CASE("initialize_abstract_graph") {
  const Roadmap r = two_triangles(0.5);
  const AbstractGraph a = initialize_abstract_graph(r);
  CHECK(a.num_vertices() == 2);
  CHECK(a.num_edges() == 1);
  const int s = a.find(0);
  const int g = a.find(5);
  CHECK(a.vertex(s).tau == Tau::kSubstart);
  CHECK(a.vertex(g).tau == Tau::kSubgoal);
  CHECK(a.vertex(s).subgraph == 1);
  CHECK(a.vertex(g).subgraph == 1);
  const auto* e = a.edge(s, g);
  REQUIRE(e);
  CHECK(e->kind == AbstractEdgeKind::kIntraPair);
  CHECK_FALSE(e->confirmed);
  CHECK_FALSE(check_cut_existence(a, r));
}

TEST_CASE("reflect_path_evaluation in a single subgraph") {
  Roadmap r = two_triangles(1.0);
  const SubgraphSet sg(r);
  AbstractGraph a = initialize_abstract_graph(r);
  const CandidatePath p{{1, 3, 6}, {0, 2, 3, 5}, 0.0};
  const auto ids = reflect_path_evaluation(sg, a, r, p);
  CHECK(ids == std::vector<SubgraphId>{1, 1, 1, 1});
  CHECK(a.edge(a.find(0), a.find(5))->confirmed);
}

TEST_CASE("reflect_path_evaluation: collision blocks confirmation") {
  Roadmap r = two_triangles(0.5);
  r.record_evaluation(1, F);
  r.record_evaluation(3, C);
  r.record_evaluation(6, F);
  const SubgraphSet sg(r);
  AbstractGraph a = initialize_abstract_graph(r);
  reflect_path_evaluation(sg, a, r, {{1, 3, 6}, {0, 2, 3, 5}, 0.0});
  CHECK_FALSE(a.edge(a.find(0), a.find(5))->confirmed);
}

TEST_CASE("choose_subgraph rule") {
  Roadmap r(2);
  for (int i = 0; i < 9; ++i) r.add_vertex({double(i), 0.0});
  for (int i = 0; i < 8; ++i) r.add_edge(i, i + 1, 0.5);
  r.set_query(0, 8);
  // Along the path: subgraph 1 for vertices 0..3, 3 for 4..8.
  const std::vector<SubgraphId> ids{1, 1, 1, 1, 3, 3, 3, 3, 3};
  SUBCASE("longest run wins") {
    for (EdgeId e : {0, 1, 2}) r.record_evaluation(e, C);
    r.record_evaluation(3, F);
    for (EdgeId e : {5, 6}) r.record_evaluation(e, C);
    CHECK(choose_subgraph(r, {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7, 8}, 0.0}, ids) == 1);
  }
  SUBCASE("earliest wins on ties") {
    for (EdgeId e : {1, 2}) r.record_evaluation(e, C);
    r.record_evaluation(3, F);
    for (EdgeId e : {5, 6}) r.record_evaluation(e, C);
    CHECK(choose_subgraph(r, {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7, 8}, 0.0}, ids) == 1);
  }
  SUBCASE("only one subgraph has collisions") {
    r.record_evaluation(6, C);
    CHECK(choose_subgraph(r, {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7, 8}, 0.0}, ids) == 3);
  }
  SUBCASE("no collision") {
    CHECK_THROWS_AS(choose_subgraph(r, {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7, 8}, 0.0}, ids),
                    ContractViolation);
  }
}

TEST_CASE("local cut on the whole graph equals the global cut") {
  Roadmap r = two_triangles(0.5);
  r.set_prior(3, 0.2);
  r.set_prior(4, 0.3);
  const SubgraphSet sg(r);
  const AbstractGraph a = initialize_abstract_graph(r);
  const auto terms = cluster_substarts_and_subgoals(1, a);
  CHECK(terms.substarts == std::vector<VertexId>{0});
  CHECK(terms.subgoals == std::vector<VertexId>{5});
  const auto local = local_cut(r, sg, 1, terms);
  const auto global = most_probable_cut(r);
  REQUIRE(local);
  REQUIRE(global);
  CHECK(local->input_vertices == r.num_vertices() + 2);
  auto le = local->cut.edges;
  std::sort(le.begin(), le.end());
  CHECK(le == global->edges);
  CHECK(le == std::vector<EdgeId>{3, 4});
  CHECK(local->sink_side == std::vector<VertexId>{3, 4, 5});
}

TEST_CASE("subgraph_partition and abstract graph updates") {
  Roadmap r = two_triangles(0.5);
  r.record_evaluation(3, C);
  r.record_evaluation(4, F);
  SubgraphSet sg(r);
  AbstractGraph a = initialize_abstract_graph(r);
  LocalCut cut;
  cut.cut.edges = {3, 4};
  cut.sink_side = {3, 4, 5};
  const SubgraphId k2 = subgraph_partition(r, sg, a, 1, cut);
  CHECK(k2 == 2);
  CHECK(sg.g() == 2);
  CHECK(sg.edge_set(r, 1) == std::vector<EdgeId>{0, 1, 2});
  CHECK(sg.edge_set(r, 2) == std::vector<EdgeId>{5, 6, 7});
  CHECK(sg.removed(3));
  CHECK(sg.removed(4));
  // New abstract vertices for the FREE cut edge 1-4.
  REQUIRE(a.find(1) >= 0);
  REQUIRE(a.find(4) >= 0);
  CHECK(a.vertex(a.find(1)).tau == Tau::kSubgoal);
  CHECK(a.vertex(a.find(4)).tau == Tau::kSubstart);
  CHECK(a.vertex(a.find(4)).subgraph == 2);
  CHECK(a.vertex(a.find(5)).subgraph == 2);
  CHECK(a.edge(a.find(0), a.find(5)) == nullptr);
  CHECK(a.edge(a.find(1), a.find(4))->kind == AbstractEdgeKind::kConfirmedCross);
  CHECK(a.edge(a.find(0), a.find(1))->kind == AbstractEdgeKind::kIntraPair);
  CHECK(a.edge(a.find(4), a.find(5))->kind == AbstractEdgeKind::kIntraPair);
  CHECK(a.num_vertices() == 4);
  CHECK_FALSE(check_cut_existence(a, r));

  // Adding an existing endpoint does not duplicate it.
  CHECK(a.add_vertex(4, 2, Tau::kSubgoal) == a.find(4));
  CHECK(a.num_vertices() == 4);
}

TEST_CASE("all-collision local cut disconnects the abstract graph") {
  Roadmap r = two_triangles(0.5);
  r.record_evaluation(3, C);
  r.record_evaluation(4, C);
  SubgraphSet sg(r);
  AbstractGraph a = initialize_abstract_graph(r);
  LocalCut cut;
  cut.cut.edges = {3, 4};
  cut.sink_side = {3, 4, 5};
  subgraph_partition(r, sg, a, 1, cut);
  CHECK(check_cut_existence(a, r));
}

TEST_CASE("cluster drops confirmed pairs") {
  AbstractGraph a(10, 0, 9);
  const int s2 = a.add_vertex(2, 1, Tau::kSubstart);
  const int g4 = a.add_vertex(4, 1, Tau::kSubgoal);
  auto t = cluster_substarts_and_subgoals(1, a);
  CHECK(t.substarts.size() == 2);
  CHECK(t.subgoals.size() == 2);
  a.confirm(s2, g4);
  t = cluster_substarts_and_subgoals(1, a);
  CHECK(t.substarts == std::vector<VertexId>{0});
  CHECK(t.subgoals == std::vector<VertexId>{9});
  a.confirm(a.find(0), a.find(9));
  t = cluster_substarts_and_subgoals(1, a);
  CHECK(t.substarts.empty());
  CHECK(t.subgoals.empty());
}

TEST_CASE("run_idpc on small cases") {
  SUBCASE("perfect prior") {
    Roadmap r = two_triangles(1.0);
    const Verdict v = run_idpc(r, TableOracle(std::vector<EdgeState>(8, F)));
    CHECK(v.feasible());
    CHECK(v.stats.n_evaluations == 0);
    CHECK(v.stats.n_iterations == 1);
  }
  SUBCASE("bottleneck in collision") {
    Roadmap r = two_triangles(0.6);
    const std::vector<EdgeState> truth{F, F, F, C, C, F, F, F};
    std::ostringstream trace;
    IdpcOptions o;
    o.trace = &trace;
    const Verdict v = run_idpc(r, TableOracle(truth), o);
    CHECK_FALSE(v.feasible());
    CHECK(certificate_error(r, v, truth).empty());
    CHECK_FALSE(trace.str().empty());
  }
}

TEST_CASE("run_idpc agrees with run_ipc on generated instances") {
  bench::BenchConfig cfg;
  cfg.scenes = {"rooms", "clutter"};
  cfg.n_edges = {200, 500};
  cfg.seeds = {4, 5};
  for (const auto& inst : bench::generate_instances(cfg)) {
    CAPTURE(inst.id);
    Roadmap a = inst.roadmap;
    Roadmap b = inst.roadmap;
    const TableOracle oracle(inst.truth);
    std::size_t views = 0;
    IdpcOptions o;
    o.observer = [&](const IdpcIterationView& view) {
      ++views;
      if (view.disconnected) CHECK_FALSE(inst.ground_truth_feasible);
    };
    const Verdict vi = run_idpc(a, oracle, o);
    const Verdict vp = run_ipc(b, oracle);
    CHECK(vi.feasible() == vp.feasible());
    CHECK(vi.feasible() == inst.ground_truth_feasible);
    CHECK(certificate_error(inst.roadmap, vi, inst.truth).empty());
    CHECK(vi.stats.stalled_iterations == 0);
    CHECK(vi.stats.max_cut_input_vertices <= inst.roadmap.num_vertices() + 2);
  }
}
