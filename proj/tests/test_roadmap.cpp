#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cutpath/roadmap.hpp"

using namespace cutpath;

TEST_CASE("ExtValue arithmetic and ordering") {
  const auto inf = ExtValue::inf();
  const auto one = ExtValue::finite(1.0);
  CHECK(inf > one);
  CHECK(inf > ExtValue::finite(1e300));
  CHECK((inf + one).is_inf());
  CHECK((one + one).value() == 2.0);
  CHECK(ExtValue::zero() < one);
  CHECK_THROWS_AS(ExtValue::finite(-1.0), std::domain_error);
  CHECK_THROWS_AS(ExtValue::finite(INFINITY), std::domain_error);
  CHECK_THROWS(inf.value());
}

TEST_CASE("weight and capacity transforms") {
  CHECK(weight_from_prob(1.0) == ExtValue::zero());
  CHECK(weight_from_prob(0.0).is_inf());
  CHECK(weight_from_prob(0.5).value() == doctest::Approx(0.6931471805599453).epsilon(1e-15));
  CHECK(capacity_from_prob(0.0) == ExtValue::zero());
  CHECK(capacity_from_prob(1.0).is_inf());
  CHECK(capacity_from_prob(0.5).value() == doctest::Approx(0.6931471805599453).epsilon(1e-15));
  CHECK_THROWS_AS(weight_from_prob(-0.1), std::domain_error);
  CHECK_THROWS_AS(capacity_from_prob(1.1), std::domain_error);
}

TEST_CASE("argmax preservation of log transforms") {
  // Products of p and sums of p_w order paths identically.
  const double a[] = {0.9, 0.9};
  const double b[] = {0.5};
  const double wa = weight_from_prob(a[0]).value() + weight_from_prob(a[1]).value();
  const double wb = weight_from_prob(b[0]).value();
  CHECK((wa < wb) == (a[0] * a[1] > b[0]));
}

TEST_CASE("roadmap structure and derived values") {
  Roadmap r(2);
  const auto a = r.add_vertex({0.0, 0.0});
  const auto b = r.add_vertex({1.0, 0.0});
  const auto c = r.add_vertex({2.0, 0.0});
  const auto e0 = r.add_edge(b, a, 0.6);
  const auto e1 = r.add_edge(b, c, 0.35);
  const auto e2 = r.add_edge(a, c, 1.0);
  CHECK(r.edge(e0).u == a);
  CHECK(r.edge(e0).v == b);
  CHECK_THROWS(r.add_edge(a, a, 0.5));
  CHECK_THROWS(r.add_edge(a, b, 0.5));
  CHECK(r.find_edge(c, b) == e1);
  CHECK(r.known_status(e2) == EdgeState::kFree);
  CHECK(r.weight(e2) == ExtValue::zero());
  CHECK(r.capacity(e2).is_inf());

  SUBCASE("FREE evaluation") {
    r.record_evaluation(e0, EdgeState::kFree);
    CHECK(r.weight(e0) == ExtValue::zero());
    CHECK(r.capacity(e0).is_inf());
    CHECK(r.state(e0) == EdgeState::kFree);
    CHECK_THROWS_AS(r.record_evaluation(e0, EdgeState::kFree), ContractViolation);
  }
  SUBCASE("COLLISION evaluation") {
    r.record_evaluation(e1, EdgeState::kCollision);
    CHECK(r.weight(e1).is_inf());
    CHECK(r.capacity(e1) == ExtValue::zero());
  }
  SUBCASE("capacity override and restore") {
    r.set_capacity(e0, ExtValue::inf());
    r.restore_capacity(e0);
    CHECK(r.capacity(e0).value() == doctest::Approx(std::log(1.0 / 0.4)));
  }
  SUBCASE("clear_evaluations") {
    r.record_evaluation(e0, EdgeState::kCollision);
    r.clear_evaluations();
    CHECK(r.state(e0) == EdgeState::kUnknown);
    CHECK(r.weight(e0).value() == doctest::Approx(std::log(1.0 / 0.6)));
  }
}

TEST_CASE("transform consistency for known edges") {
  Roadmap r(2);
  for (int i = 0; i < 4; ++i) r.add_vertex({double(i), 0.0});
  r.add_edge(0, 1, 0.0);
  r.add_edge(1, 2, 1.0);
  r.add_edge(2, 3, 0.4);
  r.record_evaluation(2, EdgeState::kFree);
  for (EdgeId e = 0; e < 3; ++e) {
    const auto w = r.weight(e);
    const auto c = r.capacity(e);
    CHECK(w.is_inf() != c.is_inf());
    CHECK((w.is_inf() ? c : w) == ExtValue::zero());
  }
}

TEST_CASE("configuration rejects non-finite coordinates") {
  CHECK_THROWS(Configuration({0.0, NAN}));
  CHECK(Configuration({1.0, 2.0}).dim() == 2);
}

namespace {

SegmentChecker free_unless_crossing_x(double wall) {
  return [wall](const Configuration& a, const Configuration& b) {
    return (a[0] - wall) * (b[0] - wall) <= 0.0 ? EdgeState::kCollision : EdgeState::kFree;
  };
}

}  // namespace

TEST_CASE("attach_query") {
  Roadmap r(2);
  r.add_vertex({0.0, 0.0});
  r.add_vertex({1.0, 0.0});
  r.add_edge(0, 1, 0.5);
  const auto checker = [](const Configuration&, const Configuration&) { return EdgeState::kFree; };

  SUBCASE("zero-distance match reuses the vertex") {
    attach_query(r, {0.0, 0.0}, {1.0, 0.0}, checker);
    CHECK(r.start() == 0);
    CHECK(r.goal() == 1);
    CHECK(r.num_edges() == 1);
  }
  SUBCASE("new vertex linked with p = 1") {
    attach_query(r, {0.1, 0.1}, {1.0, 0.0}, checker);
    CHECK(r.start() == 2);
    const auto e = r.find_edge(2, 0);
    REQUIRE(e);
    CHECK(r.prior(*e) == 1.0);
    CHECK(r.weight(*e) == ExtValue::zero());
    CHECK(r.capacity(*e).is_inf());
  }
  SUBCASE("nearest blocked, next candidate used") {
    attach_query(r, {0.45, 0.0}, {1.0, 0.0}, free_unless_crossing_x(0.2));
    CHECK(r.find_edge(2, 1).has_value());
    CHECK_FALSE(r.find_edge(2, 0).has_value());
  }
  SUBCASE("enclosed start is not embeddable") {
    const auto blocked = [](const Configuration&, const Configuration&) { return EdgeState::kCollision; };
    CHECK_THROWS_AS(attach_query(r, {0.5, 0.5}, {1.0, 0.0}, blocked), QueryNotEmbeddable);
  }
}

TEST_CASE("roadmap text round trip") {
  Roadmap r(2);
  r.add_vertex({0.125, 1.0 / 3.0});
  r.add_vertex({2.0, -1.5});
  r.add_vertex({0.0, 0.0});
  r.add_edge(0, 1, 0.3);
  r.add_edge(1, 2, 1.0 / 7.0);
  std::stringstream ss;
  write_roadmap(ss, r);
  const Roadmap back = read_roadmap(ss);
  REQUIRE(back.num_vertices() == 3);
  REQUIRE(back.num_edges() == 2);
  CHECK(back.vertex(0) == r.vertex(0));
  CHECK(back.prior(1) == r.prior(1));
}

TEST_CASE("roadmap parse errors carry line numbers") {
  auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return read_roadmap(is);
  };
  CHECK_THROWS_AS(parse("dim 2 vertices 1 edges 0\n0\n"), ParseError);
  try {
    parse("dim 2 vertices 2 edges 1\n0 0\n1 1\n0 1 1.5\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse("dim 2 vertices 2 edges 1\n0 0\n1 1\n1 0 0.5\n"), ParseError);
}
