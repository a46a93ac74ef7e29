#include <random>

#include "doctest.h"
#include "macmahon/graphs.hpp"
#include "macmahon/reports.hpp"
#include "oracles.hpp"

using namespace macmahon;

namespace {

VectorPartition vp(const std::vector<Vec>& parts) { return VectorPartition::canonicalize(2, parts); }

// T1 vertices r s t u v = 0..4
const Edge rs{0, 1}, st{1, 2}, tu{2, 3}, uv{3, 4};

std::uint64_t complement(std::uint64_t mask, std::size_t n) { return ~mask & ((std::uint64_t{1} << n) - 1); }

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(WeightedGraph(1, {{1}, {1}}, {{0, 0}}), Error);
  CHECK_THROWS_AS(WeightedGraph(1, {{1}, {1}}, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(WeightedGraph(1, {{1}, {0}}, {}), Error);
  CHECK_THROWS_AS(WeightedGraph(1, {{1}, {1, 2}}, {}), Error);
  CHECK_THROWS_AS(WeightedGraph(1, {{1}}, {{0, 1}}), Error);
  CHECK_THROWS_AS(WeightedGraph(0, {}, {}), Error);
  const WeightedGraph g(1, {{2}, {3}}, {{1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
  CHECK(g.total_weight() == Vec{5});
}

TEST_CASE("components of T1") {
  const auto t1 = counterexample_t1();
  CHECK(components(t1, {}).components.size() == 5);
  const std::vector<Edge> s{rs, tu};
  const auto d = components(t1, s);
  REQUIRE(d.components.size() == 3);
  CHECK(d.components[0].vertices == std::vector<Vertex>{0, 1});
  CHECK(d.components[1].vertices == std::vector<Vertex>{2, 3});
  CHECK(d.components[2].vertices == std::vector<Vertex>{4});
  CHECK(components(t1, t1.edges()).components.size() == 1);
  const std::vector<Edge> bad{{0, 2}};
  CHECK_THROWS_AS(components(t1, bad), Error);
}

TEST_CASE("bitype examples") {
  const WeightedGraph single(1, {{3}}, {});
  CHECK(bitype(single, {}) == vp({{1, 3}}));
  const auto t1 = counterexample_t1();
  const std::vector<Edge> s{rs, tu};
  CHECK(bitype(t1, s) == vp({{2, 5}, {2, 3}, {1, 1}}));
  CHECK(bitype(t1, t1.edges()) == vp({{5, 9}}));
  CHECK(bitype_of_mask(t1, 0b0101) == vp({{2, 5}, {2, 3}, {1, 1}}));
}

TEST_CASE("bitype parts sum to (n, wt) and forests lose one part per edge") {
  for (const auto& g : oracle::corpus(6, 60, 3)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
      const auto b = bitype_of_mask(g, mask);
      CHECK(b.grade() == Vec{static_cast<std::int64_t>(g.vertex_count()), g.total_weight()[0]});
      CHECK(b == VectorPartition::canonicalize(2, oracle::component_parts(g, mask)));
      std::vector<Edge> subset;
      for (std::size_t i = 0; i < g.edge_count(); ++i)
        if ((mask >> i) & 1u) subset.push_back(g.edges()[i]);
      if (is_forest(WeightedGraph(1, g.weights(), subset)))
        CHECK(b.length() == g.vertex_count() - subset.size());
    }
  }
}

TEST_CASE("induced subgraphs") {
  const auto t1 = counterexample_t1();
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  CHECK(induced(t1, all) == t1);
  CHECK(induced(t1, {}).vertex_count() == 0);
  const std::vector<Vertex> rt{0, 2};
  const auto g = induced(t1, rt);
  CHECK(g.vertex_count() == 2);
  CHECK(g.weights() == std::vector<Vec>{{2}, {2}});
  CHECK(g.edge_count() == 0);
  const std::vector<Vertex> bad{7};
  CHECK_THROWS_AS(induced(t1, bad), Error);
  CHECK(induced_by_mask(t1, 0b00110) == WeightedGraph(1, {{1}, {2}}, {{0, 1}}));
}

TEST_CASE("external and internal edge counts") {
  const auto t1 = counterexample_t1();
  CHECK(ext_int(t1, {}) == EdgeCounts{0, 0});
  const std::vector<Vertex> rt{0, 2};
  CHECK(ext_int(t1, rt) == EdgeCounts{3, 0});
  const auto t2 = counterexample_t2();
  const std::vector<Vertex> sv{1, 4};
  CHECK(ext_int(t2, sv) == EdgeCounts{3, 0});
  const std::vector<Vertex> bad{5};
  CHECK_THROWS_AS(ext_int(t1, bad), Error);
}

TEST_CASE("edge counts are symmetric under complement and split the edge set") {
  for (const auto& g : oracle::corpus(6, 60, 4)) {
    const auto n = g.vertex_count();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      const auto in = ext_int_of_mask(g, a);
      const auto out = ext_int_of_mask(g, complement(a, n));
      CHECK(in.external == out.external);
      CHECK(in.internal + out.internal + in.external == g.edge_count());
      CHECK(induced_by_mask(g, a).edge_count() + induced_by_mask(g, complement(a, n)).edge_count() ==
            g.edge_count() - in.external);
    }
  }
}

TEST_CASE("random forests") {
  CHECK(random_forest(0, 3, 1, 1).vertex_count() == 0);
  const auto one = random_forest(1, 3, 1, 1);
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  CHECK(random_forest(8, 4, 2, 99) == random_forest(8, 4, 2, 99));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = random_forest(1 + seed % 9, 4, 1 + seed % 2, seed);
    CHECK(is_forest(f));
    CHECK(component_count(f) == f.vertex_count() - f.edge_count());
    for (const auto& w : f.weights())
      for (auto c : w) CHECK((c >= 1 && c <= 4));
  }
  CHECK_THROWS_AS(random_forest(3, 0, 1, 1), Error);
  CHECK_THROWS_AS(random_forest(3, 2, 0, 1), Error);
}

TEST_CASE("labeled tree enumeration") {
  const std::size_t expected[] = {0, 1, 1, 3, 16, 125, 1296};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::vector<Edge>> seen;
    for_each_labeled_tree(n, [&](const std::vector<Edge>& edges) {
      WeightedGraph g(1, std::vector<Vec>(n, Vec{1}), edges);
      CHECK(is_forest(g));
      CHECK(component_count(g) == 1);
      seen.insert(g.edges());
    });
    CHECK(seen.size() == expected[n]);
  }
  const std::vector<Vertex> seq{3, 3, 3};
  CHECK(WeightedGraph(1, std::vector<Vec>(5, Vec{1}), prufer_decode(seq, 5)).edges() ==
        std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}, {3, 4}});
}

TEST_CASE("graph file round trip") {
  const auto t1 = parse_graph(R"({"n":5,"r":1,"weights":[[2],[1],[2],[3],[1]],"edges":[[0,1],[1,2],[2,3],[3,4]]})");
  CHECK(t1 == counterexample_t1());
  CHECK(parse_graph(serialize_graph(t1)) == t1);
  const std::string canonical = serialize_graph(t1);
  CHECK(serialize_graph(parse_graph(canonical)) == canonical);
  CHECK(parse_graph(R"({"n":5,"weights":[2,1,2,3,1],"edges":[[0,1],[1,2],[2,3],[3,4]]})") == t1);
  const auto empty = parse_graph(R"({"n":0,"weights":[],"edges":[]})");
  CHECK(empty.vertex_count() == 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = random_forest(6, 5, 2, seed);
    CHECK(parse_graph(serialize_graph(f)) == f);
  }
}

TEST_CASE("graph file errors") {
  auto code = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no error for " << text);
    return Errc::overflow;
  };
  CHECK(code(R"({"n":2,"weights":[1,1],"edges":[[0,0]]})") == Errc::parse);
  CHECK(code(R"({"n":2,"weights":[1,1],"edges":[[0,1],[1,0]]})") == Errc::parse);
  CHECK(code(R"({"n":2,"weights":[1,0],"edges":[]})") == Errc::parse);
  CHECK(code(R"({"n":2,"r":2,"weights":[[1,1],[1]],"edges":[]})") == Errc::parse);
  CHECK(code(R"({"n":2,"weights":[1,1],"edges":[[0,1])") == Errc::parse);
  CHECK(code(R"({"n":3,"weights":[1,1],"edges":[]})") == Errc::parse);
  CHECK(code(R"([1,2])") == Errc::parse);
  CHECK_THROWS_AS(load_graph("/nonexistent/file.graph"), Error);
}

TEST_CASE("generators") {
  const auto c = cycle_graph({{1}, {1}, {1}, {1}});
  CHECK(c.edge_count() == 4);
  CHECK_FALSE(is_forest(c));
  const auto s = star_graph({{3}, {1}, {1}});
  CHECK(s.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  const auto u = disjoint_union(s, path_graph({{2}, {2}}));
  CHECK(u.vertex_count() == 5);
  CHECK(u.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {3, 4}});
  CHECK(component_count(u) == 2);
}
