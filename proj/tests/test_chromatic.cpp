#include <random>

#include "doctest.h"
#include "macmahon/chromatic.hpp"
#include "macmahon/reports.hpp"
#include "oracles.hpp"

using namespace macmahon;

namespace {

VectorPartition vp(const std::vector<Vec>& parts, std::size_t width = 2) {
  return VectorPartition::canonicalize(width, parts);
}

MacMahonElement p(const std::vector<Vec>& parts, Coeff c = 1, std::size_t width = 2) {
  return MacMahonElement::basis(vp(parts, width), c);
}

LaurentPolynomial var(const char* name, std::int64_t e = 1) { return LaurentPolynomial::variable(name, e); }
LaurentPolynomial one() { return LaurentPolynomial::constant(1); }

const WeightedGraph single3(1, {{3}}, {});
const WeightedGraph edge12(1, {{1}, {2}}, {{0, 1}});

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return Errc::overflow;
}

}  // namespace

TEST_CASE("cmf examples") {
  CHECK(cmf(single3) == p({{1, 3}}));
  CHECK(cmf(edge12) == p({{1, 1}, {1, 2}}) - p({{2, 3}}));
  CHECK(cmf(WeightedGraph(1)) == MacMahonElement::one(2));
  const auto x1 = var("x1"), y1 = var("y1"), x2 = var("x2"), y2 = var("y2");
  CHECK(mac_truncate(cmf(counterexample_t1()), 2) ==
        x1.pow(3) * y1.pow(5) * x2.pow(2) * y2.pow(4) + x1.pow(2) * y1.pow(4) * x2.pow(3) * y2.pow(5));
  CHECK(mac_truncate(cmf(counterexample_t2()), 2) ==
        x1.pow(3) * y1.pow(4) * x2.pow(2) * y2.pow(5) + x1.pow(2) * y1.pow(5) * x2.pow(3) * y2.pow(4));
}

TEST_CASE("cmf matches the depth-first oracle on the corpus") {
  for (const auto& g : oracle::corpus(6, 120, 8)) CHECK(cmf(g) == oracle::cmf(g));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = random_forest(6, 3, 2, seed);
    CHECK(cmf(f) == oracle::cmf(f));
  }
}

TEST_CASE("cmf of a disjoint union is the product") {
  const auto graphs = oracle::corpus(3, 20, 9);
  for (const auto& a : graphs)
    for (const auto& b : graphs) {
      if (a.vertex_count() + b.vertex_count() > 6) continue;
      CHECK(cmf(disjoint_union(a, b)) == cmf(a) * cmf(b));
    }
}

TEST_CASE("edge cap") {
  Limits tight;
  tight.max_edges = 3;
  CHECK(code_of([&] { cmf(counterexample_t1(), tight); }) == Errc::cap_exceeded);
  CHECK(code_of([&] { beta_table(counterexample_t1(), tight); }) == Errc::cap_exceeded);
  tight.max_vertices = 4;
  CHECK(code_of([&] { egdp(counterexample_t1(), tight); }) == Errc::cap_exceeded);
  tight.max_colorings = 31;
  CHECK(code_of([&] { coloring_oracle(counterexample_t1(), 2, tight); }) == Errc::cap_exceeded);
}

TEST_CASE("beta table examples") {
  CHECK(beta_table(edge12) == BetaTable{{vp({{1, 1}, {1, 2}}), 1}, {vp({{2, 3}}), 1}});
  CHECK(beta_table(WeightedGraph(1, {{4}}, {})) == BetaTable{{vp({{1, 4}}), 1}});
  Coeff sum3 = 0;
  for (const auto& [lambda, count] : beta_table(counterexample_t1()))
    if (lambda.length() == 3) sum3 += count;
  CHECK(sum3 == 6);
  CHECK(code_of([] { beta_table(cycle_graph({{1}, {1}, {1}, {1}})); }) == Errc::domain);
}

TEST_CASE("forest cmf has no cancellation and beta sums are binomials") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto f = random_forest(1 + seed % 8, 3, 1, seed);
    const auto beta = beta_table(f);
    CHECK(beta == oracle::beta(f));
    const auto e = cmf(f);
    const auto n = static_cast<std::int64_t>(f.vertex_count());
    CHECK(e.size() == beta.size());
    std::map<std::int64_t, Coeff> by_length;
    for (const auto& [lambda, count] : beta) {
      CHECK(count > 0);
      const auto len = static_cast<std::int64_t>(lambda.length());
      CHECK(e.coefficient(lambda) == (((n - len) % 2 == 0) ? count : -count));
      by_length[len] += count;
    }
    for (std::int64_t len = 0; len <= n; ++len)
      CHECK(by_length[len] == oracle::binomial(static_cast<std::int64_t>(f.edge_count()), n - len));
  }
}

TEST_CASE("csf specializations") {
  const auto e = cmf(edge12);
  CHECK(csf_specialize(e, Keep::weight) == p({{1}, {2}}, 1, 1) - p({{3}}, 1, 1));
  CHECK(csf_specialize(e, Keep::cardinality) == p({{1}, {1}}, 1, 1) - p({{2}}, 1, 1));
  CHECK(csf_specialize(cmf(counterexample_t1()), Keep::weight) == csf_specialize(cmf(counterexample_t2()), Keep::weight));
  CHECK(csf_specialize(cmf(counterexample_t1()), Keep::cardinality) ==
        csf_specialize(cmf(counterexample_t2()), Keep::cardinality));
  CHECK_FALSE(cmf(counterexample_t1()) == cmf(counterexample_t2()));
  CHECK(code_of([] { csf_specialize(p({{1}}, 1, 1), Keep::weight); }) == Errc::invalid_argument);
  const WeightedGraph two(2, {{1, 2}, {2, 1}}, {{0, 1}});
  CHECK(csf_specialize(cmf(two), Keep::weight) == p({{1, 2}, {2, 1}}) - p({{3, 3}}));
}

TEST_CASE("egdp examples") {
  const auto w = var("w"), x = var("x"), y = var("y"), z = var("z");
  CHECK(egdp(single3) == one() + x * y.pow(3));
  CHECK(egdp(edge12) == one() + w * x * y + w * x * y.pow(2) + x.pow(2) * y.pow(3) * z);
  CHECK(egdp(counterexample_t1()).coefficient({{"w", 3}, {"x", 2}, {"y", 4}, {"z", 0}}) == 1);
  CHECK(egdp(counterexample_t2()).coefficient({{"w", 3}, {"x", 2}, {"y", 4}, {"z", 0}}) == 2);
  CHECK(egdp_variables(1) == std::vector<std::string>{"w", "x", "y", "z"});
  CHECK(egdp_variables(2) == std::vector<std::string>{"w", "x", "y1", "y2", "z"});
}

TEST_CASE("egdp agrees with the subset oracle and evaluates to 2^n") {
  for (const auto& g : oracle::corpus(6, 80, 12)) {
    const auto e = egdp(g);
    CHECK(e == oracle::egdp(g));
    CHECK(e.min_exponent() >= 0);
    CHECK(e.evaluate({{"w", 1}, {"x", 1}, {"y", 1}, {"z", 1}}) == (Coeff{1} << g.vertex_count()));
  }
  const auto f = random_forest(6, 3, 2, 5);
  CHECK(egdp(f) == oracle::egdp(f));
}

TEST_CASE("egdp is closed under complementation") {
  for (const auto& g : oracle::corpus(6, 80, 13)) {
    const auto e = egdp(g);
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const auto wt = g.total_weight()[0];
    const auto edges = static_cast<std::int64_t>(g.edge_count());
    for (const auto& [exps, c] : e.terms()) {
      const auto a = exps[0], b = exps[1], cw = exps[2], d = exps[3];
      CHECK(e.coefficient({a, n - b, wt - cw, edges - a - d}) == c);
    }
  }
}

TEST_CASE("egdp specializes to the weight enumerator") {
  for (const auto& g : oracle::corpus(6, 60, 14)) {
    auto e = egdp(g).specialize("w", 1).specialize("z", 1).specialize("x", 1);
    LaurentPolynomial want = one();
    for (const auto& wv : g.weights()) want = want * (one() + var("y", wv[0]));
    CHECK(e == want);
  }
}

TEST_CASE("gdp specializations") {
  const auto x = var("x"), y = var("y"), z = var("z");
  CHECK(egdp_specialize(egdp(edge12), GdpKind::weighted) == one() + x * y + x.pow(2) * y + x.pow(3) * z);
  CHECK(egdp_specialize(egdp(single3), GdpKind::plain) == one() + x);
  CHECK(egdp_specialize(egdp(edge12), GdpKind::plain) == one() + x * y * LaurentPolynomial::constant(2) + x.pow(2) * z);
  const auto t1 = egdp_specialize(egdp(counterexample_t1()), GdpKind::weighted);
  const auto t2 = egdp_specialize(egdp(counterexample_t2()), GdpKind::weighted);
  CHECK(t1.coefficient({{"x", 4}, {"y", 3}, {"z", 0}}) == 1);
  CHECK(t2.coefficient({{"x", 4}, {"y", 3}, {"z", 0}}) == 2);
  const WeightedGraph two(2, {{1, 2}}, {});
  CHECK(code_of([&] { egdp_specialize(egdp(two), GdpKind::weighted); }) == Errc::inapplicable);
  CHECK(egdp_specialize(egdp(two), GdpKind::plain) == one() + x);
}

TEST_CASE("coloring oracle examples") {
  CHECK(coloring_oracle(edge12, 1).is_zero());
  const auto x1 = var("x1"), y1 = var("y1"), x2 = var("x2"), y2 = var("y2");
  CHECK(coloring_oracle(WeightedGraph(1, {{2}}, {}), 2) == x1 * y1.pow(2) + x2 * y2.pow(2));
  CHECK(coloring_oracle(counterexample_t1(), 2) == mac_truncate(cmf(counterexample_t1()), 2));
}

TEST_CASE("coloring oracle agrees with backtracking and with the truncated cmf") {
  for (const auto& g : oracle::corpus(5, 50, 15))
    for (unsigned k = 1; k <= 3; ++k) {
      const auto col = coloring_oracle(g, k);
      CHECK(col == oracle::colorings(g, k));
      CHECK(col == mac_truncate(cmf(g), static_cast<int>(k)));
    }
  const WeightedGraph two(2, {{1, 2}, {2, 1}, {1, 1}}, {{0, 1}, {1, 2}});
  for (unsigned k = 1; k <= 3; ++k) CHECK(coloring_oracle(two, k) == mac_truncate(cmf(two), static_cast<int>(k)));
}
