#include <random>

#include "doctest.h"
#include "macmahon/chromatic.hpp"
#include "macmahon/hopf.hpp"
#include "macmahon/recovery.hpp"
#include "macmahon/reports.hpp"
#include "oracles.hpp"

using namespace macmahon;

namespace {

VectorPartition vp(const std::vector<Vec>& parts) { return VectorPartition::canonicalize(2, parts); }
LaurentPolynomial var(const char* name, std::int64_t e = 1) { return LaurentPolynomial::variable(name, e); }
LaurentPolynomial one() { return LaurentPolynomial::constant(1); }

// omega straight from its defining sum, using only the oracle helpers
Coeff reference_omega(const VectorPartition& lambda, std::int64_t a, std::int64_t b, std::int64_t c,
                      std::int64_t d, std::int64_t n, std::int64_t e) {
  std::set<VectorPartition> omegas;
  if (b == 0 && c == 0)
    omegas.insert(VectorPartition(2));
  else if (b > 0 && c > 0)
    omegas = oracle::vector_partitions({b, c}, true);
  const auto ell = static_cast<std::int64_t>(lambda.length());
  Coeff sum = 0;
  for (const auto& om : omegas) {
    const auto lo = static_cast<std::int64_t>(om.length());
    sum += oracle::binomial(b - lo, d) * oracle::vp_binomial(lambda, om) * oracle::binomial(n - ell + lo - b, e - a - d);
  }
  return (e - a) % 2 == 0 ? sum : -sum;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("no error");
  return Errc::overflow;
}

}  // namespace

TEST_CASE("omega with an empty inner partition is a signed binomial") {
  const auto lambda = vp({{2, 3}, {1, 1}, {1, 2}});
  const std::int64_t n = 4;
  for (std::int64_t e = 0; e <= 3; ++e)
    for (std::int64_t a = 0; a <= e; ++a) {
      const Coeff sign = (e - a) % 2 == 0 ? 1 : -1;
      CHECK(omega(lambda, a, 0, 0, 0, n, e) == sign * oracle::binomial(n - 3, e - a));
    }
  // trees: the sign is (-1)^(n-a-1)
  const auto path = vp({{1, 1}, {1, 1}, {1, 1}});
  CHECK(omega(path, 0, 0, 0, 0, 3, 2) == 0);
  CHECK(omega(path, 2, 0, 0, 0, 3, 2) == 1);
  CHECK(omega(vp({{2, 2}, {1, 1}}), 1, 0, 0, 0, 3, 2) == -1);
}

TEST_CASE("omega matches the defining sum") {
  const std::vector<std::pair<VectorPartition, std::int64_t>> cases{
      {vp({{1, 2}}), 1},
      {vp({{1, 1}, {1, 2}}), 2},
      {vp({{2, 3}}), 2},
      {vp({{2, 3}, {1, 1}, {1, 1}}), 4},
      {vp({{1, 2}, {1, 1}, {1, 1}, {1, 3}}), 4},
      {vp({{3, 4}, {2, 2}}), 5},
  };
  for (const auto& [lambda, n] : cases) {
    const auto w = lambda.grade()[1];
    for (std::int64_t e = n - static_cast<std::int64_t>(lambda.length()); e < n; ++e)
      for (std::int64_t a = 0; a <= e; ++a)
        for (std::int64_t b = 0; b <= n; ++b)
          for (std::int64_t c = 0; c <= w; ++c)
            for (std::int64_t d = 0; d <= e; ++d)
              CHECK(omega(lambda, a, b, c, d, n, e) == reference_omega(lambda, a, b, c, d, n, e));
  }
}

TEST_CASE("omega_table lists exactly the nonzero omega values") {
  const std::vector<VectorPartition> lambdas{vp({{1, 1}}), vp({{2, 3}, {1, 1}}), vp({{1, 2}, {1, 2}, {1, 1}}),
                                             vp({{2, 2}, {2, 3}, {1, 1}})};
  for (const auto& lambda : lambdas) {
    const auto n = lambda.grade()[0], w = lambda.grade()[1];
    const auto e = n - 1;
    const auto table = omega_table(lambda, n, e);
    std::map<EgdpIndex, Coeff> as_map(table.begin(), table.end());
    CHECK(as_map.size() == table.size());
    CHECK(std::is_sorted(table.begin(), table.end()));
    for (std::int64_t a = 0; a <= e; ++a)
      for (std::int64_t b = 0; b <= n; ++b)
        for (std::int64_t c = 0; c <= w; ++c)
          for (std::int64_t d = 0; d <= e; ++d) {
            const auto it = as_map.find({a, b, c, d});
            const Coeff got = it == as_map.end() ? 0 : it->second;
            CHECK(got == omega(lambda, a, b, c, d, n, e));
          }
    for (const auto& [index, value] : table) CHECK(value != 0);
  }
}

TEST_CASE("signed binomial sums vanish off the diagonal") {
  for (std::int64_t p = 0; p <= 20; ++p)
    for (std::int64_t q = 0; q <= 20; ++q) {
      CHECK(signed_binomial_sum(p, q) == signed_binomial_indicator(p, q));
      CHECK(signed_binomial_indicator(p, q) == (p == q ? 1 : 0));
    }
  CHECK(signed_binomial_sum(2, 1) == 0);
  CHECK(signed_binomial_sum(3, 3) == 1);
  CHECK(signed_binomial_sum(0, 0) == 1);
  CHECK(code_of([] { signed_binomial_sum(-1, 0); }) == Errc::invalid_argument);
}

TEST_CASE("explicit reconstruction examples") {
  const auto w = var("w"), x = var("x"), y = var("y"), z = var("z");
  CHECK(recover_egdp_explicit({{vp({{1, 3}}), 1}}, 1, 3, 0) == one() + x * y.pow(3));
  const WeightedGraph edge12(1, {{1}, {2}}, {{0, 1}});
  CHECK(recover_egdp_explicit(beta_table(edge12), 2, 3, 1) ==
        one() + w * x * y + w * x * y.pow(2) + x.pow(2) * y.pow(3) * z);
  const auto t1 = counterexample_t1(), t2 = counterexample_t2();
  const auto g1 = recover_egdp_explicit(beta_table(t1), 5, 9, 4);
  const auto g2 = recover_egdp_explicit(beta_table(t2), 5, 9, 4);
  CHECK(g1.coefficient({{"w", 3}, {"x", 2}, {"y", 4}, {"z", 0}}) == 1);
  CHECK(g2.coefficient({{"w", 3}, {"x", 2}, {"y", 4}, {"z", 0}}) == 2);
  CHECK(recover_egdp_explicit({{VectorPartition(2), 1}}, 0, 0, 0) == one());
}

TEST_CASE("explicit reconstruction equals the subset oracle on random forests") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto f = random_forest(1 + seed % 7, 4, 1, seed);
    const auto n = static_cast<std::int64_t>(f.vertex_count());
    const auto e = static_cast<std::int64_t>(f.edge_count());
    const auto beta = beta_table(f);
    const auto g = recover_egdp_explicit(beta, n, f.total_weight()[0], e);
    CHECK(g == oracle::egdp(f));
    CHECK(g == recover_egdp_hopf(cmf(f)));
    Coeff total = 0;
    for (const auto& [index, value] : explicit_egdp_coefficients(beta, n, f.total_weight()[0], e)) {
      CHECK(value > 0);
      total += value;
    }
    CHECK(total == (Coeff{1} << n));
  }
}

TEST_CASE("explicit reconstruction rejects inconsistent input") {
  const auto t1 = counterexample_t1();
  auto beta = beta_table(t1);
  CHECK_THROWS_AS(recover_egdp_explicit(beta, 4, 9, 4), Error);
  CHECK(code_of([&] { recover_egdp_explicit(beta, 5, 9, 2); }) == Errc::invalid_argument);
  beta.begin()->second += 1;
  try {
    recover_egdp_explicit(beta, 5, 9, 4);
    FAIL("corrupted beta accepted");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::domain);
    CHECK(std::string(err.what()).find("(a,b,c,d)=") != std::string::npos);
  }
  CHECK_THROWS_AS(omega(vp({{1, 1}}), -1, 0, 0, 0, 1, 0), Error);
}
