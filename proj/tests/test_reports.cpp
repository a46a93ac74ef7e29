#include "doctest.h"
#include "macmahon/reports.hpp"

using namespace macmahon;

TEST_CASE("check_forest agrees on both routes") {
  const auto t1 = check_forest(counterexample_t1());
  CHECK(t1.ok());
  CHECK(t1.explicit_checked);
  CHECK(t1.detail.empty());
  const auto two = check_forest(random_forest(5, 2, 2, 3));
  CHECK(two.ok());
  CHECK_FALSE(two.explicit_checked);
}

TEST_CASE("a corrupted beta table is caught and located") {
  const auto check = check_forest(counterexample_t1(), {}, true);
  CHECK(check.hopf_ok);
  CHECK_FALSE(check.explicit_ok);
  CHECK_FALSE(check.ok());
  CHECK(check.detail.find("explicit route:") != std::string::npos);
  CHECK(check.detail.find("(a,b,c,d)=") != std::string::npos);
}

TEST_CASE("exhaustive sweeps count every weighted tree") {
  std::size_t count = 0;
  for_each_weighted_tree(4, 2, 1, [&](const WeightedGraph& g) {
    CHECK(is_forest(g));
    CHECK(component_count(g) == 1);
    ++count;
  });
  CHECK(count == 2 + 1 * 4 + 3 * 8 + 16 * 16);
  count = 0;
  for_each_weighted_tree(2, 2, 2, [&](const WeightedGraph&) { ++count; });
  CHECK(count == 4 + 16);
  CHECK_THROWS_AS(for_each_weighted_tree(2, 0, 1, [](const WeightedGraph&) {}), Error);

  VerifyOptions options;
  options.n_max = 4;
  options.weight_max = 2;
  const auto report = run_verification(options);
  CHECK(report.forests == 286);
  CHECK(report.passed());
  CHECK(report.explicit_pass == 286);
  CHECK(report.text().find("result: PASS") != std::string::npos);
}

TEST_CASE("random sweeps are reproducible") {
  VerifyOptions options;
  options.mode = VerifyMode::random;
  options.n_max = 7;
  options.weight_max = 3;
  options.trials = 25;
  options.seed = 9;
  CHECK(random_trial_forest(options, 4) == random_trial_forest(options, 4));
  const auto a = run_verification(options);
  const auto b = run_verification(options);
  CHECK(a.passed());
  CHECK(a.forests == 25);
  CHECK(a.text() == b.text());
  options.r = 2;
  const auto wide = run_verification(options);
  CHECK(wide.passed());
  CHECK(wide.explicit_pass + wide.explicit_fail == 0);
  CHECK(wide.text().find("explicit route: not applicable") != std::string::npos);
}

TEST_CASE("a failing sweep reports the first failure") {
  VerifyOptions options;
  options.n_max = 3;
  options.weight_max = 2;
  options.corrupt_beta = true;
  const auto report = run_verification(options);
  CHECK_FALSE(report.passed());
  CHECK(report.hopf_fail == 0);
  CHECK(report.explicit_fail > 0);
  CHECK(report.text().find("first failure:") != std::string::npos);
  CHECK(report.text().find("result: FAIL") != std::string::npos);
}

TEST_CASE("counterexample report") {
  const auto rep = counterexample();
  CHECK(rep.passed());
  CHECK(rep.wcsf_equal);
  CHECK(rep.csf_equal);
  CHECK(rep.wgdp_t1 == 1);
  CHECK(rep.wgdp_t2 == 2);
  CHECK(rep.text().find("wCSF equal: yes; wGDP x^4y^3 coefficient: 1 vs 2; CMF(k=2) distinct: yes") !=
        std::string::npos);
}

TEST_CASE("bases report") {
  const auto star = check_bases("star", 3, 4);
  CHECK(star.passed());
  CHECK(star.checked == 4 + 3 + 2);
  CHECK(star.text.find("family: star  checked: 9  failed: 0") != std::string::npos);
  CHECK(check_bases("path", 2, 3).passed());
  CHECK_THROWS_AS(check_bases("cycle", 2, 3), Error);
  CHECK_THROWS_AS(check_bases("star", 0, 3), Error);
}
