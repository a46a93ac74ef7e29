#pragma once

// Verification drivers behind the CLI: forest recovery sweeps, the weighted
// counterexample pair, and chromatic-basis certification.

#include <cstdint>
#include <functional>
#include <string>

#include "macmahon/chromatic.hpp"
#include "macmahon/graphs.hpp"
#include "macmahon/laurent.hpp"

namespace macmahon {

enum class VerifyMode { exhaustive, random };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exhaustive;
  std::size_t n_max = 5;
  std::int64_t weight_max = 2;
  std::size_t r = 1;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  Limits limits;
  /// Negative control: bump one beta coefficient before the explicit route.
  bool corrupt_beta = false;
};

struct ForestCheck {
  bool hopf_ok = true;
  bool explicit_checked = false;  // the explicit route covers r = 1 only
  bool explicit_ok = true;
  std::string detail;  // first problem found, empty when everything agrees
  bool ok() const { return hopf_ok && explicit_ok; }
};

/// Compares recover_egdp_hopf(cmf F) and, for r = 1,
/// recover_egdp_explicit(beta_table F, ...) against egdp(F).
ForestCheck check_forest(const WeightedGraph& forest, const Limits& limits = {}, bool corrupt_beta = false);

/// Every labeled tree on 1..n_max vertices under every weighting in [1, weight_max]^r.
void for_each_weighted_tree(std::size_t n_max, std::int64_t weight_max, std::size_t r,
                            const std::function<void(const WeightedGraph&)>& fn);

/// Forest i of a random sweep: n uniform in [1, n_max], seed derived from (seed, i).
WeightedGraph random_trial_forest(const VerifyOptions& options, std::size_t trial);

struct VerifyReport {
  VerifyOptions options;
  std::size_t forests = 0;
  std::size_t hopf_pass = 0, hopf_fail = 0;
  std::size_t explicit_pass = 0, explicit_fail = 0;
  std::string first_failure;  // graph serialization and diagnosis

  bool passed() const { return hopf_fail == 0 && explicit_fail == 0; }
  std::string text() const;
};

VerifyReport run_verification(const VerifyOptions& options);

/// The two weighted 5-vertex paths with weights 2,1,2,3,1 and 2,3,1,2,1.
WeightedGraph counterexample_t1();
WeightedGraph counterexample_t2();

struct CounterexampleReport {
  bool wcsf_equal = false;
  bool csf_equal = false;
  Coeff wgdp_t1 = 0, wgdp_t2 = 0;  // coefficient of x^4 y^3 z^0
  LaurentPolynomial truncated_t1, truncated_t2;  // two-color CMFs

  bool passed() const {
    return wcsf_equal && csf_equal && wgdp_t1 == 1 && wgdp_t2 == 2 && !(truncated_t1 == truncated_t2);
  }
  std::string text() const;
};

CounterexampleReport counterexample();

struct BasesReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string text;
  bool passed() const { return failed == 0; }
};

/// Certifies every multidegree (a, b) with 1 <= a <= n_max, a <= b <= w_max.
/// family is "star" or "path".
BasesReport check_bases(const std::string& family, std::int64_t n_max, std::int64_t w_max,
                        const Limits& limits = {});

}  // namespace macmahon
