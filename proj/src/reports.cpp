#include "macmahon/reports.hpp"

#include <random>
#include <sstream>

#include "macmahon/bases.hpp"
#include "macmahon/hopf.hpp"
#include "macmahon/recovery.hpp"

namespace macmahon {

namespace {

std::string monomial_string(const std::vector<std::string>& vars, const LaurentPolynomial::Exponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += vars[i];
    if (exps[i] != 1) out += '^' + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

// First monomial (in term order) where got differs from expected.
std::string first_difference(const LaurentPolynomial& expected, const LaurentPolynomial& got) {
  const auto diff = (got - expected).with_variables(expected.variables());
  if (diff.is_zero()) return "no difference";
  const auto& [exps, delta] = *diff.terms().begin();
  const auto& vars = diff.variables();
  const Coeff want = expected.coefficient(exps);
  std::string out = "coefficient of " + monomial_string(vars, exps) + ": expected " + std::to_string(want) +
                    ", got " + std::to_string(want + delta);
  if (vars.size() == 4)
    out += " at (a,b,c,d)=(" + std::to_string(exps[0]) + "," + std::to_string(exps[1]) + "," +
           std::to_string(exps[2]) + "," + std::to_string(exps[3]) + ")";
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

ForestCheck check_forest(const WeightedGraph& forest, const Limits& limits, bool corrupt_beta) {
  ForestCheck check;
  const auto truth = egdp(forest, limits);
  const auto x = cmf(forest, limits);

  try {
    const auto h = recover_egdp_hopf(x);
    if (!(h == truth)) {
      check.hopf_ok = false;
      check.detail = "hopf route: " + first_difference(truth, h);
    }
  } catch (const Error& e) {
    check.hopf_ok = false;
    check.detail = std::string("hopf route: ") + e.what();
  }

  if (forest.weight_dim() != 1) return check;
  check.explicit_checked = true;
  auto beta = beta_table(forest, limits);
  if (corrupt_beta && !beta.empty()) beta.begin()->second += 1;
  const auto n = static_cast<std::int64_t>(forest.vertex_count());
  const auto w = forest.total_weight()[0];
  const auto e = static_cast<std::int64_t>(forest.edge_count());
  std::string problem;
  try {
    const auto g = recover_egdp_explicit(beta, n, w, e);
    if (!(g == truth)) problem = first_difference(truth, g);
  } catch (const Error& err) {
    problem = err.what();
    // name the first offending coefficient as well, when the raw values exist
    try {
      LaurentPolynomial raw(egdp_variables(1));
      for (const auto& [i, v] : explicit_egdp_coefficients(beta, n, w, e)) raw.add_term({i[0], i[1], i[2], i[3]}, v);
      if (!(raw == truth)) problem += "; " + first_difference(truth, raw);
    } catch (const Error&) {
    }
  }
  if (!problem.empty()) {
    check.explicit_ok = false;
    if (!check.detail.empty()) check.detail += "\n";
    check.detail += "explicit route: " + problem;
  }
  return check;
}

void for_each_weighted_tree(std::size_t n_max, std::int64_t weight_max, std::size_t r,
                            const std::function<void(const WeightedGraph&)>& fn) {
  if (weight_max < 1) fail(Errc::invalid_argument, "weight_max must be at least 1");
  if (r < 1) fail(Errc::invalid_argument, "r must be at least 1");
  for (std::size_t n = 1; n <= n_max; ++n) {
    for_each_labeled_tree(n, [&](const std::vector<Edge>& edges) {
      std::vector<std::int64_t> flat(n * r, 1);
      std::vector<Vec> weights(n, Vec(r));
      while (true) {
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t j = 0; j < r; ++j) weights[v][j] = flat[v * r + j];
        fn(WeightedGraph(r, weights, edges));
        std::size_t k = 0;
        while (k < flat.size() && flat[k] == weight_max) flat[k++] = 1;
        if (k == flat.size()) break;
        ++flat[k];
      }
    });
  }
}

WeightedGraph random_trial_forest(const VerifyOptions& options, std::size_t trial) {
  if (options.n_max < 1) fail(Errc::invalid_argument, "n_max must be at least 1");
  const std::uint64_t seed = splitmix64(options.seed ^ splitmix64(trial));
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + rng() % options.n_max;
  return random_forest(n, options.weight_max, options.r, seed);
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.options = options;
  auto visit = [&](const WeightedGraph& f) {
    ++report.forests;
    const auto check = check_forest(f, options.limits, options.corrupt_beta);
    (check.hopf_ok ? report.hopf_pass : report.hopf_fail)++;
    if (check.explicit_checked) (check.explicit_ok ? report.explicit_pass : report.explicit_fail)++;
    if (!check.ok() && report.first_failure.empty())
      report.first_failure = "forest: " + serialize_graph(f) + "\n" + check.detail;
  };
  if (options.mode == VerifyMode::exhaustive) {
    for_each_weighted_tree(options.n_max, options.weight_max, options.r, visit);
  } else {
    for (std::size_t i = 0; i < options.trials; ++i) visit(random_trial_forest(options, i));
  }
  return report;
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  out << "mode: " << (options.mode == VerifyMode::exhaustive ? "exhaustive" : "random") << "\n";
  out << "n_max: " << options.n_max << "  weight_max: " << options.weight_max << "  r: " << options.r;
  if (options.mode == VerifyMode::random) out << "  seed: " << options.seed << "  trials: " << options.trials;
  out << "\n";
  out << "forests checked: " << forests << "\n";
  out << "hopf route: " << hopf_pass << " passed, " << hopf_fail << " failed\n";
  if (explicit_pass + explicit_fail == 0)
    out << "explicit route: not applicable\n";
  else
    out << "explicit route: " << explicit_pass << " passed, " << explicit_fail << " failed\n";
  out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  if (!first_failure.empty()) out << "first failure:\n" << first_failure << "\n";
  return out.str();
}

WeightedGraph counterexample_t1() { return path_graph({{2}, {1}, {2}, {3}, {1}}); }
WeightedGraph counterexample_t2() { return path_graph({{2}, {3}, {1}, {2}, {1}}); }

CounterexampleReport counterexample() {
  CounterexampleReport rep;
  const auto t1 = counterexample_t1(), t2 = counterexample_t2();
  const auto x1 = cmf(t1), x2 = cmf(t2);
  rep.wcsf_equal = csf_specialize(x1, Keep::weight) == csf_specialize(x2, Keep::weight);
  rep.csf_equal = csf_specialize(x1, Keep::cardinality) == csf_specialize(x2, Keep::cardinality);
  const std::map<std::string, std::int64_t> mono{{"x", 4}, {"y", 3}, {"z", 0}};
  rep.wgdp_t1 = egdp_specialize(egdp(t1), GdpKind::weighted).coefficient(mono);
  rep.wgdp_t2 = egdp_specialize(egdp(t2), GdpKind::weighted).coefficient(mono);
  rep.truncated_t1 = mac_truncate(x1, 2);
  rep.truncated_t2 = mac_truncate(x2, 2);
  return rep;
}

std::string CounterexampleReport::text() const {
  std::ostringstream out;
  out << "T1: " << serialize_graph(counterexample_t1()) << "\n";
  out << "T2: " << serialize_graph(counterexample_t2()) << "\n";
  out << "CSF equal: " << yes_no(csf_equal) << "\n";
  out << "wCSF equal: " << yes_no(wcsf_equal) << "\n";
  out << "wGDP coefficient of x^4 y^3: T1 " << wgdp_t1 << ", T2 " << wgdp_t2 << "\n";
  out << "CMF(k=2) T1: " << truncated_t1.serialize() << "\n";
  out << "CMF(k=2) T2: " << truncated_t2.serialize() << "\n";
  out << "wCSF equal: " << yes_no(wcsf_equal) << "; wGDP x^4y^3 coefficient: " << wgdp_t1 << " vs " << wgdp_t2
      << "; CMF(k=2) distinct: " << yes_no(!(truncated_t1 == truncated_t2)) << "\n";
  return out.str();
}

BasesReport check_bases(const std::string& family, std::int64_t n_max, std::int64_t w_max, const Limits& limits) {
  GraphFamily fam;
  if (family == "star")
    fam = star_family;
  else if (family == "path")
    fam = path_family;
  else
    fail(Errc::invalid_argument, "unknown family '" + family + "' (expected star or path)");
  if (n_max < 1 || w_max < 1) fail(Errc::invalid_argument, "check_bases: bounds must be positive");

  BasesReport rep;
  std::ostringstream out;
  for (std::int64_t a = 1; a <= n_max; ++a) {
    for (std::int64_t b = a; b <= w_max; ++b) {
      const auto m = basis_matrix(fam, {a, b}, limits);
      const bool ok = check_chromatic_basis(m.rows);
      ++rep.checked;
      if (!ok) ++rep.failed;
      out << "u=(" << a << "," << b << ") size=" << m.index.size() << " triangular=" << yes_no(ok) << "\n";
    }
  }
  out << "family: " << family << "  checked: " << rep.checked << "  failed: " << rep.failed << "\n";
  rep.text = out.str();
  return rep;
}

}  // namespace macmahon
