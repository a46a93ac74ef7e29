// macmahon: command-line front end over the C API in macmahon.h.

#include <cstdint>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "macmahon/macmahon.h"

namespace {

int exit_code(mm_status s) {
  switch (s) {
    case MM_OK: return 0;
    case MM_ERR_VERIFY: return 1;
    case MM_ERR_PARSE:
    case MM_ERR_INVALID_ARGUMENT: return 2;
    case MM_ERR_CAP: return 3;
    case MM_ERR_INAPPLICABLE:
    case MM_ERR_DOMAIN: return 4;
    default: return 5;
  }
}

struct Failure {
  mm_status status;
};

void check(mm_status s) {
  if (s != MM_OK) throw Failure{s};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Graph = std::unique_ptr<mm_graph, Deleter<mm_graph, mm_graph_free>>;
using Element = std::unique_ptr<mm_element, Deleter<mm_element, mm_element_free>>;
using Poly = std::unique_ptr<mm_poly, Deleter<mm_poly, mm_poly_free>>;
using Tensor = std::unique_ptr<mm_tensor, Deleter<mm_tensor, mm_tensor_free>>;
using Beta = std::unique_ptr<mm_beta, Deleter<mm_beta, mm_beta_free>>;

void print(char* s) {
  std::string text(s);
  mm_string_free(s);
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << '\n';
}

template <class Fn, class H>
void emit(Fn fn, const H& handle) {
  char* s = nullptr;
  check(fn(handle.get(), &s));
  print(s);
}

Graph load(const std::string& path) {
  mm_graph* g = nullptr;
  check(mm_graph_load(path.c_str(), &g));
  return Graph(g);
}

Element cmf_of(const mm_graph* g, const mm_limits& limits) {
  mm_element* e = nullptr;
  check(mm_cmf(g, &limits, &e));
  return Element(e);
}

Poly egdp_of(const mm_graph* g, const mm_limits& limits) {
  mm_poly* p = nullptr;
  check(mm_egdp(g, &limits, &p));
  return Poly(p);
}

void compute(const std::string& path, const std::string& invariant, int truncate, const mm_limits& limits) {
  auto g = load(path);
  if (truncate != 0 && invariant != "cmf" && invariant != "wcsf" && invariant != "csf") {
    std::cerr << "error: --truncate applies to cmf, wcsf and csf only\n";
    throw Failure{MM_ERR_INVALID_ARGUMENT};
  }

  if (invariant == "egdp" || invariant == "wgdp" || invariant == "gdp") {
    auto p = egdp_of(g.get(), limits);
    if (invariant != "egdp") {
      mm_poly* q = nullptr;
      check(mm_poly_specialize_gdp(p.get(), invariant == "wgdp" ? MM_GDP_WEIGHTED : MM_GDP_PLAIN, &q));
      p.reset(q);
    }
    emit(mm_poly_serialize, p);
    return;
  }
  if (invariant == "beta") {
    mm_beta* b = nullptr;
    check(mm_beta_table(g.get(), &limits, &b));
    emit(mm_beta_serialize, Beta(b));
    return;
  }

  auto e = cmf_of(g.get(), limits);
  if (invariant != "cmf") {
    mm_element* s = nullptr;
    check(mm_element_specialize(e.get(), invariant == "wcsf" ? MM_KEEP_WEIGHT : MM_KEEP_CARDINALITY, &s));
    e.reset(s);
  }
  if (truncate != 0) {
    mm_poly* p = nullptr;
    check(mm_element_truncate(e.get(), truncate, &p));
    emit(mm_poly_serialize, Poly(p));
  } else {
    emit(mm_element_serialize, e);
  }
}

void hopf(const std::string& path, const std::string& op, const mm_limits& limits) {
  auto g = load(path);
  auto e = cmf_of(g.get(), limits);
  if (op == "coproduct") {
    mm_tensor* t = nullptr;
    check(mm_element_coproduct(e.get(), &t));
    emit(mm_tensor_serialize, Tensor(t));
  } else if (op == "antipode") {
    mm_element* s = nullptr;
    check(mm_element_antipode(e.get(), &s));
    emit(mm_element_serialize, Element(s));
  } else if (op == "phi" || op == "gamma" || op == "recover") {
    mm_poly* p = nullptr;
    if (op == "phi") check(mm_element_phi(e.get(), &p));
    if (op == "gamma") check(mm_element_gamma(e.get(), &p));
    if (op == "recover") check(mm_element_recover_egdp(e.get(), &p));
    emit(mm_poly_serialize, Poly(p));
  } else {
    mm_stats st{};
    check(mm_element_recover_stats(e.get(), &st));
    std::cout << "n=" << st.vertices << " e=" << st.edges << " w=";
    for (size_t i = 0; i < st.weight_dim; ++i) std::cout << (i ? "," : "") << st.weight[i];
    std::cout << " c=" << st.components << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic MacMahon functions and degree polynomials of weighted graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  mm_limits limits = mm_default_limits();
  app.add_option("--max-edges", limits.max_edges, "Cap on edges for 2^|E| subset sums")->capture_default_str();
  app.add_option("--max-vertices", limits.max_vertices, "Cap on vertices for 2^|V| subset sums")
      ->capture_default_str();
  app.add_option("--max-colorings", limits.max_colorings, "Cap on k^n colorings for the oracle")
      ->capture_default_str();

  std::string path, invariant = "cmf", op;
  int truncate = 0;
  auto* compute_cmd = app.add_subcommand("compute", "Compute a graph invariant");
  compute_cmd->add_option("graph", path, "Graph file")->required();
  compute_cmd->add_option("--invariant", invariant, "Invariant to compute")
      ->check(CLI::IsMember({"cmf", "wcsf", "csf", "egdp", "wgdp", "gdp", "beta"}))
      ->capture_default_str();
  compute_cmd->add_option("--truncate", truncate, "Restrict to k colors (k alphabets)")->check(CLI::PositiveNumber);

  auto* hopf_cmd = app.add_subcommand("hopf", "Hopf-algebra computations on the CMF of a graph");
  hopf_cmd->add_option("graph", path, "Graph file")->required();
  hopf_cmd->add_option("--op", op, "Operation")
      ->check(CLI::IsMember({"coproduct", "antipode", "phi", "gamma", "stats", "recover"}))
      ->required();

  mm_verify_options vo = mm_default_verify_options();
  std::string mode = "exhaustive";
  bool corrupt = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check that the CMF of each forest determines its EGDP");
  verify_cmd->add_option("--mode", mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  verify_cmd->add_option("--n-max", vo.n_max, "Largest vertex count")->capture_default_str();
  verify_cmd->add_option("--weight-max", vo.weight_max, "Largest weight coordinate")->capture_default_str();
  verify_cmd->add_option("--r", vo.r, "Weight dimension")->capture_default_str();
  verify_cmd->add_option("--seed", vo.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--trials", vo.trials, "Random forests to check")->capture_default_str();
  verify_cmd->add_flag("--corrupt-beta", corrupt)->group("");

  app.add_subcommand("counterexample", "Two weighted trees with equal wCSF and different wGDP");

  auto* bases_cmd = app.add_subcommand("bases", "Chromatic bases");
  bases_cmd->require_subcommand(1);
  std::string family = "star";
  std::int64_t n_max = 4, w_max = 6, bn = 0, bw = 0;
  auto* check_cmd = bases_cmd->add_subcommand("check", "Certify transition matrices up to (n-max, w-max)");
  check_cmd->add_option("--family", family, "star or path")
      ->check(CLI::IsMember({"star", "path"}))
      ->capture_default_str();
  check_cmd->add_option("--n-max", n_max, "Largest vertex count")->capture_default_str();
  check_cmd->add_option("--w-max", w_max, "Largest total weight")->capture_default_str();
  auto* matrix_cmd = bases_cmd->add_subcommand("matrix", "Print the transition matrix at multidegree (n, w)");
  matrix_cmd->add_option("--family", family, "star or path")
      ->check(CLI::IsMember({"star", "path"}))
      ->capture_default_str();
  matrix_cmd->add_option("n", bn, "Vertex count")->required();
  matrix_cmd->add_option("w", bw, "Total weight")->required();

  std::size_t rf_n = 5, rf_r = 1;
  std::int64_t rf_weight = 3;
  std::uint64_t rf_seed = 0;
  auto* rf_cmd = app.add_subcommand("random-forest", "Print a random weighted forest");
  rf_cmd->add_option("--n", rf_n, "Vertex count")->capture_default_str();
  rf_cmd->add_option("--max-weight", rf_weight, "Largest weight coordinate")->capture_default_str();
  rf_cmd->add_option("--r", rf_r, "Weight dimension")->capture_default_str();
  rf_cmd->add_option("--seed", rf_seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute_cmd->parsed()) {
      compute(path, invariant, truncate, limits);
    } else if (hopf_cmd->parsed()) {
      hopf(path, op, limits);
    } else if (verify_cmd->parsed()) {
      vo.mode = mode == "random" ? MM_VERIFY_RANDOM : MM_VERIFY_EXHAUSTIVE;
      vo.limits = limits;
      vo.corrupt_beta = corrupt ? 1 : 0;
      char* report = nullptr;
      const mm_status s = mm_verify(&vo, &report);
      if (report != nullptr) print(report);
      check(s);
    } else if (app.got_subcommand("counterexample")) {
      char* report = nullptr;
      const mm_status s = mm_counterexample(&report);
      if (report != nullptr) print(report);
      check(s);
    } else if (check_cmd->parsed()) {
      char* report = nullptr;
      const mm_status s = mm_bases_check(family.c_str(), n_max, w_max, &limits, &report);
      if (report != nullptr) print(report);
      check(s);
    } else if (matrix_cmd->parsed()) {
      char* out = nullptr;
      check(mm_basis_matrix(family.c_str(), bn, bw, &limits, &out));
      std::string text(out);
      mm_string_free(out);
      std::cout << text;
    } else if (rf_cmd->parsed()) {
      mm_graph* g = nullptr;
      check(mm_graph_random_forest(rf_n, rf_weight, rf_r, rf_seed, &g));
      emit(mm_graph_serialize, Graph(g));
    }
  } catch (const Failure& f) {
    const std::string msg = mm_last_error();
    if (!msg.empty()) std::cerr << "error: " << mm_status_name(f.status) << ": " << msg << '\n';
    return exit_code(f.status);
  }
  return 0;
}
