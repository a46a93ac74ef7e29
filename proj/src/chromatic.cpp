#include "macmahon/chromatic.hpp"

#include <bit>

namespace macmahon {

namespace {

void check_edge_cap(const WeightedGraph& g, const Limits& limits) {
  if (g.edge_count() > limits.max_edges || g.edge_count() > 63)
    fail(Errc::cap_exceeded, "graph has " + std::to_string(g.edge_count()) +
                                 " edges; edge-subset enumeration is capped at " +
                                 std::to_string(std::min<std::size_t>(limits.max_edges, 63)));
}

void check_vertex_cap(const WeightedGraph& g, const Limits& limits) {
  if (g.vertex_count() > limits.max_vertices || g.vertex_count() > 63)
    fail(Errc::cap_exceeded, "graph has " + std::to_string(g.vertex_count()) +
                                 " vertices; vertex-subset enumeration is capped at " +
                                 std::to_string(std::min<std::size_t>(limits.max_vertices, 63)));
}

}  // namespace

MacMahonElement cmf(const WeightedGraph& g, const Limits& limits) {
  check_edge_cap(g, limits);
  MacMahonElement out(g.weight_dim() + 1);
  const std::uint64_t subsets = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < subsets; ++mask)
    out.add_term(bitype_of_mask(g, mask), std::popcount(mask) % 2 == 0 ? 1 : -1);
  return out;
}

BetaTable beta_table(const WeightedGraph& f, const Limits& limits) {
  if (!is_forest(f)) fail(Errc::domain, "beta_table: graph contains a cycle");
  check_edge_cap(f, limits);
  BetaTable beta;
  const std::uint64_t subsets = std::uint64_t{1} << f.edge_count();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    auto [it, inserted] = beta.try_emplace(bitype_of_mask(f, mask), 1);
    if (!inserted) it->second = checked_add(it->second, 1);
  }
  return beta;
}

MacMahonElement csf_specialize(const MacMahonElement& e, Keep keep) {
  const std::size_t m = e.width();
  if (m < 2) fail(Errc::invalid_argument, "csf_specialize needs width at least 2");
  std::vector<std::size_t> coords;
  if (keep == Keep::cardinality) {
    coords.push_back(0);
  } else {
    for (std::size_t i = 1; i < m; ++i) coords.push_back(i);
  }
  MacMahonElement out(coords.size());
  for (const auto& [lambda, c] : e.terms()) out.add_term(lambda.project(coords), c);
  return out;
}

std::vector<std::string> egdp_variables(std::size_t r) {
  std::vector<std::string> vars{"w", "x"};
  if (r == 1) {
    vars.push_back("y");
  } else {
    for (std::size_t i = 1; i <= r; ++i) vars.push_back("y" + std::to_string(i));
  }
  vars.push_back("z");
  return vars;
}

LaurentPolynomial egdp(const WeightedGraph& g, const Limits& limits) {
  check_vertex_cap(g, limits);
  const std::size_t n = g.vertex_count();
  const std::size_t r = g.weight_dim();
  LaurentPolynomial::Exponents exps(r + 3);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<std::pair<LaurentPolynomial::Exponents, Coeff>> terms;
  terms.reserve(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto counts = ext_int_of_mask(g, mask);
    std::fill(exps.begin(), exps.end(), 0);
    exps[0] = static_cast<std::int64_t>(counts.external);
    exps[1] = std::popcount(mask);
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1u)
        for (std::size_t i = 0; i < r; ++i) exps[2 + i] += g.weight(v)[i];
    exps[r + 2] = static_cast<std::int64_t>(counts.internal);
    terms.emplace_back(exps, 1);
  }
  return LaurentPolynomial::from_terms(egdp_variables(r), std::move(terms));
}

LaurentPolynomial egdp_specialize(const LaurentPolynomial& p, GdpKind kind) {
  const auto& vars = p.variables();
  if (vars.size() < 4 || vars.front() != "w" || vars[1] != "x" || vars.back() != "z")
    fail(Errc::invalid_argument, "egdp_specialize: input is not in EGDP variables (w, x, y.., z)");
  const std::size_t r = vars.size() - 3;
  if (vars != egdp_variables(r))
    fail(Errc::invalid_argument, "egdp_specialize: input is not in EGDP variables (w, x, y.., z)");
  if (kind == GdpKind::weighted) {
    if (r != 1) fail(Errc::inapplicable, "the weighted GDP is defined only for r = 1");
    return p.specialize("x", 1).renamed({{"y", "x"}, {"w", "y"}}).with_variables({"x", "y", "z"});
  }
  LaurentPolynomial q = p;
  for (std::size_t i = 2; i < 2 + r; ++i) q = q.specialize(vars[i], 1);
  return q.renamed({{"w", "y"}}).with_variables({"x", "y", "z"});
}

LaurentPolynomial coloring_oracle(const WeightedGraph& g, unsigned k, const Limits& limits) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.weight_dim() + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(total, std::uint64_t{k}, &total) || total > limits.max_colorings)
      fail(Errc::cap_exceeded, "coloring enumeration exceeds the cap of " +
                                   std::to_string(limits.max_colorings) + " colorings");
  }

  LaurentPolynomial out(alphabet_variables(m, k));
  if (n > 0 && k == 0) return out;
  std::vector<unsigned> color(n, 0);
  LaurentPolynomial::Exponents exps(out.variables().size());
  while (true) {
    bool proper = true;
    for (const auto& [a, b] : g.edges()) {
      if (color[a] == color[b]) {
        proper = false;
        break;
      }
    }
    if (proper) {
      std::fill(exps.begin(), exps.end(), 0);
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t base = color[v] * m;
        exps[base] += 1;
        for (std::size_t i = 1; i < m; ++i) exps[base + i] += g.weight(v)[i - 1];
      }
      out.add_term(exps, 1);
    }
    std::size_t v = 0;
    while (v < n && color[v] + 1 == k) color[v++] = 0;
    if (v == n) break;
    ++color[v];
  }
  return out;
}

}  // namespace macmahon
