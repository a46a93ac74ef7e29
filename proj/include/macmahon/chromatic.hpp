#pragma once

#include <cstdint>
#include <map>

#include "macmahon/algebra.hpp"
#include "macmahon/graphs.hpp"
#include "macmahon/laurent.hpp"

namespace macmahon {

/// Guards for the exponential enumerations. Exceeding one is an error.
struct Limits {
  std::size_t max_edges = 30;               // 2^e edge subsets
  std::size_t max_vertices = 25;            // 2^n vertex subsets
  std::uint64_t max_colorings = 10'000'000;  // k^n colorings
};

/// beta_Lambda(F): number of edge subsets of a forest with bitype Lambda.
using BetaTable = std::map<VectorPartition, Coeff>;

/// Chromatic MacMahon function: sum over S subset of E of (-1)^|S| p_bitype(S).
/// Width r + 1.
MacMahonElement cmf(const WeightedGraph& g, const Limits& limits = {});

/// Throws Errc::domain if f has a cycle.
BetaTable beta_table(const WeightedGraph& f, const Limits& limits = {});

enum class Keep { cardinality, weight };

/// Deletes the weight coordinates (keep cardinality: the CSF) or the
/// cardinality coordinate (keep weight: the weighted CSF) from every part.
MacMahonElement csf_specialize(const MacMahonElement& e, Keep keep);

/// sum over A subset of V of w^ext(A) x^|A| y^wt(A) z^int(A), in variables
/// (w, x, y, z) for r = 1 or (w, x, y1..yr, z).
LaurentPolynomial egdp(const WeightedGraph& g, const Limits& limits = {});

std::vector<std::string> egdp_variables(std::size_t r);

enum class GdpKind {
  weighted,  // x^wt(A) y^ext(A) z^int(A); needs r = 1
  plain,     // x^|A| y^ext(A) z^int(A)
};
LaurentPolynomial egdp_specialize(const LaurentPolynomial& p, GdpKind kind);

/// Exhaustive sum over proper colorings V -> [k] of prod_v x_c(v) y_c(v)^wt(v),
/// in alphabet_variables(r + 1, k).
LaurentPolynomial coloring_oracle(const WeightedGraph& g, unsigned k, const Limits& limits = {});

}  // namespace macmahon
