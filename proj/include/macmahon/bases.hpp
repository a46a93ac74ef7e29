#pragma once

#include <functional>
#include <string>
#include <vector>

#include "macmahon/algebra.hpp"
#include "macmahon/chromatic.hpp"
#include "macmahon/graphs.hpp"

namespace macmahon {

/// (n, w) -> connected weighted graph with n vertices and total weight w.
using GraphFamily = std::function<WeightedGraph(std::int64_t n, std::int64_t w)>;

/// Star on n vertices: center weight w - n + 1, leaves weight 1. Needs w >= n >= 1.
WeightedGraph star_family(std::int64_t n, std::int64_t w);
/// Path on n vertices: first vertex weight w - n + 1, the rest weight 1.
WeightedGraph path_family(std::int64_t n, std::int64_t w);

/// Partitions of u with every part (n_i, w_i) satisfying 1 <= n_i <= w_i:
/// exactly the bitypes a positively weighted graph can have. Canonical order.
std::vector<VectorPartition> realizable_partitions(const Vec& u);

struct TransitionMatrix {
  std::vector<VectorPartition> index;  // rows and columns
  std::vector<std::vector<Coeff>> rows;

  /// One line per row, entries tab separated.
  std::string serialize() const;
};

/// Row Lambda holds the power-sum coefficients of cmf(G_Lambda), G_Lambda being
/// the disjoint union of family(n_i, w_i) over the parts of Lambda.
TransitionMatrix basis_matrix(const GraphFamily& family, const Vec& u, const Limits& limits = {});

/// True iff the square matrix is upper or lower triangular with every
/// diagonal entry equal to +1 or -1. Throws on a non-square matrix.
bool check_chromatic_basis(const std::vector<std::vector<Coeff>>& matrix);

}  // namespace macmahon
