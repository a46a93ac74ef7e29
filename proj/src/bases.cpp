#include "macmahon/bases.hpp"

#include <algorithm>
#include <sstream>

namespace macmahon {

namespace {

void check_family_arguments(std::int64_t n, std::int64_t w) {
  if (n < 1) fail(Errc::invalid_argument, "family graphs need at least one vertex");
  if (w < n)
    fail(Errc::invalid_argument, "no positive weighting of " + std::to_string(n) + " vertices has total weight " +
                                     std::to_string(w));
}

}  // namespace

WeightedGraph star_family(std::int64_t n, std::int64_t w) {
  check_family_arguments(n, w);
  std::vector<Vec> weights(static_cast<std::size_t>(n), Vec{1});
  weights[0] = {w - n + 1};
  return star_graph(weights);
}

WeightedGraph path_family(std::int64_t n, std::int64_t w) {
  check_family_arguments(n, w);
  std::vector<Vec> weights(static_cast<std::size_t>(n), Vec{1});
  weights[0] = {w - n + 1};
  return path_graph(weights);
}

std::vector<VectorPartition> realizable_partitions(const Vec& u) {
  if (u.size() != 2) fail(Errc::invalid_argument, "realizable_partitions: multidegree must have width 2");
  if (u[0] < 1 || u[1] < 1) return {};
  auto all = vp_enumerate(u, PartDomain::positive);
  std::erase_if(all, [](const VectorPartition& p) {
    for (std::size_t i = 0; i < p.length(); ++i)
      if (p.part(i)[1] < p.part(i)[0]) return true;
    return false;
  });
  return all;
}

std::string TransitionMatrix::serialize() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0) out << '\t';
      out << rows[i][j];
    }
    out << '\n';
  }
  return out.str();
}

TransitionMatrix basis_matrix(const GraphFamily& family, const Vec& u, const Limits& limits) {
  TransitionMatrix m;
  m.index = realizable_partitions(u);
  for (const auto& lambda : m.index) {
    WeightedGraph g(1);
    for (std::size_t i = 0; i < lambda.length(); ++i) {
      const auto n = lambda.part(i)[0];
      const auto w = lambda.part(i)[1];
      auto member = family(n, w);
      if (member.weight_dim() != 1 || static_cast<std::int64_t>(member.vertex_count()) != n ||
          member.total_weight() != Vec{w})
        fail(Errc::invalid_argument, "family graph for (" + std::to_string(n) + "," + std::to_string(w) +
                                         ") has the wrong size or weight");
      if (component_count(member) != 1)
        fail(Errc::invalid_argument, "family graph for (" + std::to_string(n) + "," + std::to_string(w) +
                                         ") is disconnected");
      g = disjoint_union(g, member);
    }
    const auto x = cmf(g, limits);
    std::vector<Coeff> row;
    row.reserve(m.index.size());
    for (const auto& column : m.index) row.push_back(x.coefficient(column));
    Coeff accounted = 0;
    for (auto c : row) accounted += c != 0 ? 1 : 0;
    if (static_cast<std::size_t>(accounted) != x.size())
      fail(Errc::domain, "cmf of a family union has terms outside the realizable partitions of the multidegree");
    m.rows.push_back(std::move(row));
  }
  return m;
}

bool check_chromatic_basis(const std::vector<std::vector<Coeff>>& matrix) {
  const std::size_t size = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != size) fail(Errc::invalid_argument, "check_chromatic_basis: matrix is not square");
  bool upper = true, lower = true;
  for (std::size_t i = 0; i < size; ++i) {
    if (matrix[i][i] != 1 && matrix[i][i] != -1) return false;
    for (std::size_t j = 0; j < size; ++j) {
      if (matrix[i][j] == 0) continue;
      if (j < i) upper = false;
      if (j > i) lower = false;
    }
  }
  return upper || lower;
}

}  // namespace macmahon
