#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "macmahon/algebra.hpp"

namespace macmahon {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with weights in P^r.
/// Edges are stored normalized (first < second) and sorted.
class WeightedGraph {
 public:
  /// Empty graph with weight dimension r.
  explicit WeightedGraph(std::size_t r = 1);
  /// Validates: r >= 1, every weight of length r with coordinates >= 1,
  /// no loops, no repeated edges, endpoints in range.
  WeightedGraph(std::size_t r, std::vector<Vec> weights, std::vector<Edge> edges);

  std::size_t vertex_count() const { return weights_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t weight_dim() const { return r_; }
  const std::vector<Vec>& weights() const { return weights_; }
  const Vec& weight(Vertex v) const { return weights_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  Vec total_weight() const;
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t r_;
  std::vector<Vec> weights_;
  std::vector<Edge> edges_;
};

struct Component {
  std::vector<Vertex> vertices;  // ascending
  Vec weight;
};

/// Connected components ordered by their minimum vertex.
struct ComponentDecomposition {
  std::vector<Component> components;
};

/// Components of (V, S). Throws if S contains a pair that is not an edge of g.
ComponentDecomposition components(const WeightedGraph& g, std::span<const Edge> subset);

/// Vector partition with one part (|C|, wt(C)) per component of (V, S).
VectorPartition bitype(const WeightedGraph& g, std::span<const Edge> subset);

/// Same as bitype() with S given as a bitmask over edge indices (bit i <-> edges()[i]).
VectorPartition bitype_of_mask(const WeightedGraph& g, std::uint64_t edge_mask);

/// Subgraph induced by A, re-indexed 0..|A|-1 in ascending vertex order.
WeightedGraph induced(const WeightedGraph& g, std::span<const Vertex> subset);
WeightedGraph induced_by_mask(const WeightedGraph& g, std::uint64_t vertex_mask);

struct EdgeCounts {
  std::size_t external = 0;  // exactly one endpoint in A
  std::size_t internal = 0;  // both endpoints in A
  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};
EdgeCounts ext_int(const WeightedGraph& g, std::span<const Vertex> subset);
EdgeCounts ext_int_of_mask(const WeightedGraph& g, std::uint64_t vertex_mask);

bool is_forest(const WeightedGraph& g);
std::size_t component_count(const WeightedGraph& g);

/// Uniform random labeled tree (random Pruefer sequence), each edge then
/// deleted independently with probability 1/4, weights i.i.d. uniform in
/// [1, max_weight]^r. Deterministic in the seed.
WeightedGraph random_forest(std::size_t n, std::int64_t max_weight, std::size_t r, std::uint64_t seed);

/// Edges of the labeled tree on n >= 2 vertices with the given Pruefer sequence.
std::vector<Edge> prufer_decode(std::span<const Vertex> sequence, std::size_t n);

/// Calls fn with the edge list of every labeled tree on n vertices
/// (n^(n-2) of them, by Pruefer sequence; one tree each for n = 1, 2).
void for_each_labeled_tree(std::size_t n, const std::function<void(const std::vector<Edge>&)>& fn);

WeightedGraph path_graph(const std::vector<Vec>& weights);
WeightedGraph cycle_graph(const std::vector<Vec>& weights);
/// Star with vertex 0 as center.
WeightedGraph star_graph(const std::vector<Vec>& weights);
WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b);

/// Graph file: JSON object {"n": .., "r": .., "weights": [[..], ..], "edges": [[u, v], ..]}.
/// "r" defaults to 1; for r = 1 a weight may also be a bare integer.
WeightedGraph parse_graph(const std::string& text);
/// Canonical one-line form, inverse of parse_graph on canonical text.
std::string serialize_graph(const WeightedGraph& g);
WeightedGraph load_graph(const std::string& path);

}  // namespace macmahon
