#include "macmahon/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace macmahon {

namespace {

// Union-find whose root is always the minimum vertex of its class.
class MinRootUnionFind {
 public:
  explicit MinRootUnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

std::size_t edge_index(const WeightedGraph& g, const Edge& e) {
  Edge key = e.first < e.second ? e : Edge{e.second, e.first};
  auto it = std::lower_bound(g.edges().begin(), g.edges().end(), key);
  if (it == g.edges().end() || *it != key)
    fail(Errc::invalid_argument,
         "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") is not in the graph");
  return static_cast<std::size_t>(it - g.edges().begin());
}

std::uint64_t vertex_mask_of(const WeightedGraph& g, std::span<const Vertex> subset) {
  if (g.vertex_count() > 64) fail(Errc::cap_exceeded, "vertex subsets support at most 64 vertices");
  std::uint64_t mask = 0;
  for (Vertex v : subset) {
    if (v >= g.vertex_count()) fail(Errc::invalid_argument, "vertex " + std::to_string(v) + " out of range");
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

ComponentDecomposition decompose(const WeightedGraph& g, std::uint64_t edge_mask) {
  const std::size_t n = g.vertex_count();
  MinRootUnionFind uf(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if ((edge_mask >> i) & 1u) uf.unite(g.edges()[i].first, g.edges()[i].second);
  ComponentDecomposition out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (Vertex v = 0; v < n; ++v) {
    Vertex root = uf.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.components.size();
      out.components.push_back({{}, Vec(g.weight_dim(), 0)});
    }
    auto& c = out.components[slot[root]];
    c.vertices.push_back(v);
    for (std::size_t k = 0; k < g.weight_dim(); ++k) c.weight[k] += g.weight(v)[k];
  }
  return out;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t r) : r_(r) {
  if (r == 0) fail(Errc::invalid_argument, "weight dimension r must be at least 1");
}

WeightedGraph::WeightedGraph(std::size_t r, std::vector<Vec> weights, std::vector<Edge> edges)
    : r_(r), weights_(std::move(weights)) {
  if (r == 0) fail(Errc::invalid_argument, "weight dimension r must be at least 1");
  for (std::size_t v = 0; v < weights_.size(); ++v) {
    if (weights_[v].size() != r)
      fail(Errc::invalid_argument, "weight of vertex " + std::to_string(v) + " has length " +
                                       std::to_string(weights_[v].size()) + ", expected " + std::to_string(r));
    for (auto c : weights_[v])
      if (c < 1) fail(Errc::invalid_argument, "weight of vertex " + std::to_string(v) + " is not positive");
  }
  const auto n = weights_.size();
  for (auto& e : edges) {
    if (e.first >= n || e.second >= n)
      fail(Errc::invalid_argument, "edge endpoint out of range");
    if (e.first == e.second) fail(Errc::invalid_argument, "loop at vertex " + std::to_string(e.first));
    if (e.second < e.first) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(Errc::invalid_argument, "repeated edge");
  edges_ = std::move(edges);
}

Vec WeightedGraph::total_weight() const {
  Vec total(r_, 0);
  for (const auto& w : weights_)
    for (std::size_t k = 0; k < r_; ++k) total[k] += w[k];
  return total;
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const {
  Edge key = u < v ? Edge{u, v} : Edge{v, u};
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

ComponentDecomposition components(const WeightedGraph& g, std::span<const Edge> subset) {
  std::uint64_t mask = 0;
  if (g.edge_count() > 64) fail(Errc::cap_exceeded, "edge subsets support at most 64 edges");
  for (const auto& e : subset) mask |= std::uint64_t{1} << edge_index(g, e);
  return decompose(g, mask);
}

VectorPartition bitype_of_mask(const WeightedGraph& g, std::uint64_t edge_mask) {
  const std::size_t n = g.vertex_count();
  const std::size_t r = g.weight_dim();
  MinRootUnionFind uf(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if ((edge_mask >> i) & 1u) uf.unite(g.edges()[i].first, g.edges()[i].second);
  Vec data;
  data.reserve(n * (r + 1));
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (Vertex v = 0; v < n; ++v) {
    Vertex root = uf.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = data.size();
      data.resize(data.size() + r + 1, 0);
    }
    auto* p = data.data() + slot[root];
    p[0] += 1;
    for (std::size_t k = 0; k < r; ++k) p[k + 1] += g.weight(v)[k];
  }
  return VectorPartition::canonicalize_flat(r + 1, std::move(data));
}

VectorPartition bitype(const WeightedGraph& g, std::span<const Edge> subset) {
  const auto dec = components(g, subset);
  std::vector<Vec> parts;
  for (const auto& c : dec.components) {
    Vec p{static_cast<std::int64_t>(c.vertices.size())};
    p.insert(p.end(), c.weight.begin(), c.weight.end());
    parts.push_back(std::move(p));
  }
  return VectorPartition::canonicalize(g.weight_dim() + 1, parts);
}

WeightedGraph induced_by_mask(const WeightedGraph& g, std::uint64_t vertex_mask) {
  std::vector<Vertex> index(g.vertex_count(), UINT32_MAX);
  std::vector<Vec> weights;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if ((vertex_mask >> v) & 1u) {
      index[v] = static_cast<Vertex>(weights.size());
      weights.push_back(g.weight(v));
    }
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges())
    if (index[a] != UINT32_MAX && index[b] != UINT32_MAX) edges.emplace_back(index[a], index[b]);
  return WeightedGraph(g.weight_dim(), std::move(weights), std::move(edges));
}

WeightedGraph induced(const WeightedGraph& g, std::span<const Vertex> subset) {
  return induced_by_mask(g, vertex_mask_of(g, subset));
}

EdgeCounts ext_int_of_mask(const WeightedGraph& g, std::uint64_t vertex_mask) {
  EdgeCounts counts;
  for (const auto& [a, b] : g.edges()) {
    const bool ina = (vertex_mask >> a) & 1u;
    const bool inb = (vertex_mask >> b) & 1u;
    if (ina && inb) ++counts.internal;
    else if (ina != inb) ++counts.external;
  }
  return counts;
}

EdgeCounts ext_int(const WeightedGraph& g, std::span<const Vertex> subset) {
  return ext_int_of_mask(g, vertex_mask_of(g, subset));
}

std::size_t component_count(const WeightedGraph& g) {
  MinRootUnionFind uf(g.vertex_count());
  std::size_t count = g.vertex_count();
  for (const auto& [a, b] : g.edges())
    if (uf.unite(a, b)) --count;
  return count;
}

bool is_forest(const WeightedGraph& g) {
  MinRootUnionFind uf(g.vertex_count());
  for (const auto& [a, b] : g.edges())
    if (!uf.unite(a, b)) return false;
  return true;
}

std::vector<Edge> prufer_decode(std::span<const Vertex> sequence, std::size_t n) {
  if (n < 2 || sequence.size() != n - 2) fail(Errc::invalid_argument, "Pruefer sequence must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) fail(Errc::invalid_argument, "Pruefer sequence entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : sequence) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  edges.emplace_back(a, b);
  return edges;
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const std::vector<Edge>&)>& fn) {
  if (n == 0) return;
  if (n == 1) {
    fn({});
    return;
  }
  if (n == 2) {
    fn({{0, 1}});
    return;
  }
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    fn(prufer_decode(seq, n));
    std::size_t k = seq.size();
    while (k > 0 && seq[k - 1] == n - 1) seq[--k] = 0;
    if (k == 0) return;
    ++seq[k - 1];
  }
}

WeightedGraph random_forest(std::size_t n, std::int64_t max_weight, std::size_t r, std::uint64_t seed) {
  if (max_weight < 1) fail(Errc::invalid_argument, "random_forest: max_weight must be at least 1");
  if (r < 1) fail(Errc::invalid_argument, "random_forest: r must be at least 1");
  if (n > 64) fail(Errc::invalid_argument, "random_forest: at most 64 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> weight_dist(1, max_weight);
  std::vector<Vec> weights(n, Vec(r));
  for (auto& w : weights)
    for (auto& c : w) c = weight_dist(rng);
  std::vector<Edge> edges;
  if (n >= 2) {
    std::uniform_int_distribution<Vertex> vertex_dist(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> seq(n - 2);
    for (auto& s : seq) s = vertex_dist(rng);
    std::bernoulli_distribution keep(0.75);
    for (const auto& e : prufer_decode(seq, n))
      if (keep(rng)) edges.push_back(e);
  }
  return WeightedGraph(r, std::move(weights), std::move(edges));
}

WeightedGraph path_graph(const std::vector<Vec>& weights) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < weights.size(); ++v) edges.emplace_back(v - 1, v);
  return WeightedGraph(weights.empty() ? 1 : weights.front().size(), weights, std::move(edges));
}

WeightedGraph cycle_graph(const std::vector<Vec>& weights) {
  if (weights.size() < 3) fail(Errc::invalid_argument, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < weights.size(); ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, static_cast<Vertex>(weights.size() - 1));
  return WeightedGraph(weights.front().size(), weights, std::move(edges));
}

WeightedGraph star_graph(const std::vector<Vec>& weights) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < weights.size(); ++v) edges.emplace_back(0, v);
  return WeightedGraph(weights.empty() ? 1 : weights.front().size(), weights, std::move(edges));
}

WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.weight_dim() != b.weight_dim()) fail(Errc::invalid_argument, "disjoint_union: weight dimension mismatch");
  std::vector<Vec> weights = a.weights();
  weights.insert(weights.end(), b.weights().begin(), b.weights().end());
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return WeightedGraph(a.weight_dim(), std::move(weights), std::move(edges));
}

WeightedGraph parse_graph(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::parse, std::string("graph file is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) fail(Errc::parse, "graph file must be a JSON object");
    for (const auto& [key, value] : doc.items())
      if (key != "n" && key != "r" && key != "weights" && key != "edges")
        fail(Errc::parse, "unknown field '" + key + "' in graph file");
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 0)
      fail(Errc::parse, "field 'n' must be a nonnegative integer");
    const auto n = doc["n"].get<std::size_t>();
    std::size_t r = 1;
    if (doc.contains("r")) {
      if (!doc["r"].is_number_integer() || doc["r"].get<std::int64_t>() < 1)
        fail(Errc::parse, "field 'r' must be a positive integer");
      r = doc["r"].get<std::size_t>();
    }
    std::vector<Vec> weights;
    const json weights_json = doc.value("weights", json::array());
    if (!weights_json.is_array()) fail(Errc::parse, "field 'weights' must be a list");
    if (weights_json.size() != n)
      fail(Errc::parse, "field 'weights' has " + std::to_string(weights_json.size()) + " entries, expected " +
                            std::to_string(n));
    for (const auto& w : weights_json) {
      if (w.is_number_integer() && r == 1) {
        weights.push_back({w.get<std::int64_t>()});
      } else if (w.is_array() && std::all_of(w.begin(), w.end(), [](const json& c) { return c.is_number_integer(); })) {
        weights.push_back(w.get<Vec>());
      } else {
        fail(Errc::parse, "malformed weight vector");
      }
    }
    std::vector<Edge> edges;
    const json edges_json = doc.value("edges", json::array());
    if (!edges_json.is_array()) fail(Errc::parse, "field 'edges' must be a list");
    for (const auto& e : edges_json) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
          e[0].get<std::int64_t>() < 0 || e[1].get<std::int64_t>() < 0)
        fail(Errc::parse, "malformed edge " + e.dump());
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return WeightedGraph(r, std::move(weights), std::move(edges));
  } catch (const Error& e) {
    if (e.code() == Errc::parse) throw;
    fail(Errc::parse, e.what());
  } catch (const json::exception& e) {
    fail(Errc::parse, e.what());
  }
}

std::string serialize_graph(const WeightedGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.vertex_count();
  doc["r"] = g.weight_dim();
  doc["weights"] = g.weights();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = edges;
  return doc.dump();
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse, "cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace macmahon
