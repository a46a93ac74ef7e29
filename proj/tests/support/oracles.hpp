#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code paths with the library beyond its value types.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "macmahon/algebra.hpp"
#include "macmahon/graphs.hpp"
#include "macmahon/laurent.hpp"

namespace oracle {

using macmahon::Coeff;
using macmahon::LaurentPolynomial;
using macmahon::MacMahonElement;
using macmahon::Vec;
using macmahon::VectorPartition;
using macmahon::WeightedGraph;

/// Pascal's triangle.
Coeff binomial(std::int64_t n, std::int64_t k);

/// Every vector partition of target, found by listing ordered sequences of
/// parts and deduplicating after sorting.
std::set<VectorPartition> vector_partitions(const Vec& target, bool positive_parts);

/// Number of position subsets J with Lambda|J equal to Omega.
Coeff vp_binomial(const VectorPartition& lambda, const VectorPartition& omega);

/// Connected components of (V, S) by depth-first search; returns the parts
/// (size, weight..) unsorted.
std::vector<Vec> component_parts(const WeightedGraph& g, std::uint64_t edge_mask);

/// CMF from the definition via depth-first components.
MacMahonElement cmf(const WeightedGraph& g);

/// beta table by subset enumeration and depth-first components.
std::map<VectorPartition, Coeff> beta(const WeightedGraph& g);

/// EGDP by looping over vertex subsets and classifying every edge.
LaurentPolynomial egdp(const WeightedGraph& g);

/// Proper colorings with k colors by recursive backtracking.
LaurentPolynomial colorings(const WeightedGraph& g, unsigned k);

/// Truncation of p_Lambda to k alphabets by summing over all maps parts -> colors.
LaurentPolynomial truncate(const MacMahonElement& e, unsigned k);

/// A fixed corpus of small graphs: paths, cycles, stars, complete graphs,
/// and random graphs, all with n <= max_n.
std::vector<WeightedGraph> corpus(std::size_t max_n, std::size_t count, std::uint64_t seed);

/// Random element of Mac^2 with terms of grade <= bound.
MacMahonElement random_element(std::mt19937_64& rng, const Vec& bound, int terms);

}  // namespace oracle
