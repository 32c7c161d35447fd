#pragma once

#include "corewalk/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

namespace corewalk {

using BigInt = boost::multiprecision::cpp_int;

// Number of labeled forests on k nodes in which every component is a tree
// with at least 2 nodes. F(0)=1, F(1)=0, F(2)=1, F(3)=3, F(4)=19, ...
BigInt forest_count(int k);

// Uniform labeled tree on the given node ids (Prufer-sequence decode).
void add_uniform_tree(Graph& g, const std::vector<NodeId>& nodes, std::mt19937_64& rng);

// Exactly uniform draw from all graphs whose core sequence is c, for c1 <= 1:
// the core-1 nodes form a forest of trees of size >= 2, core-0 nodes are
// isolated. Components are drawn from their exact size distribution, then
// filled with uniform spanning trees.
Graph sample_forest_core1(const CoreSequence& c, std::mt19937_64& rng);

}  // namespace corewalk
