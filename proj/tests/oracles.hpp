#pragma once

// Test-only reference implementations, kept independent of the library's
// algorithmic paths so they can serve as oracles.

#include "corewalk/analysis.hpp"
#include "corewalk/chain.hpp"
#include "corewalk/graph.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace corewalk::testing {

// Core values straight from the definition: for each k, membership in the
// maximal subgraph of minimum degree k found by fixed-point deletion.
std::vector<int> core_oracle(const Graph& g);

// All 2^C(n,2) labeled simple graphs on n nodes.
std::vector<Graph> all_graphs(NodeId n);

// Canonical key for graphs on up to 11 nodes: one bit per node pair.
std::uint64_t edge_mask(const Graph& g);

// Non-induced pattern counts by explicit subgraph-isomorphism enumeration.
SubgraphCensus census_oracle(const Graph& g);

// Every valid move out of g, canonically encoded, found by brute force over
// node tuples. Top-core switches are included only when the top core value
// is 2, mirroring the chain's move set.
std::vector<Move> enumerate_valid_moves(const Graph& g);

bool move_less(const Move& a, const Move& b);

// Total-variation distance of empirical counts from uniform over
// counts.size() states.
double tv_from_uniform(const std::vector<std::uint64_t>& counts, std::uint64_t total_draws);

Graph random_graph(NodeId n, double p, std::mt19937_64& rng);

// Random realizable core sequence with n nodes and values <= max_value.
CoreSequence random_realizable_sequence(NodeId n, int max_value, std::mt19937_64& rng);

}  // namespace corewalk::testing
