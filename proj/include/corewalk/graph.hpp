#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace corewalk {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;

// Labeled undirected simple graph on nodes 0..n-1. Neighbor lists are kept
// sorted, so edge membership is a binary search and edge iteration is
// deterministic.
class Graph {
  public:
    Graph() = default;
    explicit Graph(NodeId n) : adj_(n) {}

    NodeId num_nodes() const { return static_cast<NodeId>(adj_.size()); }
    std::size_t num_edges() const { return m_; }

    bool has_edge(NodeId u, NodeId v) const;
    // Both return whether the graph changed.
    bool add_edge(NodeId u, NodeId v);
    bool remove_edge(NodeId u, NodeId v);

    int degree(NodeId u) const { return static_cast<int>(adj_[u].size()); }
    const std::vector<NodeId>& neighbors(NodeId u) const { return adj_[u]; }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

  private:
    std::vector<std::vector<NodeId>> adj_;
    std::size_t m_ = 0;
};

// Validates ids, rejects self-loops, deduplicates both orientations.
Graph build_graph(NodeId n, const std::vector<Edge>& edges);

// Non-increasing sequence of core values.
struct CoreSequence {
    std::vector<int> values;

    // Throws if v is not non-increasing or has negative entries.
    static CoreSequence sorted(std::vector<int> v);
    // Sorts a copy non-increasingly.
    static CoreSequence from_unsorted(std::vector<int> v);

    NodeId size() const { return static_cast<NodeId>(values.size()); }
    int c1() const { return values.empty() ? 0 : values.front(); }
    // Multiplicity of the top value (0 for the empty sequence).
    NodeId top_multiplicity() const;

    bool operator==(const CoreSequence&) const = default;
};

struct CoreDecomposition {
    std::vector<int> core_of;           // per-node core value
    int max_core = 0;                   // c* (0 for the empty graph)
    NodeId top_core_size = 0;           // nodes with core value == max_core
    std::vector<NodeId> deletion_order; // a valid core deletion order

    // Core values sorted non-increasingly.
    CoreSequence sequence() const;
};

// Bucket peeling with ties broken by smallest node id, so deletion_order is
// deterministic. O((n+m) log n).
CoreDecomposition core_decomposition(const Graph& g);

// Reusable buffers for core_values(); avoids reallocation in hot loops.
struct PeelScratch {
    std::vector<int> deg, pos, vert, bin;
};

// Core values only, via linear-time bin peeling (Batagelj-Zaversnik style).
// Same values as core_decomposition, no deterministic order guarantee.
void core_values(const Graph& g, std::vector<int>& out, PeelScratch& scratch);
std::vector<int> core_values(const Graph& g);

// Bijection between the original node ids and core-sorted internal ids.
struct LabelMap {
    std::vector<NodeId> to_internal; // indexed by original id
    std::vector<NodeId> to_external; // indexed by internal id
};

// Relabels so that smaller ids have core values >= those of larger ids
// (ties by original id). With this ordering n-1, n-2, ..., 0 is a core
// deletion order.
std::pair<Graph, LabelMap> relabel_by_core(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);
// Non-increasing copy, for plots.
std::vector<int> sorted_degree_sequence(const Graph& g);

}  // namespace corewalk
