#pragma once

#include "corewalk/chain.hpp"
#include "corewalk/graph.hpp"

#include <random>
#include <vector>

namespace corewalk {

// Degree-preserving MCMC over vertex-labeled simple graphs: propose a double
// edge swap, self-loop whenever it would create a loop or parallel edge.
class ConfigModelWalker {
  public:
    explicit ConfigModelWalker(Graph g);

    // One swap attempt; returns true if the graph changed.
    bool step(std::mt19937_64& rng);

    const Graph& graph() const { return graph_; }
    u64 applied() const { return applied_; }
    u64 self_loops() const { return self_loops_; }

  private:
    Graph graph_;
    std::vector<Edge> edge_list_;
    u64 applied_ = 0;
    u64 self_loops_ = 0;
};

// One swap attempt on a copy of g.
Graph double_edge_swap_step(const Graph& g, std::mt19937_64& rng);

// num_samples end states of independent runs of cfg.steps swap attempts
// (defaults mirror the k-core sampler: 100*m steps, 50 samples). Degree
// sequences are preserved exactly.
std::vector<Graph> config_sample(const Graph& g, const ChainConfig& cfg,
                                 SampleReport* report = nullptr);

}  // namespace corewalk
