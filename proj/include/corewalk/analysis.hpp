#pragma once

#include "corewalk/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace corewalk {

// The seven counted patterns: the triangle plus the six connected 4-node
// subgraphs. Counts are non-induced (each subgraph copy, extra edges allowed).
enum class Pattern { Triangle, Path4, Claw, Cycle4, Paw, Diamond, K4 };
constexpr int kNumPatterns = 7;
const char* pattern_name(Pattern p);

struct SubgraphCensus {
    std::array<std::uint64_t, kNumPatterns> counts{};

    std::uint64_t operator[](Pattern p) const { return counts[static_cast<int>(p)]; }
    std::uint64_t& operator[](Pattern p) { return counts[static_cast<int>(p)]; }
    bool operator==(const SubgraphCensus&) const = default;
};

std::uint64_t count_triangles(const Graph& g);

// Per-node triangle participation; sums to 3 * count_triangles.
std::vector<std::uint64_t> triangle_degrees(const Graph& g);

SubgraphCensus four_node_census(const Graph& g);

// Normalized per-pattern differences between a graph's census and the mean
// census of null samples:
//   delta_i = (N_real_i - mean(N_null_i)) / (N_real_i + mean(N_null_i) + eps)
// and srp = delta / ||delta||_2 (all-zero delta stays all-zero).
struct SrpProfile {
    std::array<double, kNumPatterns> delta{};
    std::array<double, kNumPatterns> srp{};
};

SrpProfile srp(const SubgraphCensus& real, const std::vector<SubgraphCensus>& null_samples,
               double epsilon = 4.0);

// (real - mean) / sample sd over the null values; nullopt when the sd is 0.
std::optional<double> z_score(double real, const std::vector<double>& null_values);

// Per-node categorical attributes, one column per attribute.
struct AttributeTable {
    std::vector<std::string> columns;
    // values[c][v]: category id of node v in column c; -1 = missing
    std::vector<std::vector<int>> values;
    std::vector<std::vector<std::string>> category_names;

    int column_index(const std::string& name) const;
};

// Newman's categorical assortativity r = (sum_i e_ii - sum_i a_i b_i) /
// (1 - sum_i a_i b_i) over the edge mixing matrix. Throws on an edgeless
// graph or a missing attribute value.
double assortativity(const Graph& g, const AttributeTable& attr, int column);

// All labeled simple graphs on |c| nodes whose sorted core values equal c.
// Exhaustive over all 2^C(n,2) edge subsets; guarded to n <= 7.
std::vector<Graph> enumerate_core_space(const CoreSequence& c);

}  // namespace corewalk
