#pragma once

#include "corewalk/analysis.hpp"
#include "corewalk/chain.hpp"
#include "corewalk/graph.hpp"

#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace corewalk::io {

// Edge-list text format: one edge per line as two whitespace-separated
// labels, '#' starts a comment line, duplicates and both orientations are
// tolerated. A line with a single label declares an isolated node, which
// keeps graphs with core value 0 round-trippable.
struct EdgeListData {
    Graph graph;
    std::vector<std::string> labels;  // by node id, in order of first appearance
    std::unordered_map<std::string, NodeId> index;
};

EdgeListData read_edge_list(const std::string& path);

// Same format, but labels must come from the given universe.
Graph read_edge_list_as(const std::string& path,
                        const std::unordered_map<std::string, NodeId>& index, NodeId n);

void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<std::string>& labels);

// Whitespace-separated non-negative integers; reordered non-increasingly on
// load. *reordered reports whether the file was out of order.
CoreSequence read_core_sequence(const std::string& path, bool* reordered = nullptr);

// TSV with a header line; first column is the node label, remaining columns
// are categorical attributes.
AttributeTable read_attributes(const std::string& path,
                               const std::unordered_map<std::string, NodeId>& index, NodeId n);

// A sample batch is a directory of sample_000.tsv... plus manifest.json.
void write_sample_batch(const std::string& dir, const std::string& model,
                        const std::vector<Graph>& samples,
                        const std::vector<std::string>& labels, const CoreSequence& target,
                        const ChainConfig& cfg, u64 steps_used, const SampleReport& report);

struct SampleBatch {
    nlohmann::ordered_json manifest;
    std::vector<std::string> sample_files;  // sorted paths
};

SampleBatch read_sample_batch(const std::string& dir);

std::vector<std::string> default_labels(NodeId n);

}  // namespace corewalk::io
