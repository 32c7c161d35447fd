#pragma once

#include "corewalk/graph.hpp"

#include <string>

namespace corewalk {

// A non-increasing sequence is the core-value sequence of some simple graph
// iff it is empty, all-zero, or its top value c1 occurs at least c1+1 times.
bool is_realizable(const CoreSequence& c);

// Human-readable description of the violated condition; empty if realizable.
std::string realizability_violation(const CoreSequence& c);

// d-uniform graph on n nodes (n >= d+1): d-regular when d or n is even,
// otherwise d-regular except for a single node of degree d+1.
Graph build_uniform(int d, NodeId n);

// Witness graph with core sequence exactly c: a c1-uniform graph on the top
// block, every later node j attached to nodes 0..c_j-1 of it. Deterministic.
// Throws if c is not realizable.
Graph realize(const CoreSequence& c);

}  // namespace corewalk
