#include "corewalk/realization.hpp"

namespace corewalk {

bool is_realizable(const CoreSequence& c) {
    return realizability_violation(c).empty();
}

std::string realizability_violation(const CoreSequence& c) {
    if (c.values.empty()) return "";
    int c1 = c.c1();
    if (c1 == 0) return "";
    if (c.size() < c1 + 1)
        return "top value " + std::to_string(c1) + " needs at least " +
               std::to_string(c1 + 1) + " nodes, sequence has " + std::to_string(c.size());
    if (c.values[c1] != c1)
        return "entry " + std::to_string(c1 + 1) + " is " + std::to_string(c.values[c1]) +
               ", but the top value " + std::to_string(c1) + " must occur at least " +
               std::to_string(c1 + 1) + " times";
    return "";
}

Graph build_uniform(int d, NodeId n) {
    if (d < 0) throw std::invalid_argument("build_uniform: negative degree");
    if (n <= d)
        throw std::invalid_argument("build_uniform: need n >= d+1 (d=" + std::to_string(d) +
                                    ", n=" + std::to_string(n) + ")");
    Graph g(n);
    auto circulant = [&](int width) {
        // Each i adjacent to i-width, ..., i-1, i+1, ..., i+width (mod n).
        for (NodeId i = 0; i < n; ++i)
            for (int k = 1; k <= width; ++k) g.add_edge(i, (i + k) % n);
    };

    if (d % 2 == 0) {
        circulant(d / 2);
        return g;
    }
    if (n % 2 == 0) {
        // Odd degree, even n: circulant plus the antipodal matching.
        circulant((d - 1) / 2);
        for (NodeId i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
        return g;
    }
    // Odd degree, odd n: circulant, a near-perfect matching leaving node n-1
    // unmatched, and one extra edge from n-1. Node h ends with degree d+1.
    circulant((d - 1) / 2);
    NodeId h = (n - 1) / 2;
    for (NodeId i = 0; i < h; ++i) g.add_edge(i, i + h);
    g.add_edge(n - 1, h);
    return g;
}

Graph realize(const CoreSequence& c) {
    std::string why = realizability_violation(c);
    if (!why.empty()) throw std::invalid_argument("realize: unrealizable sequence: " + why);

    NodeId n = c.size();
    if (n == 0) return Graph(0);
    int c1 = c.c1();
    if (c1 == 0) return Graph(n);

    NodeId n1 = c.top_multiplicity();
    Graph h = build_uniform(c1, n1);
    Graph g(n);
    for (const auto& [u, v] : h.edges()) g.add_edge(u, v);
    // Attach each later node to the first c_j nodes of the uniform block;
    // zero-valued nodes stay isolated.
    for (NodeId j = n1; j < n; ++j)
        for (NodeId t = 0; t < c.values[j]; ++t) g.add_edge(j, t);
    return g;
}

}  // namespace corewalk
