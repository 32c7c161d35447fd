#include "corewalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace corewalk {

const char* pattern_name(Pattern p) {
    switch (p) {
        case Pattern::Triangle: return "triangle";
        case Pattern::Path4: return "path4";
        case Pattern::Claw: return "claw";
        case Pattern::Cycle4: return "cycle4";
        case Pattern::Paw: return "paw";
        case Pattern::Diamond: return "diamond";
        case Pattern::K4: return "k4";
    }
    return "?";
}

namespace {

// Sorted-range intersection size.
std::uint64_t intersection_size(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::uint64_t c = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++c; ++ia; ++ib; }
    }
    return c;
}

void intersect_into(const std::vector<NodeId>& a, const std::vector<NodeId>& b,
                    std::vector<NodeId>& out) {
    out.clear();
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

}  // namespace

std::uint64_t count_triangles(const Graph& g) {
    // Each triangle once: for every edge (u,v), common neighbors above v.
    std::uint64_t total = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (v <= u) continue;
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            auto iu = std::upper_bound(nu.begin(), nu.end(), v);
            auto iv = std::upper_bound(nv.begin(), nv.end(), v);
            while (iu != nu.end() && iv != nv.end()) {
                if (*iu < *iv) ++iu;
                else if (*iv < *iu) ++iv;
                else { ++total; ++iu; ++iv; }
            }
        }
    }
    return total;
}

std::vector<std::uint64_t> triangle_degrees(const Graph& g) {
    std::vector<std::uint64_t> t(g.num_nodes(), 0);
    std::vector<NodeId> common;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (v <= u) continue;
            intersect_into(g.neighbors(u), g.neighbors(v), common);
            for (NodeId w : common) {
                if (w > v) {
                    ++t[u];
                    ++t[v];
                    ++t[w];
                }
            }
        }
    }
    return t;
}

SubgraphCensus four_node_census(const Graph& g) {
    SubgraphCensus c;
    NodeId n = g.num_nodes();
    auto tri_deg = triangle_degrees(g);
    std::uint64_t triangles = std::accumulate(tri_deg.begin(), tri_deg.end(), std::uint64_t{0}) / 3;
    c[Pattern::Triangle] = triangles;

    for (NodeId v = 0; v < n; ++v) {
        std::uint64_t d = g.degree(v);
        if (d >= 3) c[Pattern::Claw] += d * (d - 1) * (d - 2) / 6;
        if (d >= 2) c[Pattern::Paw] += tri_deg[v] * (d - 2);
    }

    // Paths on 4 nodes, counted once per middle edge; the subtraction drops
    // the closed walks where both ends coincide (one per triangle per edge).
    std::uint64_t open_paths = 0;
    for (const auto& [u, v] : g.edges())
        open_paths += static_cast<std::uint64_t>(g.degree(u) - 1) * (g.degree(v) - 1);
    c[Pattern::Path4] = open_paths - 3 * triangles;

    // Codegrees via wedge counting: cod[{u,v}] = |N(u) cap N(v)| for every
    // pair with at least one common neighbor.
    std::unordered_map<std::uint64_t, std::uint64_t> cod;
    for (NodeId w = 0; w < n; ++w) {
        const auto& nb = g.neighbors(w);
        for (std::size_t x = 0; x < nb.size(); ++x)
            for (std::size_t y = x + 1; y < nb.size(); ++y)
                ++cod[static_cast<std::uint64_t>(nb[x]) * static_cast<std::uint64_t>(n) + nb[y]];
    }
    std::uint64_t cycle4_twice = 0;
    std::uint64_t diamonds = 0;
    for (const auto& [key, k] : cod) {
        NodeId u = static_cast<NodeId>(key / n);
        NodeId v = static_cast<NodeId>(key % n);
        std::uint64_t pairs = k * (k - 1) / 2;
        cycle4_twice += pairs;
        if (g.has_edge(u, v)) diamonds += pairs;  // (u,v) is the hinge edge
    }
    c[Pattern::Cycle4] = cycle4_twice / 2;  // each 4-cycle has two opposite pairs
    c[Pattern::Diamond] = diamonds;

    // K4: for each edge, edges inside the common neighborhood; every K4 is
    // counted once per its six edges.
    std::uint64_t k4_six = 0;
    std::vector<NodeId> common;
    for (const auto& [u, v] : g.edges()) {
        intersect_into(g.neighbors(u), g.neighbors(v), common);
        for (std::size_t x = 0; x < common.size(); ++x)
            for (std::size_t y = x + 1; y < common.size(); ++y)
                if (g.has_edge(common[x], common[y])) ++k4_six;
    }
    c[Pattern::K4] = k4_six / 6;
    return c;
}

SrpProfile srp(const SubgraphCensus& real, const std::vector<SubgraphCensus>& null_samples,
               double epsilon) {
    if (null_samples.empty()) throw std::invalid_argument("srp: no null samples");
    SrpProfile p;
    double norm_sq = 0;
    for (int i = 0; i < kNumPatterns; ++i) {
        double mean = 0;
        for (const auto& s : null_samples) mean += static_cast<double>(s.counts[i]);
        mean /= static_cast<double>(null_samples.size());
        double realc = static_cast<double>(real.counts[i]);
        p.delta[i] = (realc - mean) / (realc + mean + epsilon);
        norm_sq += p.delta[i] * p.delta[i];
    }
    if (norm_sq > 0) {
        double norm = std::sqrt(norm_sq);
        for (int i = 0; i < kNumPatterns; ++i) p.srp[i] = p.delta[i] / norm;
    }
    return p;
}

std::optional<double> z_score(double real, const std::vector<double>& null_values) {
    if (null_values.size() < 2) throw std::invalid_argument("z_score: need at least 2 null values");
    double mean = std::accumulate(null_values.begin(), null_values.end(), 0.0) /
                  static_cast<double>(null_values.size());
    double ss = 0;
    for (double v : null_values) ss += (v - mean) * (v - mean);
    double sd = std::sqrt(ss / static_cast<double>(null_values.size() - 1));
    if (sd == 0) return std::nullopt;
    return (real - mean) / sd;
}

int AttributeTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<int>(i);
    return -1;
}

double assortativity(const Graph& g, const AttributeTable& attr, int column) {
    if (g.num_edges() == 0) throw std::invalid_argument("assortativity: graph has no edges");
    if (column < 0 || column >= static_cast<int>(attr.columns.size()))
        throw std::invalid_argument("assortativity: bad column index");
    const auto& val = attr.values[column];
    int k = static_cast<int>(attr.category_names[column].size());

    // Mixing matrix over edge ends (each edge counted in both directions).
    std::vector<double> e(static_cast<std::size_t>(k) * k, 0.0);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (val[u] < 0 || val[v] < 0)
                throw std::invalid_argument("assortativity: node without a value in column " +
                                            attr.columns[column]);
            e[static_cast<std::size_t>(val[u]) * k + val[v]] += 1.0;
        }
    }
    double total = 2.0 * static_cast<double>(g.num_edges());
    for (auto& x : e) x /= total;

    double trace = 0, ab = 0;
    for (int i = 0; i < k; ++i) {
        trace += e[static_cast<std::size_t>(i) * k + i];
        double ai = 0, bi = 0;
        for (int j = 0; j < k; ++j) {
            ai += e[static_cast<std::size_t>(i) * k + j];
            bi += e[static_cast<std::size_t>(j) * k + i];
        }
        ab += ai * bi;
    }
    // All edge ends in one category: perfectly assortative by convention.
    if (ab >= 1.0) return 1.0;
    return (trace - ab) / (1.0 - ab);
}

std::vector<Graph> enumerate_core_space(const CoreSequence& c) {
    NodeId n = c.size();
    if (n > 7)
        throw std::invalid_argument("enumerate_core_space: n > 7 would enumerate 2^" +
                                    std::to_string(n * (n - 1) / 2) + " graphs");
    std::vector<Edge> pairs;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<Graph> out;
    std::vector<int> cores;
    PeelScratch scratch;
    std::uint64_t limit = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Graph g(n);
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) g.add_edge(pairs[b].first, pairs[b].second);
        core_values(g, cores, scratch);
        std::sort(cores.begin(), cores.end(), std::greater<int>());
        if (cores == c.values) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace corewalk
