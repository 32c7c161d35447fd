#include "oracles.hpp"

#include "corewalk/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace corewalk::testing {

std::vector<int> core_oracle(const Graph& g) {
    NodeId n = g.num_nodes();
    std::vector<int> core(n, 0);
    for (int k = 1;; ++k) {
        // Fixed-point deletion of nodes with degree < k.
        std::vector<char> in(n, 1);
        std::vector<int> deg(n);
        for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
        bool changed = true;
        while (changed) {
            changed = false;
            for (NodeId v = 0; v < n; ++v) {
                if (in[v] && deg[v] < k) {
                    in[v] = 0;
                    changed = true;
                    for (NodeId u : g.neighbors(v))
                        if (in[u]) --deg[u];
                }
            }
        }
        bool any = false;
        for (NodeId v = 0; v < n; ++v)
            if (in[v]) {
                core[v] = k;
                any = true;
            }
        if (!any) return core;
    }
}

std::vector<Graph> all_graphs(NodeId n) {
    std::vector<Edge> pairs;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    if (pairs.size() > 20) throw std::invalid_argument("all_graphs: too many nodes");

    std::vector<Graph> out;
    out.reserve(std::size_t{1} << pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) g.add_edge(pairs[b].first, pairs[b].second);
        out.push_back(std::move(g));
    }
    return out;
}

std::uint64_t edge_mask(const Graph& g) {
    NodeId n = g.num_nodes();
    if (n > 11) throw std::invalid_argument("edge_mask: too many nodes");
    std::uint64_t mask = 0;
    for (const auto& [u, v] : g.edges()) {
        std::uint64_t bit = std::uint64_t(u) * (2 * n - u - 1) / 2 + std::uint64_t(v - u - 1);
        mask |= std::uint64_t{1} << bit;
    }
    return mask;
}

SubgraphCensus census_oracle(const Graph& g) {
    struct Pat {
        Pattern which;
        int k;
        std::vector<std::pair<int, int>> edges;
        std::uint64_t aut;
    };
    static const std::vector<Pat> pats = {
        {Pattern::Triangle, 3, {{0, 1}, {0, 2}, {1, 2}}, 6},
        {Pattern::Path4, 4, {{0, 1}, {1, 2}, {2, 3}}, 2},
        {Pattern::Claw, 4, {{0, 1}, {0, 2}, {0, 3}}, 6},
        {Pattern::Cycle4, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 8},
        {Pattern::Paw, 4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, 2},
        {Pattern::Diamond, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, 4},
        {Pattern::K4, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 24},
    };

    NodeId n = g.num_nodes();
    SubgraphCensus c;
    std::vector<NodeId> tuple;
    for (const auto& pat : pats) {
        std::uint64_t embeddings = 0;
        // All injective k-tuples.
        tuple.assign(pat.k, 0);
        std::function<void(int)> rec = [&](int depth) {
            if (depth == pat.k) {
                for (const auto& [a, b] : pat.edges)
                    if (!g.has_edge(tuple[a], tuple[b])) return;
                ++embeddings;
                return;
            }
            for (NodeId v = 0; v < n; ++v) {
                bool used = false;
                for (int t = 0; t < depth; ++t)
                    if (tuple[t] == v) used = true;
                if (used) continue;
                tuple[depth] = v;
                rec(depth + 1);
            }
        };
        rec(0);
        c[pat.which] = embeddings / pat.aut;
    }
    return c;
}

std::vector<Move> enumerate_valid_moves(const Graph& g) {
    auto cores = core_values(g);
    NodeId n = g.num_nodes();
    std::vector<Move> out;
    auto consider = [&](Move mv) {
        if (validate(g, mv, cores)) out.push_back(mv);
    };

    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) {
            consider({MoveKind::Add, {i, j, -1, -1}});
            consider({MoveKind::Delete, {i, j, -1, -1}});
        }

    for (NodeId h = 0; h < n; ++h)
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = 0; j < n; ++j) {
                if (h == i || h == j || i == j) continue;
                consider({MoveKind::MoveEndpoint, {h, i, j, -1}});
                consider({MoveKind::HalfCollapse, {h, i, j, -1}});
                consider({MoveKind::HalfExpand, {h, i, j, -1}});
                if (i < j) {
                    consider({MoveKind::CoreCollapse, {h, i, j, -1}});
                    consider({MoveKind::CoreExpand, {h, i, j, -1}});
                }
            }

    if (!cores.empty() && *std::max_element(cores.begin(), cores.end()) == 2) {
        // Canonical switch tuples: h is the smallest of the four nodes,
        // i its removed-edge partner, j its inserted-edge partner.
        std::vector<NodeId> top;
        for (NodeId v = 0; v < n; ++v)
            if (cores[v] == 2) top.push_back(v);
        int t = (int)top.size();
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b)
                for (int cidx = b + 1; cidx < t; ++cidx)
                    for (int d = cidx + 1; d < t; ++d) {
                        NodeId v4[4] = {top[a], top[b], top[cidx], top[d]};
                        for (int rem = 0; rem < 3; ++rem)
                            for (int ins = 0; ins < 3; ++ins) {
                                if (rem == ins) continue;
                                NodeId i = v4[rem + 1];
                                NodeId j = v4[ins + 1];
                                NodeId l = -1;
                                for (int x = 1; x < 4; ++x)
                                    if (v4[x] != i && v4[x] != j) l = v4[x];
                                consider({MoveKind::SwitchTopCore, {v4[0], i, j, l}});
                            }
                    }
    }
    return out;
}

bool move_less(const Move& a, const Move& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.nodes < b.nodes;
}

double tv_from_uniform(const std::vector<std::uint64_t>& counts, std::uint64_t total_draws) {
    double p = 1.0 / (double)counts.size();
    double tv = 0;
    for (std::uint64_t c : counts) tv += std::abs((double)c / (double)total_draws - p);
    return tv / 2;
}

Graph random_graph(NodeId n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if ((double)(rng() >> 11) * 0x1.0p-53 < p) g.add_edge(i, j);
    return g;
}

CoreSequence random_realizable_sequence(NodeId n, int max_value, std::mt19937_64& rng) {
    if (n <= 0) return CoreSequence{};
    std::vector<int> v(n);
    for (int& x : v) x = (int)uniform_below(rng, max_value + 1);
    std::sort(v.begin(), v.end(), std::greater<int>());
    int c1 = std::min(v[0], n - 1);  // the top value needs c1+1 slots
    for (int i = 0; i <= c1; ++i) v[i] = c1;
    return CoreSequence::sorted(std::move(v));
}

}  // namespace corewalk::testing
