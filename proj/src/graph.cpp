#include "corewalk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace corewalk {

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

bool Graph::add_edge(NodeId u, NodeId v) {
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
    return true;
}

bool Graph::remove_edge(NodeId u, NodeId v) {
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v) return false;
    nu.erase(it);
    auto& nv = adj_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --m_;
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (NodeId u = 0; u < num_nodes(); ++u)
        for (NodeId v : neighbors(u))
            if (v > u) out.emplace_back(u, v);
    return out;
}

Graph build_graph(NodeId n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative node count");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("build_graph: node id out of range: (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("build_graph: self-loop on node " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

CoreSequence CoreSequence::sorted(std::vector<int> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) throw std::invalid_argument("core sequence: negative value");
        if (i > 0 && v[i] > v[i - 1])
            throw std::invalid_argument("core sequence: not non-increasing");
    }
    return CoreSequence{std::move(v)};
}

CoreSequence CoreSequence::from_unsorted(std::vector<int> v) {
    for (int x : v)
        if (x < 0) throw std::invalid_argument("core sequence: negative value");
    std::sort(v.begin(), v.end(), std::greater<int>());
    return CoreSequence{std::move(v)};
}

NodeId CoreSequence::top_multiplicity() const {
    if (values.empty()) return 0;
    NodeId k = 0;
    while (k < size() && values[k] == values[0]) ++k;
    return k;
}

CoreSequence CoreDecomposition::sequence() const {
    return CoreSequence::from_unsorted(core_of);
}

CoreDecomposition core_decomposition(const Graph& g) {
    NodeId n = g.num_nodes();
    CoreDecomposition d;
    d.core_of.assign(n, 0);
    d.deletion_order.reserve(n);
    if (n == 0) return d;

    // Min-heap on (residual degree, id) with lazy invalidation; the id
    // tie-break makes the deletion order deterministic.
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    using Entry = std::pair<int, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        heap.emplace(deg[v], v);
    }

    int level = 0;
    while (!heap.empty()) {
        auto [dv, v] = heap.top();
        heap.pop();
        if (removed[v] || dv != deg[v]) continue;
        level = std::max(level, dv);
        d.core_of[v] = level;
        d.deletion_order.push_back(v);
        removed[v] = 1;
        for (NodeId u : g.neighbors(v))
            if (!removed[u]) heap.emplace(--deg[u], u);
    }

    d.max_core = level;
    for (int c : d.core_of)
        if (c == d.max_core) ++d.top_core_size;
    return d;
}

void core_values(const Graph& g, std::vector<int>& out, PeelScratch& s) {
    NodeId n = g.num_nodes();
    out.assign(n, 0);
    if (n == 0) return;

    auto& deg = s.deg;
    auto& pos = s.pos;
    auto& vert = s.vert;
    auto& bin = s.bin;
    deg.assign(n, 0);
    pos.assign(n, 0);
    vert.assign(n, 0);

    int md = 0;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        md = std::max(md, deg[v]);
    }

    // Bin-sort nodes by degree, then peel in place; deg[] ends up holding
    // the core values.
    bin.assign(md + 1, 0);
    for (NodeId v = 0; v < n; ++v) ++bin[deg[v]];
    int start = 0;
    for (int dd = 0; dd <= md; ++dd) {
        int cnt = bin[dd];
        bin[dd] = start;
        start += cnt;
    }
    for (NodeId v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (int dd = md; dd > 0; --dd) bin[dd] = bin[dd - 1];
    bin[0] = 0;

    for (NodeId i = 0; i < n; ++i) {
        NodeId v = vert[i];
        for (NodeId u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                int du = deg[u];
                NodeId pu = pos[u];
                NodeId pw = bin[du];
                NodeId w = vert[pw];
                if (u != w) {
                    std::swap(vert[pu], vert[pw]);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    for (NodeId v = 0; v < n; ++v) out[v] = deg[v];
}

std::vector<int> core_values(const Graph& g) {
    std::vector<int> out;
    PeelScratch s;
    core_values(g, out, s);
    return out;
}

std::pair<Graph, LabelMap> relabel_by_core(const Graph& g) {
    NodeId n = g.num_nodes();
    auto cores = core_values(g);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return cores[a] > cores[b]; });

    LabelMap map;
    map.to_external = order;
    map.to_internal.assign(n, 0);
    for (NodeId i = 0; i < n; ++i) map.to_internal[order[i]] = i;

    Graph out(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : g.neighbors(u))
            if (v > u) out.add_edge(map.to_internal[u], map.to_internal[v]);
    return {std::move(out), std::move(map)};
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) d[v] = g.degree(v);
    return d;
}

std::vector<int> sorted_degree_sequence(const Graph& g) {
    auto d = degree_sequence(g);
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

}  // namespace corewalk
