#include "corewalk/forest.hpp"

#include "corewalk/realization.hpp"
#include "corewalk/rng.hpp"

#include <algorithm>
#include <mutex>

namespace corewalk {

namespace {

// C(n, k) as a big integer.
BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Cayley: s^(s-2) labeled trees on s nodes.
BigInt tree_count(int s) {
    if (s <= 2) return 1;
    BigInt r = 1;
    for (int i = 0; i < s - 2; ++i) r *= s;
    return r;
}

std::vector<BigInt> g_forest_table = {BigInt(1), BigInt(0)};
std::mutex g_forest_mutex;

// Uniform big integer in [0, bound) by rejection on the bit width.
BigInt uniform_bigint_below(std::mt19937_64& rng, const BigInt& bound) {
    if (bound <= 1) return 0;
    unsigned bits = boost::multiprecision::msb(bound) + 1;
    unsigned words = (bits + 63) / 64;
    for (;;) {
        BigInt r = 0;
        for (unsigned w = 0; w < words; ++w) r = (r << 64) | rng();
        r >>= words * 64 - bits;
        if (r < bound) return r;
    }
}

}  // namespace

BigInt forest_count(int k) {
    if (k < 0) throw std::invalid_argument("forest_count: negative k");
    std::lock_guard<std::mutex> lock(g_forest_mutex);
    // F(k) = sum over the size s of the component holding the lowest label:
    // choose its s-1 companions, a tree on them, a valid forest on the rest.
    while ((int)g_forest_table.size() <= k) {
        int t = (int)g_forest_table.size();
        BigInt total = 0;
        for (int s = 2; s <= t; ++s)
            total += binomial(t - 1, s - 1) * tree_count(s) * g_forest_table[t - s];
        g_forest_table.push_back(total);
    }
    return g_forest_table[k];
}

void add_uniform_tree(Graph& g, const std::vector<NodeId>& nodes, std::mt19937_64& rng) {
    int s = (int)nodes.size();
    if (s < 2) return;
    if (s == 2) {
        g.add_edge(nodes[0], nodes[1]);
        return;
    }
    std::vector<int> prufer(s - 2);
    for (int& x : prufer) x = (int)uniform_below(rng, s);

    std::vector<int> deg(s, 1);
    for (int x : prufer) ++deg[x];
    // Standard linear decode: repeatedly attach the smallest current leaf.
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : prufer) {
        g.add_edge(nodes[leaf], nodes[x]);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            while (deg[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    // The final two remaining nodes: the current leaf and node s-1.
    g.add_edge(nodes[leaf], nodes[s - 1]);
}

Graph sample_forest_core1(const CoreSequence& c, std::mt19937_64& rng) {
    if (c.c1() > 1) throw std::invalid_argument("sample_forest_core1: c1 must be <= 1");
    std::string why = realizability_violation(c);
    if (!why.empty()) throw std::invalid_argument("sample_forest_core1: " + why);

    NodeId n = c.size();
    Graph g(n);
    int k = 0;
    while (k < n && c.values[k] == 1) ++k;

    std::vector<NodeId> remaining(k);
    for (int i = 0; i < k; ++i) remaining[i] = i;

    // Peel off the component containing the lowest remaining label.
    while (!remaining.empty()) {
        int r = (int)remaining.size();
        BigInt x = uniform_bigint_below(rng, forest_count(r));
        int size = -1;
        for (int s = 2; s <= r; ++s) {
            BigInt w = binomial(r - 1, s - 1) * tree_count(s) * forest_count(r - s);
            if (x < w) {
                size = s;
                break;
            }
            x -= w;
        }
        // size is always found: the weights sum to forest_count(r).

        // The lowest label plus size-1 uniformly chosen companions.
        std::vector<NodeId> comp;
        comp.push_back(remaining[0]);
        for (int picked = 0; picked < size - 1; ++picked) {
            int j = 1 + (int)uniform_below(rng, r - 1 - picked);
            comp.push_back(remaining[j]);
            std::swap(remaining[j], remaining[r - 1 - picked]);
        }
        std::sort(comp.begin(), comp.end());
        add_uniform_tree(g, comp, rng);

        remaining.erase(remaining.begin());
        remaining.resize(r - size);
        std::sort(remaining.begin(), remaining.end());
    }
    return g;
}

}  // namespace corewalk
