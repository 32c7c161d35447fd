#include "corewalk/config_model.hpp"

#include "corewalk/rng.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace corewalk {

ConfigModelWalker::ConfigModelWalker(Graph g) : graph_(std::move(g)), edge_list_(graph_.edges()) {}

bool ConfigModelWalker::step(std::mt19937_64& rng) {
    u64 m = edge_list_.size();
    if (m < 2) {
        ++self_loops_;
        return false;
    }
    u64 a = uniform_below(rng, m);
    u64 b = uniform_below(rng, m - 1);
    if (b >= a) ++b;
    auto [u, v] = edge_list_[a];
    auto [x, y] = edge_list_[b];
    if (uniform_below(rng, 2) == 1) std::swap(x, y);

    // Proposed replacement: (u,x) and (v,y).
    if (u == x || v == y || graph_.has_edge(u, x) || graph_.has_edge(v, y)) {
        ++self_loops_;
        return false;
    }
    graph_.remove_edge(u, v);
    graph_.remove_edge(x, y);
    graph_.add_edge(u, x);
    graph_.add_edge(v, y);
    edge_list_[a] = {std::min(u, x), std::max(u, x)};
    edge_list_[b] = {std::min(v, y), std::max(v, y)};
    ++applied_;
    return true;
}

Graph double_edge_swap_step(const Graph& g, std::mt19937_64& rng) {
    ConfigModelWalker w(g);
    w.step(rng);
    return w.graph();
}

std::vector<Graph> config_sample(const Graph& g, const ChainConfig& cfg, SampleReport* report) {
    u64 steps = cfg.steps != 0 ? cfg.steps : 100 * static_cast<u64>(std::max<std::size_t>(g.num_edges(), 1));
    u64 ns = cfg.num_samples;
    std::vector<Graph> out(ns);
    std::vector<RunReport> runs(ns);

    auto run_one = [&](u64 r) {
        auto rng = derive_stream(cfg.seed, r);
        ConfigModelWalker w(g);
        for (u64 t = 0; t < steps; ++t) w.step(rng);
        out[r] = w.graph();
        RunReport rep;
        rep.run = r;
        rep.steps = steps;
        rep.stats.accepted[0] = w.applied();  // swaps applied, no per-kind split
        rep.stats.self_loops = w.self_loops();
        runs[r] = rep;
    };

    int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(std::min<u64>(ns, 1 << 16))));
    if (jobs <= 1) {
        for (u64 r = 0; r < ns; ++r) run_one(r);
    } else {
        std::atomic<u64> next{0};
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (u64 r = next.fetch_add(1); r < ns; r = next.fetch_add(1)) run_one(r);
            });
        for (auto& th : pool) th.join();
    }
    if (report) report->runs = std::move(runs);
    return out;
}

}  // namespace corewalk
