#include "corewalk/chain.hpp"

#include "corewalk/forest.hpp"
#include "corewalk/realization.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <thread>

namespace corewalk {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Add: return "add";
        case MoveKind::Delete: return "delete";
        case MoveKind::MoveEndpoint: return "move_endpoint";
        case MoveKind::CoreCollapse: return "core_collapse";
        case MoveKind::CoreExpand: return "core_expand";
        case MoveKind::HalfCollapse: return "half_collapse";
        case MoveKind::HalfExpand: return "half_expand";
        case MoveKind::SwitchTopCore: return "switch_top_core";
    }
    return "?";
}

Move invert_move(const Move& mv) {
    Move inv = mv;
    switch (mv.kind) {
        case MoveKind::Add: inv.kind = MoveKind::Delete; break;
        case MoveKind::Delete: inv.kind = MoveKind::Add; break;
        case MoveKind::MoveEndpoint: std::swap(inv.nodes[0], inv.nodes[1]); break;
        case MoveKind::CoreCollapse: inv.kind = MoveKind::CoreExpand; break;
        case MoveKind::CoreExpand: inv.kind = MoveKind::CoreCollapse; break;
        case MoveKind::HalfCollapse: inv.kind = MoveKind::HalfExpand; break;
        case MoveKind::HalfExpand: inv.kind = MoveKind::HalfCollapse; break;
        case MoveKind::SwitchTopCore: std::swap(inv.nodes[1], inv.nodes[2]); break;
    }
    return inv;
}

void apply_move(Graph& g, const Move& mv) {
    NodeId h = mv.nodes[0], i = mv.nodes[1], j = mv.nodes[2], l = mv.nodes[3];
    switch (mv.kind) {
        case MoveKind::Add: g.add_edge(h, i); break;
        case MoveKind::Delete: g.remove_edge(h, i); break;
        case MoveKind::MoveEndpoint:
            g.remove_edge(h, j);
            g.add_edge(i, j);
            break;
        case MoveKind::CoreCollapse:
            g.remove_edge(h, i);
            g.remove_edge(h, j);
            g.add_edge(i, j);
            break;
        case MoveKind::CoreExpand:
            g.remove_edge(i, j);
            g.add_edge(h, i);
            g.add_edge(h, j);
            break;
        case MoveKind::HalfCollapse:
            g.remove_edge(h, i);
            g.add_edge(i, j);
            break;
        case MoveKind::HalfExpand:
            g.remove_edge(i, j);
            g.add_edge(h, i);
            break;
        case MoveKind::SwitchTopCore:
            g.remove_edge(h, i);
            g.remove_edge(j, l);
            g.add_edge(h, j);
            g.add_edge(i, l);
            break;
    }
}

namespace {

Slot choose2(Slot x) { return x < 2 ? 0 : x * (x - 1) / 2; }
Slot choose3(Slot x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }
Slot choose4(Slot x) { return x < 4 ? 0 : x * (x - 1) * (x - 2) * (x - 3) / 24; }

Slot choose_k(Slot x, int k) {
    switch (k) {
        case 0: return 1;
        case 1: return x;
        case 2: return choose2(x);
        case 3: return choose3(x);
        default: return choose4(x);
    }
}

// Unordered pairs (i < j) of [0, n) in lexicographic order.
void unrank_pair(Slot r, NodeId n, NodeId& i, NodeId& j) {
    NodeId a = 0;
    Slot row = static_cast<Slot>(n - 1);
    while (r >= row) {
        r -= row;
        ++a;
        --row;
    }
    i = a;
    j = a + 1 + static_cast<NodeId>(r);
}

Slot rank_pair(NodeId n, NodeId i, NodeId j) {
    // sum of row lengths above i, then the offset within row i
    Slot base = static_cast<Slot>(i) * (2 * static_cast<Slot>(n) - i - 1) / 2;
    return base + static_cast<Slot>(j - i - 1);
}

// 4-subsets {a<b<c<d} of [0, n) in lexicographic order.
void unrank_subset4(Slot r, NodeId n, NodeId out[4]) {
    NodeId x = 0;
    for (int t = 0; t < 4; ++t) {
        for (;;) {
            Slot cnt = choose_k(static_cast<Slot>(n - 1 - x), 3 - t);
            if (r < cnt) break;
            r -= cnt;
            ++x;
        }
        out[t] = x;
        ++x;
    }
}

Slot rank_subset4(NodeId n, const NodeId v[4]) {
    Slot r = 0;
    NodeId prev = -1;
    for (int t = 0; t < 4; ++t) {
        for (NodeId x = prev + 1; x < v[t]; ++x) r += choose_k(static_cast<Slot>(n - 1 - x), 3 - t);
        prev = v[t];
    }
    return r;
}

// The t-th node id when a and b are excluded.
NodeId nth_excluding2(NodeId t, NodeId a, NodeId b) {
    NodeId lo = std::min(a, b), hi = std::max(a, b);
    NodeId x = t;
    if (x >= lo) ++x;
    if (x >= hi) ++x;
    return x;
}

NodeId index_excluding2(NodeId x, NodeId a, NodeId b) {
    NodeId lo = std::min(a, b), hi = std::max(a, b);
    NodeId t = x;
    if (x > lo) --t;
    if (x > hi) --t;
    return t;
}

// idx-th edge (u < v) in lexicographic order.
void nth_edge(const Graph& g, Slot idx, NodeId& u, NodeId& v) {
    for (NodeId a = 0; a < g.num_nodes(); ++a) {
        const auto& nb = g.neighbors(a);
        auto it = std::upper_bound(nb.begin(), nb.end(), a);
        Slot cnt = static_cast<Slot>(nb.end() - it);
        if (idx < cnt) {
            u = a;
            v = *(it + static_cast<std::ptrdiff_t>(idx));
            return;
        }
        idx -= cnt;
    }
    throw std::out_of_range("nth_edge: index past the last edge");
}

Slot edge_rank(const Graph& g, NodeId u, NodeId v) {
    Slot r = 0;
    for (NodeId a = 0; a < u; ++a) {
        const auto& nb = g.neighbors(a);
        r += static_cast<Slot>(nb.end() - std::upper_bound(nb.begin(), nb.end(), a));
    }
    const auto& nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    r += static_cast<Slot>(std::lower_bound(it, nb.end(), v) - it);
    return r;
}

// Pairings of a sorted 4-set: 0 = (ab|cd), 1 = (ac|bd), 2 = (ad|bc).
// A switch removes one pairing's pairs and inserts another's.
constexpr int kSwitchVariants[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

NodeId pairing_partner_of_first(int pairing, const NodeId v[4]) {
    return v[pairing + 1];
}

}  // namespace

UniverseTable::UniverseTable(const std::vector<int>& core_of, bool switch_enabled)
    : n_(static_cast<NodeId>(core_of.size())), switch_enabled_(switch_enabled) {
    for (NodeId i = 1; i < n_; ++i)
        if (core_of[i] > core_of[i - 1])
            throw std::invalid_argument("UniverseTable: labels are not core-sorted");

    pair_count_ = choose2(static_cast<Slot>(n_));

    if (n_ > 0) {
        NodeId s = 0;
        while (s < n_) {
            NodeId e = s;
            while (e < n_ && core_of[e] == core_of[s]) ++e;
            if (s == 0) top_size_ = e;
            if (s > 0 && e - s >= 2) blocks_.push_back(Block{s, e - s});
            s = e;
        }
    }
    ce_prefix_.assign(blocks_.size() + 1, 0);
    half_prefix_.assign(blocks_.size() + 1, 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        Slot t = static_cast<Slot>(blocks_[b].size);
        Slot s = static_cast<Slot>(blocks_[b].start);
        ce_prefix_[b + 1] = ce_prefix_[b] + choose2(t) * s;
        half_prefix_[b + 1] = half_prefix_[b] + t * (t - 1) * s;
    }
    ce_size_ = ce_prefix_.back();
    half_size_ = half_prefix_.back();
    switch_size_ = switch_enabled_ ? choose4(static_cast<Slot>(top_size_)) * 6 : 0;
    set_edge_count(0);
}

void UniverseTable::set_edge_count(std::size_t m) {
    me_size_ = n_ >= 3 ? 2 * static_cast<Slot>(m) * static_cast<Slot>(n_ - 2) : 0;
    total_ = 2 * pair_count_ + me_size_ + ce_size_ + half_size_ + switch_size_;
}

std::optional<Move> UniverseTable::decode(const Graph& g, Slot slot) const {
    if (slot >= total_) return std::nullopt;

    if (slot < pair_count_) {
        NodeId i, j;
        unrank_pair(slot, n_, i, j);
        return Move{MoveKind::Add, {i, j, -1, -1}};
    }
    slot -= pair_count_;

    if (slot < pair_count_) {
        NodeId i, j;
        unrank_pair(slot, n_, i, j);
        return Move{MoveKind::Delete, {i, j, -1, -1}};
    }
    slot -= pair_count_;

    if (slot < me_size_) {
        Slot per_edge = 2 * static_cast<Slot>(n_ - 2);
        Slot e_idx = slot / per_edge;
        Slot rest = slot % per_edge;
        int side = static_cast<int>(rest / static_cast<Slot>(n_ - 2));
        NodeId t = static_cast<NodeId>(rest % static_cast<Slot>(n_ - 2));
        NodeId u, v;
        nth_edge(g, e_idx, u, v);
        NodeId j = side == 0 ? u : v;  // kept endpoint
        NodeId h = side == 0 ? v : u;
        NodeId i = nth_excluding2(t, h, j);
        return Move{MoveKind::MoveEndpoint, {h, i, j, -1}};
    }
    slot -= me_size_;

    if (slot < ce_size_) {
        std::size_t b = static_cast<std::size_t>(
            std::upper_bound(ce_prefix_.begin(), ce_prefix_.end(), slot) - ce_prefix_.begin() - 1);
        Slot q = slot - ce_prefix_[b];
        Slot s = static_cast<Slot>(blocks_[b].start);
        NodeId h = static_cast<NodeId>(q % s);
        NodeId li, lj;
        unrank_pair(q / s, blocks_[b].size, li, lj);
        NodeId i = blocks_[b].start + li;
        NodeId j = blocks_[b].start + lj;
        bool hi = g.has_edge(h, i), hj = g.has_edge(h, j), ij = g.has_edge(i, j);
        if (hi && hj && !ij) return Move{MoveKind::CoreCollapse, {h, i, j, -1}};
        if (ij && !hi && !hj) return Move{MoveKind::CoreExpand, {h, i, j, -1}};
        return std::nullopt;  // neither direction applies here
    }
    slot -= ce_size_;

    if (slot < half_size_) {
        std::size_t b = static_cast<std::size_t>(
            std::upper_bound(half_prefix_.begin(), half_prefix_.end(), slot) - half_prefix_.begin() - 1);
        Slot q = slot - half_prefix_[b];
        Slot s = static_cast<Slot>(blocks_[b].start);
        NodeId t = blocks_[b].size;
        NodeId h = static_cast<NodeId>(q % s);
        Slot rest = q / s;
        NodeId li = static_cast<NodeId>(rest / static_cast<Slot>(t - 1));
        NodeId lj = static_cast<NodeId>(rest % static_cast<Slot>(t - 1));
        if (lj >= li) ++lj;
        NodeId i = blocks_[b].start + li;
        NodeId j = blocks_[b].start + lj;
        bool hi = g.has_edge(h, i), ij = g.has_edge(i, j);
        if (hi && !ij) return Move{MoveKind::HalfCollapse, {h, i, j, -1}};
        if (ij && !hi) return Move{MoveKind::HalfExpand, {h, i, j, -1}};
        return std::nullopt;
    }
    slot -= half_size_;

    // switch region
    Slot subset_rank = slot / 6;
    int variant = static_cast<int>(slot % 6);
    NodeId v[4];
    unrank_subset4(subset_rank, top_size_, v);
    int rem = kSwitchVariants[variant][0];
    int ins = kSwitchVariants[variant][1];
    NodeId h = v[0];
    NodeId i = pairing_partner_of_first(rem, v);
    NodeId j = pairing_partner_of_first(ins, v);
    NodeId l = -1;
    for (int t = 1; t < 4; ++t)
        if (v[t] != i && v[t] != j) l = v[t];
    return Move{MoveKind::SwitchTopCore, {h, i, j, l}};
}

Slot UniverseTable::encode(const Graph& g, const Move& mv) const {
    NodeId h = mv.nodes[0], i = mv.nodes[1], j = mv.nodes[2], l = mv.nodes[3];
    switch (mv.kind) {
        case MoveKind::Add:
            return rank_pair(n_, std::min(h, i), std::max(h, i));
        case MoveKind::Delete:
            return pair_count_ + rank_pair(n_, std::min(h, i), std::max(h, i));
        case MoveKind::MoveEndpoint: {
            NodeId u = std::min(h, j), v = std::max(h, j);
            Slot e_idx = edge_rank(g, u, v);
            int side = j == u ? 0 : 1;
            Slot per_edge = 2 * static_cast<Slot>(n_ - 2);
            return 2 * pair_count_ + e_idx * per_edge +
                   static_cast<Slot>(side) * static_cast<Slot>(n_ - 2) +
                   static_cast<Slot>(index_excluding2(i, h, j));
        }
        case MoveKind::CoreCollapse:
        case MoveKind::CoreExpand: {
            NodeId a = std::min(i, j), bnode = std::max(i, j);
            for (std::size_t b = 0; b < blocks_.size(); ++b) {
                if (a >= blocks_[b].start && a < blocks_[b].start + blocks_[b].size) {
                    Slot s = static_cast<Slot>(blocks_[b].start);
                    Slot pr = rank_pair(blocks_[b].size, a - blocks_[b].start, bnode - blocks_[b].start);
                    return 2 * pair_count_ + me_size_ + ce_prefix_[b] + pr * s + static_cast<Slot>(h);
                }
            }
            throw std::invalid_argument("encode: collapse/expand nodes outside any block");
        }
        case MoveKind::HalfCollapse:
        case MoveKind::HalfExpand: {
            for (std::size_t b = 0; b < blocks_.size(); ++b) {
                if (i >= blocks_[b].start && i < blocks_[b].start + blocks_[b].size) {
                    Slot s = static_cast<Slot>(blocks_[b].start);
                    NodeId t = blocks_[b].size;
                    NodeId li = i - blocks_[b].start;
                    NodeId lj = j - blocks_[b].start;
                    Slot r = static_cast<Slot>(li) * static_cast<Slot>(t - 1) +
                             static_cast<Slot>(lj > li ? lj - 1 : lj);
                    return 2 * pair_count_ + me_size_ + ce_size_ + half_prefix_[b] + r * s +
                           static_cast<Slot>(h);
                }
            }
            throw std::invalid_argument("encode: half-move nodes outside any block");
        }
        case MoveKind::SwitchTopCore: {
            NodeId v[4] = {h, i, j, l};
            std::sort(v, v + 4);
            auto partner_id = [&](NodeId x1, NodeId y1, NodeId x2, NodeId y2) {
                // pairing index from the partner of the smallest node
                NodeId p;
                if (v[0] == x1) p = y1;
                else if (v[0] == y1) p = x1;
                else if (v[0] == x2) p = y2;
                else p = x2;
                return p == v[1] ? 0 : (p == v[2] ? 1 : 2);
            };
            int rem = partner_id(h, i, j, l);
            int ins = partner_id(h, j, i, l);
            int variant = 0;
            while (kSwitchVariants[variant][0] != rem || kSwitchVariants[variant][1] != ins) ++variant;
            return 2 * pair_count_ + me_size_ + ce_size_ + half_size_ +
                   rank_subset4(top_size_, v) * 6 + static_cast<Slot>(variant);
        }
    }
    throw std::invalid_argument("encode: unknown move kind");
}

Slot universe_size(const Graph& g, MoveKind kind) {
    auto cores = core_values(g);
    bool sw = !cores.empty() && cores[0] == 2;
    UniverseTable t(cores, sw);
    t.set_edge_count(g.num_edges());
    switch (kind) {
        case MoveKind::Add: return t.add_size();
        case MoveKind::Delete: return t.delete_size();
        case MoveKind::MoveEndpoint: return t.move_endpoint_size();
        case MoveKind::CoreCollapse:
        case MoveKind::CoreExpand: return t.collapse_expand_size();
        case MoveKind::HalfCollapse:
        case MoveKind::HalfExpand: return t.half_size();
        case MoveKind::SwitchTopCore: return t.switch_size();
    }
    return 0;
}

namespace {

bool all_distinct(NodeId a, NodeId b, NodeId c) { return a != b && a != c && b != c; }

bool structural_ok(const Graph& g, const Move& mv, const std::vector<int>& c, int top) {
    NodeId h = mv.nodes[0], i = mv.nodes[1], j = mv.nodes[2], l = mv.nodes[3];
    switch (mv.kind) {
        case MoveKind::Add:
            return h != i && !g.has_edge(h, i);
        case MoveKind::Delete:
            return h != i && g.has_edge(h, i);
        case MoveKind::MoveEndpoint:
            return all_distinct(h, i, j) && c[j] < std::min(c[h], c[i]) && g.has_edge(h, j) &&
                   !g.has_edge(i, j);
        case MoveKind::CoreCollapse:
            return all_distinct(h, i, j) && c[h] > c[i] && c[i] == c[j] && g.has_edge(h, i) &&
                   g.has_edge(h, j) && !g.has_edge(i, j);
        case MoveKind::CoreExpand:
            return all_distinct(h, i, j) && c[h] > c[i] && c[i] == c[j] && g.has_edge(i, j) &&
                   !g.has_edge(h, i) && !g.has_edge(h, j);
        case MoveKind::HalfCollapse:
            return all_distinct(h, i, j) && c[h] > c[i] && c[i] == c[j] && g.has_edge(h, i) &&
                   !g.has_edge(i, j);
        case MoveKind::HalfExpand:
            return all_distinct(h, i, j) && c[h] > c[i] && c[i] == c[j] && g.has_edge(i, j) &&
                   !g.has_edge(h, i);
        case MoveKind::SwitchTopCore:
            return all_distinct(h, i, j) && h != l && i != l && j != l && c[h] == top &&
                   c[i] == top && c[j] == top && c[l] == top && g.has_edge(h, i) &&
                   g.has_edge(j, l) && !g.has_edge(h, j) && !g.has_edge(i, l);
    }
    return false;
}

}  // namespace

bool validate(const Graph& g, const Move& mv, const std::vector<int>& core_of) {
    int top = core_of.empty() ? 0 : *std::max_element(core_of.begin(), core_of.end());
    if (!structural_ok(g, mv, core_of, top)) return false;
    Graph tmp = g;
    apply_move(tmp, mv);
    return core_values(tmp) == core_of;
}

bool validate(const Graph& g, const Move& mv) { return validate(g, mv, core_values(g)); }

u64 ChainStats::accepted_total() const {
    u64 t = 0;
    for (u64 a : accepted) t += a;
    return t;
}

ChainState::ChainState(Graph g, const ChainConfig& cfg)
    : graph_(std::move(g)),
      target_(core_values(graph_)),
      table_(target_, !target_.empty() && target_[0] == 2),
      switch_enabled_(!target_.empty() && target_[0] == 2) {
    table_.set_edge_count(graph_.num_edges());
    Slot u0 = table_.total();
    delta_hat_ = cfg.delta_hat != 0 ? cfg.delta_hat : pow2_ceil_128(std::max<Slot>(u0, 1)) * 4;
    delta_hat_init_ = delta_hat_;
}

bool ChainState::validate_fast(const Move& mv) {
    if (!structural_ok(graph_, mv, target_, target_[0])) return false;
    apply_move(graph_, mv);
    core_values(graph_, cores_tmp_, scratch_);
    bool ok = cores_tmp_ == target_;
    apply_move(graph_, invert_move(mv));
    return ok;
}

void ChainState::step(std::mt19937_64& rng) {
    table_.set_edge_count(graph_.num_edges());
    Slot u = table_.total();
    while (u > delta_hat_) {
        delta_hat_ <<= 1;
        stats_.doublings.emplace_back(step_count_, delta_hat_);
        stats_.last_doubling_step = step_count_;
    }

    Slot slot = uniform_below_128(rng, 2 * delta_hat_);
    if (slot >= u) {
        ++stats_.self_loops;
    } else {
        auto mv = table_.decode(graph_, slot);
        if (!mv) {
            ++stats_.self_loops;
        } else if (validate_fast(*mv)) {
            apply_move(graph_, *mv);
            ++stats_.accepted[static_cast<int>(mv->kind)];
#ifndef NDEBUG
            core_values(graph_, cores_tmp_, scratch_);
            assert(cores_tmp_ == target_);
#endif
        } else {
            ++stats_.rejected;
        }
    }
    ++step_count_;
}

void transition(ChainState& state, std::mt19937_64& rng) { state.step(rng); }

namespace {

RunReport make_run_report(u64 run, const ChainState& st) {
    RunReport r;
    r.run = run;
    r.steps = st.step_count();
    r.delta_hat_init = st.delta_hat_initial();
    r.delta_hat_final = st.delta_hat();
    for (const auto& [s, v] : st.stats().doublings) r.doubling_steps.push_back(s);
    r.stats = st.stats();
    return r;
}

// Runs until the configured step count, extending whenever a doubling lands
// in the second half: the sampled state must come from a stretch where the
// slot count was stable for at least half the run.
void run_to_goal(ChainState& st, u64 base_steps, std::mt19937_64& rng) {
    u64 goal = base_steps;
    while (st.step_count() < goal) {
        st.step(rng);
        if (!st.stats().doublings.empty())
            goal = std::max(goal, 2 * st.stats().last_doubling_step + 1);
    }
}

std::vector<Graph> chain_samples(const Graph& seed, const ChainConfig& cfg, SampleReport* report) {
    u64 steps0 = cfg.steps != 0 ? cfg.steps : 100 * static_cast<u64>(std::max<std::size_t>(seed.num_edges(), 1));
    u64 ns = cfg.num_samples;
    std::vector<Graph> out(ns);
    std::vector<RunReport> runs;

    if (cfg.sample_every > 0) {
        // One walker: burn in, then snapshot every sample_every steps.
        auto rng = derive_stream(cfg.seed, 0);
        ChainState st(seed, cfg);
        run_to_goal(st, steps0, rng);
        for (u64 s = 0; s < ns; ++s) {
            for (u64 t = 0; t < cfg.sample_every; ++t) st.step(rng);
            out[s] = st.graph();
        }
        runs.push_back(make_run_report(0, st));
    } else {
        runs.resize(ns);
        auto run_one = [&](u64 r) {
            auto rng = derive_stream(cfg.seed, r);
            ChainState st(seed, cfg);
            run_to_goal(st, steps0, rng);
            out[r] = st.graph();
            runs[r] = make_run_report(r, st);
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
    }
    if (report) report->runs = std::move(runs);
    return out;
}

std::vector<Graph> sample_sorted(const Graph& sorted_seed, const CoreSequence& target,
                                 const ChainConfig& cfg, SampleReport* report) {
    int c1 = target.c1();
    u64 ns = cfg.num_samples;
    if (c1 == 0) return std::vector<Graph>(ns, Graph(target.size()));
    if (c1 == 1) {
        std::vector<Graph> out;
        out.reserve(ns);
        for (u64 r = 0; r < ns; ++r) {
            auto rng = derive_stream(cfg.seed, r);
            out.push_back(sample_forest_core1(target, rng));
        }
        return out;
    }
    return chain_samples(sorted_seed, cfg, report);
}

}  // namespace

std::vector<Graph> sample(const CoreSequence& c, const ChainConfig& cfg, SampleReport* report) {
    std::string why = realizability_violation(c);
    if (!why.empty()) throw std::invalid_argument("sample: unrealizable sequence: " + why);
    Graph seed = c.c1() >= 2 ? realize(c) : Graph(c.size());
    return sample_sorted(seed, c, cfg, report);
}

std::vector<Graph> sample(const Graph& g, const ChainConfig& cfg, SampleReport* report) {
    auto [sorted, map] = relabel_by_core(g);
    CoreSequence target = CoreSequence::sorted(core_values(sorted));
    auto internal = sample_sorted(sorted, target, cfg, report);

    // Back to the caller's labels.
    std::vector<Graph> out;
    out.reserve(internal.size());
    for (const auto& s : internal) {
        Graph o(g.num_nodes());
        for (const auto& [u, v] : s.edges()) o.add_edge(map.to_external[u], map.to_external[v]);
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace corewalk
