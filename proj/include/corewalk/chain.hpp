#pragma once

#include "corewalk/graph.hpp"
#include "corewalk/rng.hpp"

#include <array>
#include <optional>
#include <random>
#include <vector>

namespace corewalk {

// Slot indices can exceed 64 bits (the top-core switch universe grows like
// n1^4), so all slot arithmetic is 128-bit.
using Slot = u128;

enum class MoveKind {
    Add,
    Delete,
    MoveEndpoint,
    CoreCollapse,
    CoreExpand,
    HalfCollapse,
    HalfExpand,
    SwitchTopCore,
};
constexpr int kNumMoveKinds = 8;
const char* move_kind_name(MoveKind k);

// One proposed transition. Node roles by kind:
//   Add/Delete:        (i, j)            toggle edge (i,j)
//   MoveEndpoint:      (h, i, j)         delete (h,j), insert (i,j)
//   CoreCollapse:      (h, i, j)         delete (h,i),(h,j), insert (i,j)
//   CoreExpand:        (h, i, j)         delete (i,j), insert (h,i),(h,j)
//   HalfCollapse:      (h, i, j)         delete (h,i), insert (i,j)
//   HalfExpand:        (h, i, j)         delete (i,j), insert (h,i)
//   SwitchTopCore:     (h, i, j, l)      delete (h,i),(j,l), insert (h,j),(i,l)
struct Move {
    MoveKind kind;
    std::array<NodeId, 4> nodes{-1, -1, -1, -1};

    bool operator==(const Move&) const = default;
};

// The inverse restores the graph: apply_move(g, mv); apply_move(g, invert_move(mv)).
Move invert_move(const Move& mv);
void apply_move(Graph& g, const Move& mv);

// Candidate-slot layout for one target core assignment. Slots [0, total())
// decode injectively to candidates in fixed region order Add, Delete,
// MoveEndpoint, Collapse/Expand (shared), half-moves (shared), switch.
// Everything except the MoveEndpoint region is independent of the current
// edge set; set_edge_count() refreshes that one.
//
// Collapse/Expand share one (h, {i,j}) universe and half-moves one ordered
// (h, i, j) universe, both restricted to c_h > c_i = c_j (a static condition,
// since node labels are core-sorted); the current edge states pick the
// direction, slots matching neither pattern propose nothing.
class UniverseTable {
  public:
    // core_of must be non-increasing (core-sorted labels).
    UniverseTable(const std::vector<int>& core_of, bool switch_enabled);

    void set_edge_count(std::size_t m);

    Slot total() const { return total_; }
    Slot add_size() const { return pair_count_; }
    Slot delete_size() const { return pair_count_; }
    Slot move_endpoint_size() const { return me_size_; }
    Slot collapse_expand_size() const { return ce_size_; }
    Slot half_size() const { return half_size_; }
    Slot switch_size() const { return switch_size_; }

    // Slot -> candidate. nullopt for self-loop padding (slot >= total()) and
    // for shared-universe slots whose edge states match neither direction.
    std::optional<Move> decode(const Graph& g, Slot slot) const;

    // Candidate -> slot; inverse of decode on decodable moves. Used to check
    // proposal symmetry.
    Slot encode(const Graph& g, const Move& mv) const;

  private:
    struct Block {
        NodeId start, size;  // same-core run; nodes [0,start) have larger cores
    };

    NodeId n_;
    bool switch_enabled_;
    NodeId top_size_ = 0;
    std::vector<Block> blocks_;       // blocks with start>0 && size>=2
    std::vector<Slot> ce_prefix_;     // per-block cumulative collapse/expand sizes
    std::vector<Slot> half_prefix_;

    Slot pair_count_ = 0;
    Slot me_size_ = 0;
    Slot ce_size_ = 0;
    Slot half_size_ = 0;
    Slot switch_size_ = 0;
    Slot total_ = 0;
};

// Per-kind universe size for a standalone graph (computes the decomposition
// itself; shared-universe kinds report the shared size).
Slot universe_size(const Graph& g, MoveKind kind);

// True iff the kind-specific edge/core preconditions hold AND applying the
// move leaves every node's core value unchanged (checked by full peeling).
// The per-node check is what makes every accepted move invertible in place.
bool validate(const Graph& g, const Move& mv);
bool validate(const Graph& g, const Move& mv, const std::vector<int>& core_of);

struct ChainConfig {
    u64 steps = 0;          // 0: 100 * (edges of the seed graph)
    u64 num_samples = 50;
    u64 sample_every = 0;   // 0: independent runs; else one thinned run
    u64 seed = 1;
    Slot delta_hat = 0;     // 0: pow2_ceil(U(seed)) * 4
    int jobs = 1;           // worker threads for independent runs
};

struct ChainStats {
    std::array<u64, kNumMoveKinds> accepted{};
    u64 rejected = 0;        // decoded but failed validation
    u64 self_loops = 0;      // padding slots and undecodable shared slots
    std::vector<std::pair<u64, Slot>> doublings;  // (step, new delta_hat)
    u64 last_doubling_step = 0;

    u64 accepted_total() const;
};

// One random walker. The graph must carry core-sorted labels (non-increasing
// core values); seed graphs from realize() already do, others need
// relabel_by_core() first.
class ChainState {
  public:
    ChainState(Graph g, const ChainConfig& cfg);

    void step(std::mt19937_64& rng);

    const Graph& graph() const { return graph_; }
    const std::vector<int>& target_cores() const { return target_; }
    Slot delta_hat() const { return delta_hat_; }
    Slot delta_hat_initial() const { return delta_hat_init_; }
    u64 step_count() const { return step_count_; }
    const ChainStats& stats() const { return stats_; }
    bool switch_enabled() const { return switch_enabled_; }
    Slot universe_total() const { return table_.total(); }

  private:
    bool validate_fast(const Move& mv);

    Graph graph_;
    std::vector<int> target_;   // per-label target core values
    UniverseTable table_;
    bool switch_enabled_;
    Slot delta_hat_;
    Slot delta_hat_init_;
    u64 step_count_ = 0;
    ChainStats stats_;
    PeelScratch scratch_;
    std::vector<int> cores_tmp_;
};

void transition(ChainState& state, std::mt19937_64& rng);

// Per-run summary for manifests.
struct RunReport {
    u64 run = 0;
    u64 steps = 0;
    Slot delta_hat_init = 0;
    Slot delta_hat_final = 0;
    std::vector<u64> doubling_steps;
    ChainStats stats;
};

struct SampleReport {
    std::vector<RunReport> runs;
};

// num_samples end states of independent runs (or one thinned run when
// sample_every > 0). Dispatch on the top core value: >= 3 base move set,
// == 2 base plus top-core switches, == 1 the exact forest sampler, == 0 the
// empty graph. Graph inputs are relabeled core-sorted internally; outputs use
// the input's labels.
std::vector<Graph> sample(const Graph& g, const ChainConfig& cfg, SampleReport* report = nullptr);
std::vector<Graph> sample(const CoreSequence& c, const ChainConfig& cfg, SampleReport* report = nullptr);

}  // namespace corewalk
