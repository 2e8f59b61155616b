#pragma once

#include <cstdint>
#include <iosfwd>
#include <queue>
#include <random>
#include <vector>

#include "sops/dynamics.hpp"

namespace sops {

enum class ActionKind { Expand, ContractHead, ContractTail, Noop };

struct ActionRecord {
    double time = 0;
    int particle = 0;
    ActionKind action = ActionKind::Noop;
    double q = 0;
    int dir = 0;
    bool flag = false;
    Cell tail{0, 0};  // cells involved; not part of the CSV schema
    Cell head{0, 0};
};

using Trace = std::vector<ActionRecord>;

struct AsyncParams {
    double lambda = 1.0;
    uint64_t seed = 0;
    bool audit = false;  // per-event flag/footprint checks (throws on violation)
};

// Event-driven emulation of the per-particle algorithm: Poisson clocks with
// mean 1, expansion into an empty neighbor when no expanded particle is
// adjacent, a one-bit flag claiming the neighborhood, and contraction to the
// head only when the move conditions hold and the flag is set. Identical
// (seed, configuration) gives an identical trace.
class AsyncEngine {
  public:
    AsyncEngine(const Configuration& initial, const AsyncParams& params);

    void run_events(long long max_events);
    void run_until(double time_horizon);
    // Lets every expanded particle contract (per its normal rules) without
    // admitting new expansions, so the world ends fully contracted.
    void drain();

    const Trace& trace() const { return trace_; }
    double now() const { return now_; }
    long long events_processed() const { return events_; }
    int particle_count() const { return int(particles_.size()); }

    // Configuration of tails (equals the particle cells once contracted).
    Configuration contracted_config() const;
    bool all_contracted() const;

    // Pairwise check: no flagged expanded particle sits in or adjacent to
    // another flagged expanded particle's footprint.
    void check_flag_disjointness() const;

  private:
    struct Particle {
        Cell tail;
        Cell head{0, 0};
        bool expanded = false;
        bool flag = false;
        double q = 0;  // drawn when choosing the expansion target
        int dir = 0;
        double next_activation = 0;
    };

    void activate(int id);
    void schedule(int id);
    bool effective_occupied(Cell x, int self) const;  // masks heads of other expanded particles
    int occupant(Cell x) const;

    AsyncParams params_;
    std::vector<Particle> particles_;
    std::unordered_map<Cell, int, CellHash> occupant_;  // covers tails and heads
    using QueueEntry = std::pair<double, int>;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue_;
    std::mt19937_64 rng_;
    std::exponential_distribution<double> exp_dist_{1.0};
    Trace trace_;
    double now_ = 0;
    long long events_ = 0;
    double lambda_pow_[13];
};

// Completed relocations (expansion later confirmed by a head contraction);
// aborted expansions drop out.
std::vector<Move> reduce_to_chain_trace(const Trace& trace);

// CSV schema: time,particle,action,q,dir,flag.
void write_trace_csv(std::ostream& out, const Trace& trace);

}  // namespace sops
