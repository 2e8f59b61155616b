#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "sops/configuration.hpp"

namespace sops {

// Candidate relocation of one particle from an occupied cell to an adjacent
// unoccupied cell. triangle_delta is t' - t with the mover itself excluded
// from both counts, so it lies in [-6, 6].
struct Move {
    Cell from;
    Cell to;
    friend bool operator==(const Move&, const Move&) = default;
};

struct ChainParams {
    double lambda = 1.0;
    uint64_t seed = 0;
};

// Movement properties for the pair (l, l'), evaluated with the mover lifted
// off l. Property 1 needs one or two shared occupied neighbors and every
// particle on the 8-cell ring around the pair connected to a shared neighbor
// inside the ring. Property 2 needs no shared neighbor, at least one other
// neighbor on each side, and each side's neighbors connected among
// themselves. The two are mutually exclusive by construction.
bool satisfies_property1(const Configuration& c, Cell l, Cell lp);
bool satisfies_property2(const Configuration& c, Cell l, Cell lp);

// Triangle count change for moving a particle from `from` to adjacent `to`,
// counting only triangles completed by other particles.
int triangle_delta(const Configuration& c, Cell from, Cell to);

// A move is valid when the origin cell has fewer than five neighboring
// particles (the mover excluded) and the pair satisfies Property 1 or 2.
// The Metropolis acceptance probability is not part of validity.
bool is_valid_move(const Configuration& c, const Move& m);

// One chain instance: uniform particle, uniform direction, Metropolis
// acceptance min(1, lambda^dt). Deterministic given (params.seed, step count).
class Chain {
  public:
    Chain(const Configuration& initial, const ChainParams& params);

    // Runs one iteration; returns true when a particle moved.
    bool step();
    void run(long long steps);

    const Configuration& config() const { return cfg_; }
    long long steps_taken() const { return steps_; }
    long long accepted_moves() const { return accepted_; }
    const ChainParams& params() const { return params_; }

    // Perimeter from the cached triangle count via p = 2n - t - 2; valid
    // because the chain preserves connectivity and hole-freeness.
    long long perimeter_fast() const {
        return 2LL * cfg_.size() - cfg_.triangle_count() - 2;
    }

    // Full recomputation cross-check: connectivity, hole-freeness, cached
    // counts, and the triangle/edge/perimeter identities. Throws on failure.
    void audit() const;

  private:
    Configuration cfg_;
    std::vector<Cell> particles_;
    std::unordered_map<Cell, int, CellHash> index_;
    ChainParams params_;
    std::mt19937_64 rng_;
    double lambda_pow_[13];  // lambda^(k-6) for k in [0, 12]
    long long steps_ = 0;
    long long accepted_ = 0;
};

// Exact one-step probability between canonical configurations of equal size,
// accumulated over every (particle, direction) choice that maps sigma onto
// tau; distinct choices can reach the same translation class. The diagonal
// P(sigma, sigma) collects occupied targets, invalid moves, and Metropolis
// rejections.
double transition_probability(const Configuration& sigma, const Configuration& tau,
                              double lambda);

}  // namespace sops
