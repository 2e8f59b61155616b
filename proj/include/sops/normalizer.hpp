#pragma once

#include <vector>

#include "sops/dynamics.hpp"

namespace sops {

// Transforms any connected hole-free configuration into a straight line of
// particles by a sequence of single-particle moves, every one of which passes
// is_valid_move against the configuration it is applied to.
//
// Geometry conventions: cells are ordered by their NW-SE diagonal q + r
// ("columns" of the construction), then by r within a diagonal. The anchor is
// the minimum in that order; once fixed it never moves again, and eliminated
// particles are parked on consecutive cells southwest of it, forming the
// final line.
class Normalizer {
  public:
    explicit Normalizer(const Configuration& sigma);

    // One potential move: when the anchor's first neighbor lies east of it,
    // the anchor steps southeast so the neighbor ends up northeast of it.
    void initialize_anchor();

    // Handles the one shape in which a gap sits directly northwest of the
    // anchor: the blocking particle two steps northwest relocates onto the
    // line in three moves. Returns false when the shape is absent.
    bool clear_base_gap();

    // Walks particle v counterclockwise around the boundary until it lands
    // on the next free line slot.
    void eliminate(Cell v);

    // One construction round: find the shortest boundary walk prefix with an
    // adjacent gap and apply the matching case (base gap, repeated walk
    // particle, direct elimination, or gap relocation). When the boundary is
    // gap-free a directly eliminable particle is removed instead.
    void round();

    void run();  // rounds until only the anchor and the line remain

    bool done() const { return eliminated_ == cfg_.size() - 1; }
    Cell anchor() const { return anchor_; }
    int eliminated() const { return eliminated_; }
    const std::vector<Move>& moves() const { return moves_; }
    const Configuration& config() const { return cfg_; }

    struct Stats {
        long long rounds = 0;
        long long base_gap_rounds = 0;
        long long duplicate_rounds = 0;
        long long direct_eliminations = 0;
        long long gap_relocation_rounds = 0;
        long long opposite_gap_rounds = 0;
    };
    const Stats& stats() const { return stats_; }

  private:
    struct Visit {
        Cell cell;
        std::vector<Cell> left_span;  // unoccupied cells scanned before the next particle
    };

    bool active(Cell c) const;
    std::vector<Visit> boundary_walk() const;
    Cell line_slot() const;  // next free parking cell
    void apply_move(Cell from, Cell to);
    // Moves q (or a particle beyond it) next to q at target cell l per the
    // two-neighbor relocation scheme; returns true when q itself moved.
    bool relocate_towards(Cell q, Cell l, int depth);
    void repair_new_gap(Cell q_old, Cell l, int d);
    bool on_current_walk(Cell c) const;

    Configuration cfg_;
    Cell anchor_{0, 0};
    int eliminated_ = 0;
    bool initialized_ = false;
    std::vector<Move> moves_;
    std::unordered_set<Cell, CellHash> parked_;
    Stats stats_;
    std::vector<Visit> current_walk_;
    int current_gap_idx_ = -1;  // walk prefix length of the round's gap, or -1
    long long round_start_elim_ = 0;
    long long round_start_gap_len_ = 0;
};

struct NormalizeResult {
    std::vector<Move> moves;
    Cell anchor;
    Configuration final_config;
    Normalizer::Stats stats;
};

NormalizeResult normalize(const Configuration& sigma);

// The line the normalizer produces for this anchor and size.
std::vector<Cell> expected_line(Cell anchor, int n);

}  // namespace sops
