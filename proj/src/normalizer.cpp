#include "sops/normalizer.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace sops {

namespace {

// Directions in the spec embedding. The construction reads them as: NW runs
// "up" a diagonal, NE/E lead to the next diagonal ("right"), SW is where the
// finished line grows.
constexpr int E = 0, NE = 1, NW = 2, W = 3, SW = 4, SE = 5;

inline int diag(Cell c) { return c.q + c.r; }

inline bool diag_before(Cell a, Cell b) {
    return diag(a) != diag(b) ? diag(a) < diag(b) : a.r < b.r;
}

inline int mod6(int x) { return ((x % 6) + 6) % 6; }

// Occupied-direction bitmask helpers.
inline bool bit(unsigned m, int d) { return (m >> mod6(d)) & 1u; }

inline int popcount6(unsigned m) { return __builtin_popcount(m & 0x3f); }

// True when the occupied directions form one contiguous arc of the 6-cycle.
bool single_run(unsigned m) {
    m &= 0x3f;
    if (m == 0) return false;
    if (m == 0x3f) return true;
    int runs = 0;
    for (int d = 0; d < 6; ++d)
        if (bit(m, d) && !bit(m, d - 1)) ++runs;
    return runs == 1;
}

[[noreturn]] void fail(const std::string& what) {
    throw std::logic_error("normalizer: " + what);
}

}  // namespace

Normalizer::Normalizer(const Configuration& sigma) : cfg_(sigma) {
    if (cfg_.size() == 0) throw std::invalid_argument("normalizer: empty configuration");
    if (!is_connected(cfg_)) throw std::invalid_argument("normalizer: disconnected configuration");
    if (has_hole(cfg_)) throw std::invalid_argument("normalizer: configuration has a hole");
    anchor_ = *cfg_.cells().begin();
    for (const Cell& c : cfg_.cells())
        if (diag_before(c, anchor_)) anchor_ = c;
}

bool Normalizer::active(Cell c) const { return cfg_.occupied(c) && !parked_.contains(c); }

Cell Normalizer::line_slot() const {
    return anchor_ + Cell{0, -(eliminated_ + 1)};
}

void Normalizer::apply_move(Cell from, Cell to) {
    if (!is_valid_move(cfg_, Move{from, to})) fail("emitted move failed validity");
    cfg_.move_particle(from, to);
    moves_.push_back(Move{from, to});
    if (!is_connected(cfg_)) fail("move broke connectivity");
    if (has_hole(cfg_)) fail("move created a hole");
}

void Normalizer::initialize_anchor() {
    if (initialized_) return;
    initialized_ = true;
    if (cfg_.size() < 2) return;
    for (int d : {W, SW, SE})
        if (cfg_.occupied(neighbor(anchor_, {d}))) fail("anchor is not extremal");
    // First neighbor: clockwise scan of n(anchor) starting NW.
    int tDir = -1;
    for (int d : {NW, NE, E}) {
        if (active(neighbor(anchor_, {d}))) {
            tDir = d;
            break;
        }
    }
    if (tDir < 0) fail("anchor has no active neighbor");
    if (tDir == E) {
        Cell down = neighbor(anchor_, {SE});
        apply_move(anchor_, down);
        anchor_ = down;
    }
}

std::vector<Normalizer::Visit> Normalizer::boundary_walk() const {
    std::vector<Visit> visits;
    Cell s = anchor_;
    int backDir = SW;  // fictitious predecessor below-left of the anchor
    Cell cur = s;
    int firstOut = -1;
    long long guard = 0;
    while (true) {
        if (++guard > 16LL * cfg_.size() + 64) fail("boundary walk failed to close");
        Visit v;
        v.cell = cur;
        int outDir = -1;
        for (int k = 1; k <= 6; ++k) {
            int d = mod6(backDir - k);
            Cell nb = neighbor(cur, {d});
            if (active(nb)) {
                outDir = d;
                break;
            }
            v.left_span.push_back(nb);
        }
        if (outDir < 0) fail("boundary walk found an isolated cell");
        if (firstOut < 0) {
            firstOut = outDir;
            if (!(outDir == NW || outDir == NE || outDir == E))
                fail("anchor neighbor outside the expected arc");
        } else if (cur == s && outDir == firstOut) {
            // Closing visit: its span runs from the arrival direction to the
            // anchor's fictitious predecessor, exclusive.
            Visit last;
            last.cell = s;
            for (int k = 1; k <= 6; ++k) {
                int d = mod6(backDir - k);
                if (d == SW) break;
                last.left_span.push_back(neighbor(s, {d}));
            }
            visits.push_back(std::move(last));
            break;
        }
        visits.push_back(std::move(v));
        cur = neighbor(cur, {outDir});
        backDir = mod6(outDir + 3);
    }
    for (const Visit& v : visits)
        for (const Cell& c : v.left_span)
            if (cfg_.occupied(c)) fail("parked or stray particle in a walk span");
    return visits;
}

void Normalizer::eliminate(Cell v) {
    Cell slot = line_slot();
    long long guard = 0;
    while (v != slot) {
        if (++guard > 8LL * cfg_.size() + 64) fail("elimination orbit failed to park");
        unsigned m = 0;
        for (int d = 0; d < 6; ++d)
            if (cfg_.occupied(neighbor(v, {d}))) m |= 1u << d;
        if (!single_run(m) || popcount6(m) > 4) fail("orbiting particle lost its support arc");
        int uDir = -1;
        for (int d = 0; d < 6; ++d)
            if (bit(m, d) && !bit(m, d - 1)) uDir = d;  // clockwise end of the arc
        Cell target = neighbor(v, {mod6(uDir - 1)});
        if (cfg_.occupied(target)) fail("orbit target occupied");
        apply_move(v, target);
        v = target;
    }
    parked_.insert(slot);
    ++eliminated_;
}

bool Normalizer::clear_base_gap() {
    Cell s = anchor_;
    Cell t = neighbor(s, {NE});
    Cell l = neighbor(s, {NW});
    Cell q = l + kDirOffsets[NW];
    if (cfg_.occupied(l) || !active(t)) return false;
    if (!cfg_.occupied(q)) return false;
    if (!is_gap(cfg_, l)) return false;
    apply_move(q, l);
    eliminate(l);
    return true;
}

bool Normalizer::on_current_walk(Cell c) const {
    for (int i = 0; i <= current_gap_idx_ && i < int(current_walk_.size()); ++i)
        if (current_walk_[i].cell == c) return true;
    return false;
}

// Relocation scheme for a particle q whose two neighbors flank an empty cell
// l one step away (n(q) holds them at 60 degrees either side of l). Either q
// itself ends up at l, or a particle from the far side does; returns true in
// the first case.
bool Normalizer::relocate_towards(Cell q, Cell l, int depth) {
    if (depth > cfg_.size() + 4) fail("relocation recursion exceeded depth bound");
    int d = direction_between(q, l).index;
    if (cfg_.occupied(l)) fail("relocation target already occupied");
    if (!cfg_.occupied(neighbor(q, {mod6(d - 1)})) || !cfg_.occupied(neighbor(q, {mod6(d + 1)})))
        fail("relocation flank cells missing");

    if (is_gap(cfg_, l)) {
        // A particle sits straight beyond l; clear it first.
        Cell qp = l + kDirOffsets[d];
        if (!cfg_.occupied(qp)) fail("gap target without a particle beyond it");
        unsigned m = 0;
        for (int dd = 0; dd < 6; ++dd)
            if (cfg_.occupied(neighbor(qp, {dd}))) m |= 1u << dd;
        if (!single_run(m)) {
            if (m != ((1u << mod6(d - 1)) | (1u << mod6(d + 1))))
                fail("far particle has an unexpected neighborhood");
            bool movedSelf = relocate_towards(qp, qp + kDirOffsets[d], depth + 1);
            if (!movedSelf) {
                // Someone filled qp's far cell; its neighborhood is connected now.
                m = 0;
                for (int dd = 0; dd < 6; ++dd)
                    if (cfg_.occupied(neighbor(qp, {dd}))) m |= 1u << dd;
                if (!single_run(m)) fail("far particle still disconnected after relocation");
                apply_move(qp, l);
                return false;
            }
            if (is_gap(cfg_, l)) fail("gap persisted after far particle moved away");
        } else {
            apply_move(qp, l);
            return false;
        }
    }

    // l is not a gap: q steps onto it; repair the one cell that can newly
    // become a gap, straight ahead of the move.
    Cell qOld = q;
    apply_move(q, l);
    Cell l2 = l + kDirOffsets[d];
    if (!cfg_.occupied(l2) && is_gap(cfg_, l2)) repair_new_gap(qOld, l, d);
    return true;
}

void Normalizer::repair_new_gap(Cell qOld, Cell l, int d) {
    Cell l1 = l + kDirOffsets[mod6(d - 1)];
    Cell l2 = l + kDirOffsets[d];
    Cell l3 = l + kDirOffsets[mod6(d + 1)];
    Cell bCell = l2 + kDirOffsets[mod6(d - 1)];
    Cell cCell = l2 + kDirOffsets[d];
    Cell dCell = l2 + kDirOffsets[mod6(d + 1)];
    Cell n1 = qOld + kDirOffsets[mod6(d - 1)];
    Cell n2 = qOld + kDirOffsets[mod6(d + 1)];
    if (cfg_.occupied(bCell)) {
        apply_move(n1, l1);
    } else if (cfg_.occupied(dCell)) {
        apply_move(n2, l3);
    } else if (cfg_.occupied(cCell)) {
        Cell c = cCell;
        unsigned m = 0;
        for (int dd = 0; dd < 6; ++dd)
            if (cfg_.occupied(neighbor(c, {dd}))) m |= 1u << dd;
        if (!single_run(m)) {
            if (m != ((1u << mod6(d - 1)) | (1u << mod6(d + 1))))
                fail("blocking particle has an unexpected neighborhood");
            bool movedSelf = relocate_towards(c, c + kDirOffsets[d], 1);
            if (movedSelf) {
                if (!cfg_.occupied(l2) && is_gap(cfg_, l2)) fail("gap persisted after repair");
                return;
            }
        }
        if (on_current_walk(c)) {
            eliminate(c);
        } else {
            apply_move(c, l2);
            eliminate(l2);
        }
    } else {
        // Nothing sits across the new gap: it cannot flank the walk prefix,
        // so the construction leaves it for a later round.
        return;
    }
    if (!cfg_.occupied(l2) && is_gap(cfg_, l2)) fail("gap persisted after repair");
}

void Normalizer::round() {
    if (done()) return;
    initialize_anchor();
    ++stats_.rounds;

    auto walk = boundary_walk();
    int gapIdx = -1;
    Cell gapCell{0, 0};
    for (int i = 0; i < int(walk.size()) && gapIdx < 0; ++i) {
        for (const Cell& c : walk[i].left_span) {
            if (is_gap(cfg_, c)) {
                gapIdx = i;
                gapCell = c;
                break;
            }
        }
    }
    current_walk_ = walk;
    current_gap_idx_ = gapIdx < 0 ? int(walk.size()) - 1 : gapIdx;
    round_start_elim_ = eliminated_;
    round_start_gap_len_ = gapIdx < 0 ? (1LL << 40) : gapIdx;

    if (gapIdx < 0) {
        // Gap-free boundary: eliminate the first once-visited particle with a
        // small connected neighborhood.
        for (int i = 1; i < int(walk.size()); ++i) {
            Cell v = walk[i].cell;
            if (v == anchor_) continue;
            int count = 0;
            for (const auto& vis : walk)
                if (vis.cell == v) ++count;
            if (count != 1) continue;
            unsigned m = 0;
            for (int dd = 0; dd < 6; ++dd)
                if (cfg_.occupied(neighbor(v, {dd}))) m |= 1u << dd;
            if (popcount6(m) <= 4 && single_run(m)) {
                ++stats_.direct_eliminations;
                eliminate(v);
                return;
            }
        }
        fail("gap-free boundary with no eliminable particle");
    }

    Cell v = walk[gapIdx].cell;

    if (gapIdx == 0) {
        ++stats_.base_gap_rounds;
        if (gapCell != neighbor(anchor_, {NW})) fail("anchor-adjacent gap off the expected cell");
        if (!clear_base_gap()) fail("base gap shape did not match");
        return;
    }

    // A walk prefix revisiting a particle hides an eliminable one between the
    // innermost pair of occurrences.
    int bestA = -1, bestB = -1;
    for (int a = 0; a <= gapIdx; ++a)
        for (int b = a + 1; b <= gapIdx; ++b)
            if (walk[a].cell == walk[b].cell && (bestA < 0 || b - a < bestB - bestA)) {
                bestA = a;
                bestB = b;
            }
    if (bestA >= 0) {
        ++stats_.duplicate_rounds;
        for (int j = bestA + 1; j < bestB; ++j) {
            Cell f = walk[j].cell;
            if (f == anchor_) continue;
            unsigned m = 0;
            for (int dd = 0; dd < 6; ++dd)
                if (cfg_.occupied(neighbor(f, {dd}))) m |= 1u << dd;
            if (popcount6(m) <= 4 && single_run(m)) {
                eliminate(f);
                return;
            }
        }
        fail("no eliminable particle between repeated walk visits");
    }

    unsigned m = 0;
    for (int dd = 0; dd < 6; ++dd)
        if (cfg_.occupied(neighbor(v, {dd}))) m |= 1u << dd;
    int deg = popcount6(m);

    if (single_run(m) && deg <= 4) {
        ++stats_.direct_eliminations;
        eliminate(v);
        return;
    }
    if (deg < 2 || deg > 3) fail("gap-blocked particle with unexpected degree");

    if (deg == 2) {
        int dirs[2], k = 0;
        for (int dd = 0; dd < 6; ++dd)
            if (bit(m, dd)) dirs[k++] = dd;
        if (mod6(dirs[1] - dirs[0]) == 3) {
            // Opposite neighbors: work on the particle across the gap.
            ++stats_.opposite_gap_rounds;
            Cell g = gapCell;
            Cell q = g + (g - v);
            if (!cfg_.occupied(q)) fail("no particle across the walk-end gap");
            unsigned mq = 0;
            for (int dd = 0; dd < 6; ++dd)
                if (cfg_.occupied(neighbor(q, {dd}))) mq |= 1u << dd;
            if (!single_run(mq)) {
                int target = -1;
                for (int f = 0; f < 6; ++f)
                    if (!bit(mq, f) && single_run(mq | (1u << f))) {
                        if (target >= 0) fail("ambiguous reconnection cell across gap");
                        target = f;
                    }
                if (target < 0) fail("no reconnection cell across gap");
                bool movedSelf = relocate_towards(q, neighbor(q, {target}), 0);
                if (movedSelf) return;  // q left the gap's side; the walk extends
                mq = 0;
                for (int dd = 0; dd < 6; ++dd)
                    if (cfg_.occupied(neighbor(q, {dd}))) mq |= 1u << dd;
                if (!single_run(mq)) fail("across-gap particle still disconnected");
            }
            apply_move(q, g);
            eliminate(g);
            return;
        }
    }

    // Two neighbors 120 degrees apart, or three with a unique reconnecting
    // cell: relocate v toward it (or pull a far particle into it).
    ++stats_.gap_relocation_rounds;
    int target = -1;
    for (int f = 0; f < 6; ++f)
        if (!bit(m, f) && single_run(m | (1u << f))) {
            if (target >= 0) fail("ambiguous reconnection cell");
            target = f;
        }
    if (target < 0) fail("no reconnection cell for disconnected neighborhood");
    bool movedSelf = relocate_towards(v, neighbor(v, {target}), 0);
    if (!movedSelf) {
        unsigned mv = 0;
        for (int dd = 0; dd < 6; ++dd)
            if (cfg_.occupied(neighbor(v, {dd}))) mv |= 1u << dd;
        if (!single_run(mv) || popcount6(mv) > 4) fail("walk-end particle still blocked");
        eliminate(v);
    }
}

void Normalizer::run() {
    initialize_anchor();
    long long n = cfg_.size();
    long long maxRounds = 2 * n * n + 2 * n + 16;
    // The round-start measure (eliminated, gap prefix length) must grow
    // lexicographically; gap-free rounds always eliminate.
    long long prevElim = -1, prevGapLen = -1;
    while (!done()) {
        if (--maxRounds < 0) fail("round budget exceeded");
        round();
        if (prevElim >= 0 && round_start_elim_ == prevElim && round_start_gap_len_ <= prevGapLen)
            fail("round made no progress");
        prevElim = round_start_elim_;
        prevGapLen = round_start_gap_len_;
    }
}

NormalizeResult normalize(const Configuration& sigma) {
    Normalizer n(sigma);
    n.run();
    NormalizeResult out{n.moves(), n.anchor(), n.config(), n.stats()};
    return out;
}

std::vector<Cell> expected_line(Cell anchor, int n) {
    std::vector<Cell> out;
    for (int k = 0; k < n; ++k) out.push_back(anchor + Cell{0, -k});
    return out;
}

}  // namespace sops
