#pragma once

#include "sops/lattice.hpp"

namespace sops {

// Local movement predicates over an arbitrary occupancy probe. The probe
// sees the world with the mover already lifted off the board; both the
// sequential chain and the asynchronous engine (which additionally masks
// heads of expanded neighbors) share these rules.

template <class OccFn>
int degree_probe(OccFn&& occ, Cell c) {
    int deg = 0;
    for (int d = 0; d < 6; ++d)
        if (occ(neighbor(c, {d}))) ++deg;
    return deg;
}

template <class OccFn>
int triangles_probe(OccFn&& occ, Cell c) {
    int t = 0;
    for (int d = 0; d < 6; ++d) {
        auto [a, b] = face_partners(c, d);
        if (occ(a) && occ(b)) ++t;
    }
    return t;
}

template <class OccFn>
bool property1_probe(OccFn&& occ, Cell l, Cell lp) {
    auto ring = extended_neighborhood(l, lp);  // ring[0] and ring[4] are the shared cells
    bool on[8];
    for (int i = 0; i < 8; ++i) on[i] = occ(ring[i]);
    if (!on[0] && !on[4]) return false;  // one or two shared neighbors required
    for (int i = 0; i < 8; ++i) {
        if (!on[i]) continue;
        bool reached = false;
        for (int s = 0; s < 8 && on[(i + s) % 8]; ++s) {
            int idx = (i + s) % 8;
            if (idx == 0 || idx == 4) { reached = true; break; }
        }
        for (int s = 0; s < 8 && !reached && on[(i - s + 8) % 8]; ++s) {
            int idx = (i - s + 8) % 8;
            if (idx == 0 || idx == 4) { reached = true; break; }
        }
        if (!reached) return false;
    }
    return true;
}

template <class OccFn>
bool property2_probe(OccFn&& occ, Cell l, Cell lp) {
    int d = direction_between(l, lp).index;
    if (occ(neighbor(l, {(d + 1) % 6})) || occ(neighbor(l, {(d + 5) % 6})))
        return false;  // no shared neighbors allowed
    auto side_ok = [&](Cell center, Cell other) {
        int dOther = direction_between(center, other).index;
        bool on[5];
        int cnt = 0;
        for (int k = 1; k <= 5; ++k) {
            on[k - 1] = occ(neighbor(center, {(dOther + k) % 6}));
            if (on[k - 1]) ++cnt;
        }
        if (cnt == 0) return false;
        int runs = 0;
        for (int i = 0; i < 5; ++i)
            if (on[i] && (i == 0 || !on[i - 1])) ++runs;
        return runs == 1;
    };
    return side_ok(l, lp) && side_ok(lp, l);
}

// Conditions (1) and (2) of the contraction rule: fewer than five neighbors
// at the origin cell and Property 1 or Property 2 on the pair.
template <class OccFn>
bool move_permitted_probe(OccFn&& occ, Cell l, Cell lp) {
    int deg = 0;
    for (int d = 0; d < 6; ++d) {
        Cell nb = neighbor(l, {d});
        if (nb != lp && occ(nb)) ++deg;
    }
    if (deg == 5) return false;
    return property1_probe(occ, l, lp) || property2_probe(occ, l, lp);
}

}  // namespace sops
