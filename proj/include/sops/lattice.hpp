#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace sops {

// Axial coordinates on the triangular lattice. The standard embedding maps
// (q,r) to Cartesian x = q + r/2, y = r*sqrt(3)/2, so direction 0 points east
// and indices increase counterclockwise:
//
//        2   1
//         \ /
//      3 -- . -- 0
//         / \
//        4   5
struct Cell {
    int q = 0;
    int r = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
    Cell operator+(const Cell& o) const { return {q + o.q, r + o.r}; }
    Cell operator-(const Cell& o) const { return {q - o.q, r - o.r}; }
};

struct Direction {
    int index = 0;  // 0..5, counterclockwise, 0 = east
};

inline constexpr std::array<Cell, 6> kDirOffsets = {{
    {1, 0},    // 0: E
    {0, 1},    // 1: NE
    {-1, 1},   // 2: NW
    {-1, 0},   // 3: W
    {0, -1},   // 4: SW
    {1, -1},   // 5: SE
}};

constexpr Direction opposite(Direction d) { return {(d.index + 3) % 6}; }
constexpr Direction ccw(Direction d) { return {(d.index + 1) % 6}; }
constexpr Direction cw(Direction d) { return {(d.index + 5) % 6}; }

inline Cell neighbor(Cell c, Direction d) { return c + kDirOffsets[d.index]; }

// Direction from a to b when adjacent; throws otherwise.
Direction direction_between(Cell a, Cell b);
bool adjacent(Cell a, Cell b);

// The (at most two) cells adjacent to both a and b. Error if a == b.
std::vector<Cell> common_neighbors(Cell a, Cell b);

// For adjacent a, b: the 8 cells of n(a) u n(b) \ {a,b}, in counterclockwise
// cyclic order around the pair. Error if a, b are not adjacent.
std::array<Cell, 8> extended_neighborhood(Cell a, Cell b);

// Each lattice face is keyed by a corner cell: the "up" face at c is
// {c, c+E, c+NE}; the "down" face is {c, c+E, c+SE}. Every face has exactly
// one such key, which triangle counting relies on.
struct Face {
    Cell key;
    bool up = true;
    friend bool operator==(const Face&, const Face&) = default;
};

inline std::array<Cell, 3> face_cells(const Face& f) {
    if (f.up) return {f.key, f.key + Cell{1, 0}, f.key + Cell{0, 1}};
    return {f.key, f.key + Cell{1, 0}, f.key + Cell{1, -1}};
}

// The six faces incident to c, counterclockwise: face d spans {c, c+e_d, c+e_{d+1}}.
inline std::array<Cell, 2> face_partners(Cell c, int d) {
    return {neighbor(c, {d}), neighbor(c, {(d + 1) % 6})};
}

// Counterclockwise rotation by 60 degrees about the origin.
inline Cell rotate60(Cell c) { return {-c.r, c.q + c.r}; }

// Cartesian embedding (doubled x to stay integral): x2 = 2q + r, y ~ r.
inline long long embed_x2(Cell c) { return 2LL * c.q + c.r; }
inline long long embed_y(Cell c) { return c.r; }

struct CellHash {
    size_t operator()(const Cell& c) const {
        uint64_t x = (uint64_t(uint32_t(c.q)) << 32) | uint64_t(uint32_t(c.r));
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return size_t(x);
    }
};

}  // namespace sops
