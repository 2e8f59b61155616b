#include "sops/lattice.hpp"

namespace sops {

Direction direction_between(Cell a, Cell b) {
    Cell d = b - a;
    for (int i = 0; i < 6; ++i)
        if (kDirOffsets[i] == d) return {i};
    throw std::invalid_argument("direction_between: cells are not adjacent");
}

bool adjacent(Cell a, Cell b) {
    Cell d = b - a;
    for (int i = 0; i < 6; ++i)
        if (kDirOffsets[i] == d) return true;
    return false;
}

std::vector<Cell> common_neighbors(Cell a, Cell b) {
    if (a == b) throw std::invalid_argument("common_neighbors: a == b");
    if (adjacent(a, b)) {
        Direction d = direction_between(a, b);
        return {neighbor(a, ccw(d)), neighbor(a, cw(d))};
    }
    std::vector<Cell> out;
    for (int i = 0; i < 6; ++i) {
        Cell c = neighbor(a, {i});
        if (adjacent(c, b)) out.push_back(c);
    }
    return out;
}

std::array<Cell, 8> extended_neighborhood(Cell a, Cell b) {
    if (!adjacent(a, b)) throw std::invalid_argument("extended_neighborhood: cells not adjacent");
    int d = direction_between(a, b).index;
    // Ring around the pair, counterclockwise, starting at the common
    // neighbor on the counterclockwise side of a->b.
    return {
        neighbor(a, {(d + 1) % 6}),  // common neighbor (ccw side)
        neighbor(a, {(d + 2) % 6}),
        neighbor(a, {(d + 3) % 6}),
        neighbor(a, {(d + 4) % 6}),
        neighbor(a, {(d + 5) % 6}),  // common neighbor (cw side)
        neighbor(b, {(d + 5) % 6}),
        neighbor(b, {d}),
        neighbor(b, {(d + 1) % 6}),
    };
}

}  // namespace sops
