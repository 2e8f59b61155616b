#include "doctest.h"
#include "sops/lattice.hpp"

#include <algorithm>
#include <set>

using namespace sops;

TEST_CASE("six distinct neighbors, opposite is an involution") {
    Cell o{0, 0};
    std::set<Cell> nbs;
    for (int d = 0; d < 6; ++d) {
        Cell nb = neighbor(o, {d});
        nbs.insert(nb);
        CHECK(neighbor(nb, opposite({d})) == o);
        CHECK(opposite(opposite({d})).index == d);
        CHECK(opposite({d}).index != d);  // fixed-point free pairing
    }
    CHECK(nbs.size() == 6);
    std::set<Cell> expected{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    CHECK(nbs == expected);
    CHECK(neighbor(o, {0}) == Cell{1, 0});
}

TEST_CASE("common neighbors of adjacent cells") {
    auto cn = common_neighbors({0, 0}, {1, 0});
    std::set<Cell> got(cn.begin(), cn.end());
    CHECK(got == std::set<Cell>{{0, 1}, {1, -1}});
}

TEST_CASE("common neighbors over all nearby pairs") {
    // Brute force over all cell pairs within distance 3 of the origin.
    std::vector<Cell> window;
    for (int q = -4; q <= 4; ++q)
        for (int r = -4; r <= 4; ++r) window.push_back({q, r});
    for (const Cell& a : window) {
        for (const Cell& b : window) {
            if (a == b) continue;
            std::vector<Cell> brute;
            for (int d = 0; d < 6; ++d) {
                Cell c = neighbor(a, {d});
                if (adjacent(c, b)) brute.push_back(c);
            }
            auto got = common_neighbors(a, b);
            std::sort(got.begin(), got.end());
            std::sort(brute.begin(), brute.end());
            CHECK(got == brute);
            CHECK(got.size() <= 2);
            if (adjacent(a, b)) CHECK(got.size() == 2);
        }
    }
    CHECK(common_neighbors({0, 0}, {5, 5}).empty());
    CHECK_THROWS_AS(common_neighbors({1, 2}, {1, 2}), std::invalid_argument);
}

TEST_CASE("extended neighborhood is an 8-ring") {
    CHECK_THROWS_AS(extended_neighborhood({0, 0}, {2, 0}), std::invalid_argument);
    for (int d = 0; d < 6; ++d) {
        Cell a{0, 0};
        Cell b = neighbor(a, {d});
        auto ring = extended_neighborhood(a, b);
        std::set<Cell> distinct(ring.begin(), ring.end());
        CHECK(distinct.size() == 8);
        CHECK(!distinct.contains(a));
        CHECK(!distinct.contains(b));
        // Consecutive ring cells adjacent, and the induced graph is exactly
        // the 8-cycle: each cell adjacent to precisely two others in the ring.
        for (int i = 0; i < 8; ++i) {
            CHECK(adjacent(ring[i], ring[(i + 1) % 8]));
            int deg = 0;
            for (int j = 0; j < 8; ++j)
                if (j != i && adjacent(ring[i], ring[j])) ++deg;
            CHECK(deg == 2);
        }
        for (const Cell& c : common_neighbors(a, b)) CHECK(distinct.contains(c));
    }
}

TEST_CASE("rotation by 60 degrees permutes directions") {
    for (int d = 0; d < 6; ++d)
        CHECK(rotate60(kDirOffsets[d]) == kDirOffsets[(d + 1) % 6]);
}
