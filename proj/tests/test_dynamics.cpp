#include "doctest.h"
#include "sops/dynamics.hpp"
#include "sops/state_space.hpp"

#include <cmath>
#include <random>

using namespace sops;

namespace {

Configuration blob(std::initializer_list<Cell> cells) {
    return Configuration(std::vector<Cell>(cells));
}

std::vector<Move> candidate_moves(const Configuration& c) {
    std::vector<Move> out;
    for (const Cell& from : c.cells_sorted())
        for (int d = 0; d < 6; ++d) {
            Cell to = neighbor(from, {d});
            if (!c.occupied(to)) out.push_back(Move{from, to});
        }
    return out;
}

}  // namespace

TEST_CASE("property basics on a domino") {
    Configuration domino = blob({{0, 0}, {1, 0}});
    // Mover at (1,0) sliding around its partner keeps one shared neighbor.
    CHECK(satisfies_property1(domino, {1, 0}, {1, -1}));
    CHECK(satisfies_property1(domino, {1, 0}, {0, 1}));
    // Stepping straight away leaves no shared occupied neighbor.
    CHECK_FALSE(satisfies_property1(domino, {1, 0}, {2, 0}));
    CHECK_FALSE(satisfies_property2(domino, {1, 0}, {2, 0}));  // target side empty
}

TEST_CASE("properties are mutually exclusive and symmetric") {
    std::mt19937_64 rng(4242);
    int tested = 0;
    while (tested < 4000) {
        int n = 3 + int(rng() % 10);
        Configuration c(std::vector<Cell>{{0, 0}});
        while (c.size() < n) {
            auto cells = c.cells_sorted();
            Cell cand = neighbor(cells[rng() % cells.size()], {int(rng() % 6)});
            if (!c.occupied(cand)) c.insert(cand);
        }
        auto cells = c.cells_sorted();
        Cell from = cells[rng() % cells.size()];
        Cell to = neighbor(from, {int(rng() % 6)});
        if (c.occupied(to)) continue;
        bool p1 = satisfies_property1(c, from, to);
        bool p2 = satisfies_property2(c, from, to);
        CHECK_FALSE((p1 && p2));
        // Symmetry: with the mover sitting on the other cell of the pair,
        // the evaluations swap roles but agree (the lifted world is the same).
        Configuration moved = c;
        moved.move_particle(from, to);
        CHECK(p1 == satisfies_property1(moved, to, from));
        CHECK(p2 == satisfies_property2(moved, to, from));
        ++tested;
    }
}

TEST_CASE("five-neighbor origins never move") {
    // Five cells around (0,0), target at the sixth direction.
    std::vector<Cell> cells{{0, 0}};
    for (int d = 0; d < 5; ++d) cells.push_back(kDirOffsets[d]);
    Configuration c(cells);
    Move m{{0, 0}, kDirOffsets[5]};
    CHECK_FALSE(is_valid_move(c, m));
}

TEST_CASE("triangle-closing move on a bent tree") {
    Configuration elbow = blob({{0, 0}, {1, 0}, {-1, 1}});
    Move close{{-1, 1}, {0, 1}};
    CHECK(is_valid_move(elbow, close));
    CHECK(triangle_delta(elbow, {-1, 1}, {0, 1}) == 1);
}

TEST_CASE("valid moves from the eleven three-particle states") {
    StateSpace s = enumerate_states(3);
    REQUIRE(s.states.size() == 11);
    for (int i = 0; i < 11; ++i) {
        Configuration c(s.states[i]);
        int valid = 0;
        for (const Move& m : candidate_moves(c))
            if (is_valid_move(c, m)) ++valid;
        if (s.perimeter_of[i] == 3) {
            // Triangles: each particle slides two ways, all six moves open it.
            CHECK(valid == 6);
            for (const Move& m : candidate_moves(c))
                if (is_valid_move(c, m)) CHECK(triangle_delta(c, m.from, m.to) == -1);
        } else {
            // Trees: the four end-pivots, plus a center hop on bent trees.
            Cell center{0, 0};
            int armDirs[2], k = 0;
            for (const Cell& x : c.cells_sorted())
                if (c.occupied_degree(x) == 2) center = x;
            for (int d = 0; d < 6; ++d)
                if (c.occupied(neighbor(center, {d}))) armDirs[k++] = d;
            bool straight = (armDirs[1] - armDirs[0]) == 3;
            CHECK(valid == (straight ? 4 : 5));
        }
    }
}

TEST_CASE("chain preserves connectivity, holes, and cached metrics") {
    ChainParams params{4.0, 2026};
    Chain chain(line_configuration(30), params);
    for (int k = 0; k < 40; ++k) {
        chain.run(2500);
        chain.audit();
    }
    CHECK(chain.steps_taken() == 100000);
}

TEST_CASE("lambda one accepts every valid proposal") {
    ChainParams params{1.0, 7};
    Chain chain(line_configuration(10), params);
    // Acceptance threshold lambda^dt = 1 for every dt, so rejected steps can
    // only come from occupied targets or invalid moves; exercised indirectly
    // by auditing a long run.
    chain.run(20000);
    chain.audit();
    CHECK(chain.accepted_moves() > 0);
}

TEST_CASE("deterministic given a seed") {
    ChainParams params{2.0, 555};
    Chain a(line_configuration(12), params);
    Chain b(line_configuration(12), params);
    a.run(5000);
    b.run(5000);
    CHECK(a.config().cells_sorted() == b.config().cells_sorted());
    CHECK(a.accepted_moves() == b.accepted_moves());
}

TEST_CASE("transition probabilities: quoted entry and row sums") {
    StateSpace s = enumerate_states(3);
    // Triangle-opening move at lambda = 4 has probability 1/(6*3) * 1/4.
    int triIdx = -1;
    for (int i = 0; i < 11; ++i)
        if (s.perimeter_of[i] == 3) { triIdx = i; break; }
    REQUIRE(triIdx >= 0);
    Configuration tri(s.states[triIdx]);
    double offDiagonal = 0;
    for (int j = 0; j < 11; ++j) {
        if (j == triIdx) continue;
        Configuration other(s.states[j]);
        double p = transition_probability(tri, other, 4.0);
        if (p > 0) CHECK(p == doctest::Approx(1.0 / 72.0).epsilon(1e-12));
        offDiagonal += p;
    }
    double diag = transition_probability(tri, tri, 4.0);
    CHECK(diag + offDiagonal == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(diag >= 1.0 / 6.0);
}

TEST_CASE("support reversibility on small state spaces") {
    for (int n : {2, 3, 4}) {
        StateSpace s = enumerate_states(n);
        Eigen::MatrixXd P = build_matrix(s, 3.0);
        for (int i = 0; i < P.rows(); ++i)
            for (int j = 0; j < P.cols(); ++j)
                CHECK((P(i, j) > 0) == (P(j, i) > 0));
    }
}

TEST_CASE("configurations with only sliding-free moves exist") {
    // Search the enumerated spaces for a state where no candidate move
    // satisfies Property 1 yet valid moves exist; the movement rules need
    // Property 2 to keep the state space connected.
    bool found = false;
    for (int n = 3; n <= 8 && !found; ++n) {
        StateSpace s = enumerate_states(n);
        for (const auto& cells : s.states) {
            Configuration c(cells);
            bool anyP1 = false, anyValid = false;
            for (const Move& m : candidate_moves(c)) {
                if (c.occupied_degree(m.from, m.from) == 5) continue;
                if (satisfies_property1(c, m.from, m.to)) {
                    anyP1 = true;
                    break;
                }
                if (satisfies_property2(c, m.from, m.to)) anyValid = true;
            }
            if (!anyP1 && anyValid) {
                found = true;
                break;
            }
        }
    }
    CHECK(found);
}
