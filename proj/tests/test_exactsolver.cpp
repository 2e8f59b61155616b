#include "doctest.h"
#include "sops/bounds.hpp"
#include "sops/state_space.hpp"

#include <cmath>
#include <set>

using namespace sops;

TEST_CASE("enumeration ground truth") {
    CHECK(enumerate_states(1).states.size() == 1);
    CHECK(enumerate_states(2).states.size() == 3);
    CHECK(enumerate_states(3).states.size() == 11);
    CHECK_THROWS_AS(enumerate_states(11), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_states(0), std::invalid_argument);
}

TEST_CASE("growth and window enumerations agree") {
    for (int n = 1; n <= 7; ++n) {
        long long growth = (long long)enumerate_states(n).states.size();
        CHECK(growth == enumerate_count_window(n));
    }
}

TEST_CASE("enumeration is closed under rotation") {
    for (int n : {3, 4, 5}) {
        StateSpace s = enumerate_states(n);
        for (const auto& cells : s.states) {
            std::vector<Cell> rot;
            for (const Cell& c : cells) rot.push_back(rotate60(c));
            CHECK(s.find(canonical_cells(Configuration(rot))) >= 0);
        }
    }
}

TEST_CASE("m_k histogram totals") {
    StateSpace s = enumerate_states(3);
    long long total = 0;
    for (const auto& [k, c] : s.m_k) total += c;
    CHECK(total == 11);
    CHECK(s.m_k.at(3) == 2);
    CHECK(s.m_k.at(4) == 9);
}

TEST_CASE("stationary distribution at n=3") {
    StateSpace s = enumerate_states(3);
    Eigen::VectorXd pi = stationary(s, 4.0);
    double massP3 = 0;
    for (int i = 0; i < 11; ++i)
        if (s.perimeter_of[i] == 3) massP3 += pi[i];
    CHECK(massP3 == doctest::Approx(8.0 / 17.0).epsilon(1e-12));

    Eigen::VectorXd uniform = stationary(s, 1.0);
    for (int i = 0; i < 11; ++i) CHECK(uniform[i] == doctest::Approx(1.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("stationarity and detailed balance verified exactly") {
    for (int n : {2, 3, 4}) {
        StateSpace s = enumerate_states(n);
        for (double lambda : {0.5, 1.0, 2.0, 4.0}) {
            auto rep = verify_stationary(s, lambda);
            CHECK(rep.max_row_sum_error < 1e-12);
            CHECK(rep.max_stationarity_residual < 1e-10);
            CHECK(rep.max_detailed_balance_residual < 1e-12);
            CHECK(weight_form_deviation(s, lambda) < 1e-12);
        }
    }
}

TEST_CASE("irreducibility on small spaces") {
    for (int n : {2, 3, 4, 5}) {
        auto rep = verify_irreducible(enumerate_states(n), 2.0);
        CHECK(rep.strongly_connected);
        CHECK(rep.support_symmetric);
    }
}

TEST_CASE("matrix support does not depend on lambda") {
    StateSpace s = enumerate_states(4);
    Eigen::MatrixXd a = build_matrix(s, 0.5);
    Eigen::MatrixXd b = build_matrix(s, 8.0);
    for (int i = 0; i < a.rows(); ++i) {
        CHECK(a(i, i) >= 1.0 / 6.0);
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) CHECK((a(i, j) > 0) == (b(i, j) > 0));
    }
}

TEST_CASE("tail probabilities") {
    StateSpace s3 = enumerate_states(3);
    CHECK(tail_probability(s3, 4.0, TailMode::Compression, 4.0 / 3.0) ==
          doctest::Approx(9.0 / 17.0).epsilon(1e-12));
    // Factor pushing the threshold past p_max empties the event.
    CHECK(tail_probability(s3, 4.0, TailMode::Compression, 10.0) == 0.0);

    StateSpace s5 = enumerate_states(5);
    for (double alpha : {1.2, 4.0 / 3.0, 1.5}) {
        double prev = 2.0;
        for (double lambda : {1.0, 2.0, 4.0, 8.0, 16.0}) {
            double tail = tail_probability(s5, lambda, TailMode::Compression, alpha);
            CHECK(tail <= prev + 1e-15);
            prev = tail;
        }
    }
    for (double beta : {0.5, 0.75, 0.9}) {
        double prev = -1.0;
        for (double lambda : {1.0, 2.0, 4.0, 8.0, 16.0}) {
            double tail = tail_probability(s5, lambda, TailMode::Expansion, beta);
            CHECK(tail >= prev - 1e-15);
            prev = tail;
        }
    }
}

TEST_CASE("partition function lower bounds") {
    BoundReport rep = bounds_report(3, 2.0);
    CHECK(rep.z_exact == doctest::Approx(0.8125).epsilon(1e-12));
    CHECK(rep.z_lb_sqrt2 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rep.sqrt2_holds);
    CHECK(rep.b167_holds);
    CHECK(rep.b217_holds);
    for (int n = 1; n <= 7; ++n)
        for (double lambda : {1.0, 1.5, 2.0}) {
            BoundReport r = bounds_report(n, lambda);
            CHECK(r.sqrt2_holds);
            CHECK(r.b167_holds);
            CHECK(r.b217_holds);
        }
}

TEST_CASE("reference constants") {
    CHECK(std::string(kConfigCount50).size() == 34);
    CHECK(expansion_bound_217() == doctest::Approx(2.17203).epsilon(1e-5));
    CHECK(expansion_bound_217() > 2.17);
    CHECK(hex_connective_constant() == doctest::Approx(1.8478).epsilon(1e-4));
    // Threshold for compression approaches 2 + sqrt 2 as alpha grows.
    CHECK(compression_threshold(100.0) ==
          doctest::Approx(std::pow(2 + std::sqrt(2.0), 100.0 / 99.0)).epsilon(1e-12));
}

TEST_CASE("staircase paths: count, maximum perimeter, membership") {
    for (int n : {2, 3, 5, 6}) {
        auto zigs = zigzag_configurations(n);
        CHECK((long long)zigs.size() == (1LL << (n - 1)));
        StateSpace s = enumerate_states(n);
        std::set<std::string> distinct;
        for (const auto& cells : zigs) {
            Configuration c(cells);
            CHECK(c.edge_count() == n - 1);
            CHECK(c.triangle_count() == 0);
            CHECK(perimeter(c).length == 2 * n - 2);
            auto canon = canonical_cells(c);
            CHECK(s.find(canon) >= 0);
            distinct.insert(state_key(canon));
        }
        CHECK((long long)distinct.size() == (1LL << (n - 1)));
    }
}

TEST_CASE("gluing construction: count and membership") {
    for (int n : {4, 7}) {
        auto built = attachment22_configurations(n);
        long long expected = 1;
        for (int j = 0; j < (n - 1) / 3; ++j) expected *= 22;
        CHECK((long long)built.size() == expected);
        StateSpace s = enumerate_states(n);
        std::set<std::string> distinct;
        for (const auto& cells : built) {
            Configuration c(cells);
            CHECK(is_connected(c));
            CHECK_FALSE(has_hole(c));
            auto canon = canonical_cells(c);
            CHECK(s.find(canon) >= 0);
            distinct.insert(state_key(canon));
        }
        CHECK((long long)distinct.size() == expected);
    }
}

TEST_CASE("dual boundary of small shapes") {
    // Single particle: its hexagon, 6 = 2*0 + 6 edges.
    DualBoundary single = dual_boundary(Configuration(std::vector<Cell>{{0, 0}}));
    CHECK(single.single_cycle);
    CHECK(single.length == 6);
    // Domino: two fused hexagons, 10 = 2*2 + 6 boundary edges.
    DualBoundary dom = dual_boundary(Configuration(std::vector<Cell>{{0, 0}, {1, 0}}));
    CHECK(dom.single_cycle);
    CHECK(dom.length == 10);
}

TEST_CASE("hexagonal polygon counts match known small values") {
    auto saps = count_hex_polygons(12);
    CHECK(saps[6] == 1);    // one hexagon
    CHECK(saps[10] == 3);   // fused pairs, three orientations
    CHECK(saps[12] == 2);   // triangles of three hexagons, two orientations
    CHECK_FALSE(saps.contains(8));
}

TEST_CASE("histogram bounded by hexagonal polygons") {
    for (int n = 2; n <= 6; ++n) {
        SawCheckReport rep = saw_bound_check(n);
        CHECK(rep.all_single_cycles);
        CHECK(rep.all_lengths_match);
        CHECK(rep.histogram_bounded);
    }
}
