#include "doctest.h"
#include "sops/async_engine.hpp"
#include "sops/rng.hpp"

#include <random>
#include <sstream>

using namespace sops;

TEST_CASE("exponential clock samples have mean one and are positive") {
    std::mt19937_64 rng(123);
    std::exponential_distribution<double> dist(1.0);
    double sum = 0;
    for (int i = 0; i < 100000; ++i) {
        double x = dist(rng);
        CHECK(x > 0);
        sum += x;
    }
    double mean = sum / 100000.0;
    CHECK(mean > 0.99);
    CHECK(mean < 1.01);
}

TEST_CASE("identical seeds give identical traces") {
    AsyncParams params{3.0, 42, false};
    AsyncEngine a(line_configuration(12), params);
    AsyncEngine b(line_configuration(12), params);
    a.run_events(5000);
    b.run_events(5000);
    REQUIRE(a.trace().size() == b.trace().size());
    for (size_t i = 0; i < a.trace().size(); ++i) {
        CHECK(a.trace()[i].time == b.trace()[i].time);
        CHECK(a.trace()[i].particle == b.trace()[i].particle);
        CHECK(a.trace()[i].action == b.trace()[i].action);
    }
}

TEST_CASE("contracted particle picking an occupied direction stays put") {
    AsyncParams params{2.0, 7, true};
    AsyncEngine eng(line_configuration(6), params);
    eng.run_events(4000);
    for (const ActionRecord& rec : eng.trace()) {
        if (rec.action == ActionKind::Noop) CHECK(rec.tail == rec.head);
    }
}

TEST_CASE("unflagged expansions always retreat") {
    AsyncParams params{4.0, 99, true};
    AsyncEngine eng(line_configuration(10), params);
    eng.run_events(20000);
    // Pair each expansion with its particle's next contraction.
    std::unordered_map<int, bool> flagOf;
    for (const ActionRecord& rec : eng.trace()) {
        if (rec.action == ActionKind::Expand) flagOf[rec.particle] = rec.flag;
        if (rec.action == ActionKind::ContractHead) CHECK(flagOf.at(rec.particle));
        if (rec.action == ActionKind::ContractTail) flagOf.erase(rec.particle);
    }
}

TEST_CASE("draining contracts everything and the reduction replays") {
    for (uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
        AsyncParams params{4.0, seed, true};
        Configuration start = line_configuration(10);
        AsyncEngine eng(start, params);
        eng.run_events(10000);
        eng.drain();
        CHECK(eng.all_contracted());
        Configuration final = eng.contracted_config();
        CHECK(is_connected(final));
        CHECK_FALSE(has_hole(final));

        Configuration replay = start;
        for (const Move& m : reduce_to_chain_trace(eng.trace())) {
            CHECK(is_valid_move(replay, m));
            replay.move_particle(m.from, m.to);
        }
        CHECK(replay.cells_sorted() == final.cells_sorted());
    }
}

TEST_CASE("aborted expansions leave no moves") {
    // A ring of six around an empty center: every expansion into the center
    // conflicts; use time horizon 0 so nothing runs, giving an empty trace.
    AsyncParams params{1.0, 11, false};
    AsyncEngine eng(line_configuration(4), params);
    CHECK(reduce_to_chain_trace(eng.trace()).empty());
}

TEST_CASE("time horizon variant runs") {
    AsyncParams params{2.0, 5, false};
    AsyncEngine eng(line_configuration(8), params);
    eng.run_until(25.0);
    CHECK(eng.now() <= 25.0);
    CHECK(eng.events_processed() > 0);
    eng.drain();
    CHECK(eng.all_contracted());
}

TEST_CASE("trace CSV schema") {
    AsyncParams params{2.0, 8, false};
    AsyncEngine eng(line_configuration(5), params);
    eng.run_events(50);
    std::ostringstream out;
    write_trace_csv(out, eng.trace());
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "time,particle,action,q,dir,flag");
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 50);
}

TEST_CASE("seed derivation separates streams") {
    CHECK(derive_seed(1, 0, 0) != derive_seed(1, 0, 1));
    CHECK(derive_seed(1, 0, 0) != derive_seed(1, 1, 0));
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
}
