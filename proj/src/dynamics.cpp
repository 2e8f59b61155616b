#include "sops/dynamics.hpp"

#include "sops/local_rules.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace sops {

namespace {

// Occupancy with the mover lifted off cell `mover`.
inline auto lifted(const Configuration& c, Cell mover) {
    return [&c, mover](Cell x) { return x != mover && c.occupied(x); };
}

}  // namespace

bool satisfies_property1(const Configuration& c, Cell l, Cell lp) {
    return property1_probe(lifted(c, l), l, lp);
}

bool satisfies_property2(const Configuration& c, Cell l, Cell lp) {
    return property2_probe(lifted(c, l), l, lp);
}

int triangle_delta(const Configuration& c, Cell from, Cell to) {
    auto occ = lifted(c, from);
    return triangles_probe(occ, to) - triangles_probe(occ, from);
}

bool is_valid_move(const Configuration& c, const Move& m) {
    if (!c.occupied(m.from) || c.occupied(m.to) || !adjacent(m.from, m.to)) return false;
    // Condition (1): the origin cell must not have five neighboring particles.
    if (c.occupied_degree(m.from, m.from) == 5) return false;
    return satisfies_property1(c, m.from, m.to) || satisfies_property2(c, m.from, m.to);
}

Chain::Chain(const Configuration& initial, const ChainParams& params)
    : cfg_(initial), params_(params), rng_(params.seed) {
    if (params.lambda <= 0) throw std::invalid_argument("Chain: lambda must be positive");
    if (cfg_.size() == 0) throw std::invalid_argument("Chain: empty configuration");
    if (!is_connected(cfg_)) throw std::invalid_argument("Chain: initial configuration disconnected");
    if (has_hole(cfg_)) throw std::invalid_argument("Chain: initial configuration has a hole");
    particles_ = cfg_.cells_sorted();
    for (int i = 0; i < int(particles_.size()); ++i) index_[particles_[i]] = i;
    for (int k = 0; k <= 12; ++k) lambda_pow_[k] = std::pow(params.lambda, k - 6);
}

bool Chain::step() {
    ++steps_;
    int n = int(particles_.size());
    int pi = int(rng_() % uint64_t(n));
    int dir = int(rng_() % 6);
    double q = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    Cell from = particles_[pi];
    Cell to = neighbor(from, {dir});
    if (cfg_.occupied(to)) return false;
    Move m{from, to};
    if (!is_valid_move(cfg_, m)) return false;
    int dt = triangle_delta(cfg_, from, to);
    if (q >= lambda_pow_[dt + 6]) return false;
    cfg_.move_particle(from, to);
    index_.erase(from);
    index_[to] = pi;
    particles_[pi] = to;
    ++accepted_;
    return true;
}

void Chain::run(long long steps) {
    for (long long i = 0; i < steps; ++i) step();
}

void Chain::audit() const {
    Configuration fresh(cfg_.cells_sorted());
    if (fresh.edge_count() != cfg_.edge_count())
        throw std::logic_error("audit: cached edge count diverged");
    if (fresh.triangle_count() != cfg_.triangle_count())
        throw std::logic_error("audit: cached triangle count diverged");
    if (!is_connected(cfg_)) throw std::logic_error("audit: configuration disconnected");
    if (has_hole(cfg_)) throw std::logic_error("audit: configuration has a hole");
    long long n = cfg_.size();
    long long p = perimeter(cfg_).length;
    if (cfg_.triangle_count() != 2 * n - p - 2)
        throw std::logic_error("audit: t != 2n - p - 2");
    if (cfg_.edge_count() != 3 * n - p - 3)
        throw std::logic_error("audit: e != 3n - p - 3");
}

double transition_probability(const Configuration& sigma, const Configuration& tau,
                              double lambda) {
    if (lambda <= 0) throw std::invalid_argument("transition_probability: lambda must be positive");
    if (sigma.size() != tau.size())
        throw std::invalid_argument("transition_probability: differing particle counts");
    auto target = canonical_cells(tau);
    auto source = canonical_cells(sigma);
    Configuration work(source);
    int n = work.size();
    double stay = 0.0, go = 0.0;
    const double unit = 1.0 / (6.0 * n);
    for (const Cell& from : source) {
        for (int d = 0; d < 6; ++d) {
            Cell to = neighbor(from, {d});
            if (work.occupied(to)) {
                stay += unit;
                continue;
            }
            Move m{from, to};
            if (!is_valid_move(work, m)) {
                stay += unit;
                continue;
            }
            int dt = triangle_delta(work, from, to);
            double acc = std::min(1.0, std::pow(lambda, dt));
            work.move_particle(from, to);
            bool hits = canonical_cells(work) == target;
            work.move_particle(to, from);
            if (hits) go += unit * acc;
            stay += unit * (1.0 - acc);
        }
    }
    return source == target ? stay : go;
}

}  // namespace sops
