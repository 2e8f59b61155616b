#include "sops/async_engine.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "sops/local_rules.hpp"

namespace sops {

AsyncEngine::AsyncEngine(const Configuration& initial, const AsyncParams& params)
    : params_(params), rng_(params.seed) {
    if (params.lambda <= 0) throw std::invalid_argument("AsyncEngine: lambda must be positive");
    if (!is_connected(initial)) throw std::invalid_argument("AsyncEngine: disconnected start");
    if (has_hole(initial)) throw std::invalid_argument("AsyncEngine: start has a hole");
    for (const Cell& c : initial.cells_sorted()) {
        Particle p;
        p.tail = c;
        particles_.push_back(p);
        occupant_[c] = int(particles_.size()) - 1;
    }
    for (int i = 0; i < int(particles_.size()); ++i) schedule(i);
    for (int k = 0; k <= 12; ++k) lambda_pow_[k] = std::pow(params.lambda, k - 6);
}

void AsyncEngine::schedule(int id) {
    particles_[id].next_activation = now_ + exp_dist_(rng_);
    queue_.push({particles_[id].next_activation, id});
}

int AsyncEngine::occupant(Cell x) const {
    auto it = occupant_.find(x);
    return it == occupant_.end() ? -1 : it->second;
}

bool AsyncEngine::effective_occupied(Cell x, int self) const {
    int o = occupant(x);
    if (o < 0 || o == self) return false;
    const Particle& p = particles_[o];
    return !p.expanded || x == p.tail;  // heads of expanded neighbors are ignored
}

void AsyncEngine::activate(int id) {
    Particle& p = particles_[id];
    ActionRecord rec;
    rec.time = now_;
    rec.particle = id;
    if (!p.expanded) {
        p.dir = int(rng_() % 6);
        p.q = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
        rec.q = p.q;
        rec.dir = p.dir;
        Cell l = p.tail;
        Cell lp = neighbor(l, {p.dir});
        bool expandedNeighbor = false;
        for (int d = 0; d < 6 && !expandedNeighbor; ++d) {
            int o = occupant(neighbor(l, {d}));
            if (o >= 0 && o != id && particles_[o].expanded) expandedNeighbor = true;
        }
        if (occupant(lp) >= 0 || expandedNeighbor) {
            rec.action = ActionKind::Noop;
            rec.tail = l;
            rec.head = l;
        } else {
            p.expanded = true;
            p.head = lp;
            occupant_[lp] = id;
            bool nearbyExpanded = false;
            for (const Cell& base : {l, lp}) {
                for (int d = 0; d < 6 && !nearbyExpanded; ++d) {
                    Cell nb = neighbor(base, {d});
                    if (nb == l || nb == lp) continue;
                    int o = occupant(nb);
                    if (o >= 0 && o != id && particles_[o].expanded) nearbyExpanded = true;
                }
            }
            p.flag = !nearbyExpanded;
            rec.action = ActionKind::Expand;
            rec.flag = p.flag;
            rec.tail = l;
            rec.head = lp;
        }
    } else {
        Cell l = p.tail;
        Cell lp = p.head;
        rec.q = p.q;
        rec.dir = p.dir;
        rec.flag = p.flag;
        rec.tail = l;
        rec.head = lp;
        auto occ = [this, id](Cell x) { return effective_occupied(x, id); };
        int dt = triangles_probe(occ, lp) - triangles_probe(occ, l);
        bool ok = p.flag && move_permitted_probe(occ, l, lp) && p.q < lambda_pow_[dt + 6];
        if (ok) {
            occupant_.erase(l);
            p.tail = lp;
            rec.action = ActionKind::ContractHead;
        } else {
            occupant_.erase(lp);
            rec.action = ActionKind::ContractTail;
        }
        p.expanded = false;
        p.flag = false;
    }
    trace_.push_back(rec);
    if (params_.audit) check_flag_disjointness();
    schedule(id);
}

void AsyncEngine::run_events(long long max_events) {
    for (long long i = 0; i < max_events; ++i) {
        auto [t, id] = queue_.top();
        queue_.pop();
        now_ = t;
        ++events_;
        activate(id);
    }
}

void AsyncEngine::run_until(double time_horizon) {
    while (queue_.top().first <= time_horizon) {
        auto [t, id] = queue_.top();
        queue_.pop();
        now_ = t;
        ++events_;
        activate(id);
    }
}

void AsyncEngine::drain() {
    long long guard = 16LL * particles_.size() * particles_.size() + 1024;
    while (!all_contracted()) {
        if (--guard < 0) throw std::logic_error("AsyncEngine::drain failed to settle");
        auto [t, id] = queue_.top();
        queue_.pop();
        now_ = t;
        if (particles_[id].expanded) {
            ++events_;
            activate(id);
        } else {
            schedule(id);  // no new expansions while draining
        }
    }
}

bool AsyncEngine::all_contracted() const {
    for (const Particle& p : particles_)
        if (p.expanded) return false;
    return true;
}

Configuration AsyncEngine::contracted_config() const {
    std::vector<Cell> cells;
    cells.reserve(particles_.size());
    for (const Particle& p : particles_) cells.push_back(p.tail);
    return Configuration(cells);
}

void AsyncEngine::check_flag_disjointness() const {
    std::vector<int> flagged;
    for (int i = 0; i < int(particles_.size()); ++i)
        if (particles_[i].expanded && particles_[i].flag) flagged.push_back(i);
    for (size_t a = 0; a < flagged.size(); ++a) {
        const Particle& pa = particles_[flagged[a]];
        for (size_t b = a + 1; b < flagged.size(); ++b) {
            const Particle& pb = particles_[flagged[b]];
            for (const Cell& ca : {pa.tail, pa.head}) {
                for (const Cell& cb : {pb.tail, pb.head}) {
                    if (ca == cb || adjacent(ca, cb))
                        throw std::logic_error(
                            "flagged expanded particles share or touch footprints");
                }
            }
        }
    }
}

std::vector<Move> reduce_to_chain_trace(const Trace& trace) {
    std::vector<Move> moves;
    for (const ActionRecord& rec : trace)
        if (rec.action == ActionKind::ContractHead) moves.push_back(Move{rec.tail, rec.head});
    return moves;
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
    out << "time,particle,action,q,dir,flag\n";
    for (const ActionRecord& rec : trace) {
        const char* act = "noop";
        switch (rec.action) {
            case ActionKind::Expand: act = "expand"; break;
            case ActionKind::ContractHead: act = "contract_head"; break;
            case ActionKind::ContractTail: act = "contract_tail"; break;
            case ActionKind::Noop: act = "noop"; break;
        }
        out << rec.time << ',' << rec.particle << ',' << act << ',' << rec.q << ',' << rec.dir
            << ',' << (rec.flag ? 1 : 0) << '\n';
    }
}

}  // namespace sops
