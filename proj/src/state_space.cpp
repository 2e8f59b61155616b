#include "sops/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace sops {

std::string state_key(const std::vector<Cell>& canonical) {
    std::string key;
    key.reserve(canonical.size() * 8);
    for (const Cell& c : canonical) {
        for (int v : {c.q, c.r}) {
            uint32_t u = uint32_t(v);
            key.push_back(char(u & 0xff));
            key.push_back(char((u >> 8) & 0xff));
            key.push_back(char((u >> 16) & 0xff));
            key.push_back(char((u >> 24) & 0xff));
        }
    }
    return key;
}

int StateSpace::find(const std::vector<Cell>& canonical) const {
    auto it = index.find(state_key(canonical));
    return it == index.end() ? -1 : it->second;
}

StateSpace enumerate_states(int n, int limit) {
    if (n < 1) throw std::invalid_argument("enumerate_states: n must be >= 1");
    if (n > limit)
        throw std::invalid_argument("enumerate_states: n exceeds the enumeration limit of " +
                                    std::to_string(limit));
    std::vector<std::vector<Cell>> current{{Cell{0, 0}}};
    for (int size = 2; size <= n; ++size) {
        std::unordered_map<std::string, std::vector<Cell>> next;
        for (const auto& cells : current) {
            Configuration base(cells);
            for (const Cell& c : cells) {
                for (int d = 0; d < 6; ++d) {
                    Cell cand = neighbor(c, {d});
                    if (base.occupied(cand)) continue;
                    base.insert(cand);
                    if (!has_hole(base)) {
                        auto canon = canonical_cells(base);
                        next.try_emplace(state_key(canon), std::move(canon));
                    }
                    base.erase(cand);
                }
            }
        }
        current.clear();
        current.reserve(next.size());
        for (auto& [k, v] : next) current.push_back(std::move(v));
    }
    std::sort(current.begin(), current.end());

    StateSpace s;
    s.n = n;
    s.states = std::move(current);
    for (int i = 0; i < int(s.states.size()); ++i) {
        s.index[state_key(s.states[i])] = i;
        Configuration cfg(s.states[i]);
        int p = perimeter(cfg).length;
        s.perimeter_of.push_back(p);
        ++s.m_k[p];
    }
    return s;
}

namespace {

// Anchor order used by canonicalize: lexicographic (r, q).
inline bool before_origin(Cell c) { return c.r < 0 || (c.r == 0 && c.q < 0); }

// Untried-set recursion over connected subsets containing the origin, with
// all cells at or after the origin in anchor order; each translation class
// then has exactly one counted representative. Cells popped at one level are
// banned for the rest of that subtree and released on return.
void window_recurse(int n, std::vector<Cell>& chosen, std::vector<Cell> untried,
                    std::unordered_set<Cell, CellHash>& banned,
                    std::unordered_set<Cell, CellHash>& inChosen, long long& count) {
    std::vector<Cell> bannedHere;
    while (!untried.empty()) {
        Cell c = untried.back();
        untried.pop_back();
        banned.insert(c);
        bannedHere.push_back(c);
        chosen.push_back(c);
        inChosen.insert(c);
        if (int(chosen.size()) == n) {
            Configuration cfg(chosen);
            if (!has_hole(cfg)) ++count;
        } else {
            std::vector<Cell> next = untried;
            for (int d = 0; d < 6; ++d) {
                Cell nb = neighbor(c, {d});
                if (before_origin(nb) || banned.contains(nb) || inChosen.contains(nb)) continue;
                bool dup = false;
                for (const Cell& f : next)
                    if (f == nb) { dup = true; break; }
                if (!dup) next.push_back(nb);
            }
            window_recurse(n, chosen, std::move(next), banned, inChosen, count);
        }
        chosen.pop_back();
        inChosen.erase(c);
    }
    for (const Cell& c : bannedHere) banned.erase(c);
}

}  // namespace

long long enumerate_count_window(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_count_window: n must be >= 1");
    long long count = 0;
    std::vector<Cell> chosen;
    std::unordered_set<Cell, CellHash> banned, inChosen;
    window_recurse(n, chosen, {Cell{0, 0}}, banned, inChosen, count);
    return count;
}

Eigen::MatrixXd build_matrix(const StateSpace& s, double lambda) {
    if (lambda <= 0) throw std::invalid_argument("build_matrix: lambda must be positive");
    int m = int(s.states.size());
    int n = s.n;
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(m, m);
    const double unit = 1.0 / (6.0 * n);
    for (int i = 0; i < m; ++i) {
        Configuration work(s.states[i]);
        for (const Cell& from : s.states[i]) {
            for (int d = 0; d < 6; ++d) {
                Cell to = neighbor(from, {d});
                if (work.occupied(to)) {
                    P(i, i) += unit;
                    continue;
                }
                if (!is_valid_move(work, Move{from, to})) {
                    P(i, i) += unit;
                    continue;
                }
                int dt = triangle_delta(work, from, to);
                double acc = std::min(1.0, std::pow(lambda, dt));
                work.move_particle(from, to);
                int j = s.find(canonical_cells(work));
                work.move_particle(to, from);
                if (j < 0) throw std::logic_error("build_matrix: move left the state space");
                P(i, j) += unit * acc;
                P(i, i) += unit * (1.0 - acc);
            }
        }
    }
    return P;
}

Eigen::VectorXd stationary(const StateSpace& s, double lambda) {
    int m = int(s.states.size());
    Eigen::VectorXd pi(m);
    for (int i = 0; i < m; ++i) pi[i] = std::pow(lambda, -s.perimeter_of[i]);
    pi /= pi.sum();
    return pi;
}

StationaryReport verify_stationary(const StateSpace& s, double lambda) {
    Eigen::MatrixXd P = build_matrix(s, lambda);
    Eigen::VectorXd pi = stationary(s, lambda);
    StationaryReport rep;
    rep.max_stationarity_residual = (pi.transpose() * P - pi.transpose()).cwiseAbs().maxCoeff();
    int m = int(s.states.size());
    for (int i = 0; i < m; ++i) {
        rep.max_row_sum_error = std::max(rep.max_row_sum_error, std::abs(P.row(i).sum() - 1.0));
        for (int j = i + 1; j < m; ++j) {
            double a = pi[i] * P(i, j);
            double b = pi[j] * P(j, i);
            double scale = std::max({a, b, 1e-300});
            rep.max_detailed_balance_residual =
                std::max(rep.max_detailed_balance_residual, std::abs(a - b) / scale);
        }
    }
    return rep;
}

double weight_form_deviation(const StateSpace& s, double lambda) {
    int m = int(s.states.size());
    Eigen::VectorXd byTri(m), byEdge(m), byPerim(m);
    for (int i = 0; i < m; ++i) {
        Configuration cfg(s.states[i]);
        byTri[i] = std::pow(lambda, double(cfg.triangle_count()));
        byEdge[i] = std::pow(lambda, double(cfg.edge_count()));
        byPerim[i] = std::pow(lambda, -s.perimeter_of[i]);
    }
    byTri /= byTri.sum();
    byEdge /= byEdge.sum();
    byPerim /= byPerim.sum();
    return std::max((byTri - byPerim).cwiseAbs().maxCoeff(),
                    (byEdge - byPerim).cwiseAbs().maxCoeff());
}

IrreducibilityReport verify_irreducible(const StateSpace& s, double lambda) {
    Eigen::MatrixXd P = build_matrix(s, lambda);
    int m = int(s.states.size());
    IrreducibilityReport rep;
    rep.support_symmetric = true;
    for (int i = 0; i < m && rep.support_symmetric; ++i)
        for (int j = 0; j < m; ++j)
            if ((P(i, j) > 0) != (P(j, i) > 0)) {
                rep.support_symmetric = false;
                break;
            }
    // With a symmetric support pattern, strong connectivity reduces to plain
    // reachability from state 0; run both directions anyway.
    auto reachable_all = [&](bool transpose) {
        std::vector<char> seen(m, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < m; ++w) {
                double x = transpose ? P(w, v) : P(v, w);
                if (x > 0 && !seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        return cnt == m;
    };
    rep.strongly_connected = reachable_all(false) && reachable_all(true);
    return rep;
}

double partition_function(const StateSpace& s, double lambda) {
    double z = 0;
    for (const auto& [k, count] : s.m_k) z += double(count) * std::pow(lambda, -k);
    return z;
}

double tail_probability(const StateSpace& s, double lambda, TailMode mode, double factor) {
    if (s.states.empty()) throw std::invalid_argument("tail_probability: empty state space");
    int pmin = s.m_k.begin()->first;
    int pmax = 2 * s.n - 2;
    double z = partition_function(s, lambda);
    double mass = 0;
    for (const auto& [k, count] : s.m_k) {
        bool in = mode == TailMode::Compression ? (double(k) >= factor * pmin)
                                                : (double(k) <= factor * pmax);
        if (in) mass += double(count) * std::pow(lambda, -k);
    }
    return mass / z;
}

}  // namespace sops
