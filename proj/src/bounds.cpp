#include "sops/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace sops {

const char* const kConfigCount50 = "2430068453031180290203185942420933";

long double config_count_50() {
    long double v = 0;
    for (const char* p = kConfigCount50; *p; ++p) v = v * 10 + (*p - '0');
    return v;
}

double expansion_bound_217() {
    return double(std::pow(2.0L * config_count_50(), 0.01L));
}

double hex_connective_constant() { return std::sqrt(2.0 + std::sqrt(2.0)); }

double compression_threshold(double alpha) {
    if (alpha <= 1) throw std::invalid_argument("compression_threshold: alpha must exceed 1");
    return std::pow(2.0 + std::sqrt(2.0), alpha / (alpha - 1.0));
}

std::vector<std::vector<Cell>> zigzag_configurations(int n) {
    if (n < 1) throw std::invalid_argument("zigzag_configurations: n must be >= 1");
    std::vector<std::vector<Cell>> out;
    out.reserve(size_t(1) << (n - 1));
    std::vector<Cell> path{Cell{0, 0}};
    // Each bit picks east or northeast for one step.
    for (uint64_t mask = 0; mask < (uint64_t(1) << (n - 1)); ++mask) {
        path.resize(1);
        for (int i = 0; i < n - 1; ++i) {
            Cell step = (mask >> i) & 1 ? Cell{0, 1} : Cell{1, 0};
            path.push_back(path.back() + step);
        }
        out.push_back(path);
    }
    return out;
}

namespace {

// Diagonal index used by the gluing construction: cells on the same
// northwest-southeast lattice line share q + r.
inline int diag(Cell c) { return c.q + c.r; }

Cell extreme(const std::vector<Cell>& cells, bool maxDiag, bool maxR) {
    Cell best = cells.front();
    for (const Cell& c : cells) {
        int dc = diag(c), db = diag(best);
        if (maxDiag ? dc > db : dc < db) { best = c; continue; }
        if (dc != db) continue;
        if (maxR ? c.r > best.r : c.r < best.r) best = c;
    }
    return best;
}

}  // namespace

std::vector<std::vector<Cell>> attachment22_configurations(int n) {
    if (n < 1) throw std::invalid_argument("attachment22_configurations: n must be >= 1");
    StateSpace pieces = enumerate_states(3);
    std::vector<std::vector<Cell>> current{{Cell{0, 0}}};
    int size = 1;
    while (size + 3 <= n) {
        std::vector<std::vector<Cell>> next;
        next.reserve(current.size() * 22);
        for (const auto& body : current) {
            // Highest rightmost / lowest rightmost cells of the body.
            Cell p = extreme(body, true, true);
            Cell q = extreme(body, true, false);
            for (const auto& piece : pieces.states) {
                Cell h = extreme(piece, false, true);   // highest leftmost of the piece
                Cell l = extreme(piece, false, false);  // lowest leftmost
                for (int mode = 0; mode < 2; ++mode) {
                    // Mode 0: piece's H goes below and right of Q.
                    // Mode 1: piece's L goes above and right of P.
                    Cell target = mode == 0 ? q + Cell{1, 0} : p + Cell{0, 1};
                    Cell shift = target - (mode == 0 ? h : l);
                    std::vector<Cell> glued = body;
                    for (const Cell& c : piece) glued.push_back(c + shift);
                    next.push_back(std::move(glued));
                }
            }
        }
        current = std::move(next);
        size += 3;
    }
    while (size < n) {
        for (auto& body : current) {
            Cell q = extreme(body, true, false);
            body.push_back(q + Cell{1, 0});
        }
        ++size;
    }
    return current;
}

std::array<HexVertex, 3> hex_neighbors(const HexVertex& v) {
    Cell c = v.key;
    if (v.up) {
        return {HexVertex{c, false}, HexVertex{c + Cell{-1, 1}, false},
                HexVertex{c + Cell{0, 1}, false}};
    }
    return {HexVertex{c, true}, HexVertex{c + Cell{0, -1}, true},
            HexVertex{c + Cell{1, -1}, true}};
}

namespace {

struct HexVertexHash {
    size_t operator()(const HexVertex& v) const {
        return CellHash{}(v.key) * 2 + (v.up ? 1 : 0);
    }
};

inline int hexdist(Cell a, Cell b) {
    int dq = a.q - b.q, dr = a.r - b.r;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

std::string polygon_key(std::vector<HexVertex> poly) {
    int mq = poly.front().key.q, mr = poly.front().key.r;
    for (const auto& v : poly) {
        mq = std::min(mq, v.key.q);
        mr = std::min(mr, v.key.r);
    }
    for (auto& v : poly) v.key = v.key - Cell{mq, mr};
    std::sort(poly.begin(), poly.end());
    std::string key;
    key.reserve(poly.size() * 9);
    for (const auto& v : poly) {
        key += std::to_string(v.key.q);
        key.push_back(',');
        key += std::to_string(v.key.r);
        key.push_back(v.up ? 'u' : 'd');
        key.push_back(';');
    }
    return key;
}

struct PolygonSearch {
    int maxLength;
    HexVertex origin{Cell{0, 0}, true};
    std::vector<HexVertex> path;
    std::unordered_set<HexVertex, HexVertexHash> onPath;
    std::map<int, std::unordered_set<std::string>> found;

    void dfs() {
        const HexVertex& cur = path.back();
        int len = int(path.size());
        for (const HexVertex& nxt : hex_neighbors(cur)) {
            if (nxt == origin) {
                if (len >= 3 && len <= maxLength) found[len].insert(polygon_key(path));
                continue;
            }
            if (len + 1 > maxLength) continue;
            if (onPath.contains(nxt)) continue;
            // Steps move the key by at most one cell of lattice distance.
            if (len + hexdist(nxt.key, origin.key) > maxLength) continue;
            path.push_back(nxt);
            onPath.insert(nxt);
            dfs();
            onPath.erase(nxt);
            path.pop_back();
        }
    }
};

}  // namespace

std::map<int, long long> count_hex_polygons(int max_length) {
    PolygonSearch search;
    search.maxLength = max_length;
    search.path.push_back(search.origin);
    search.onPath.insert(search.origin);
    search.dfs();
    std::map<int, long long> out;
    for (const auto& [len, set] : search.found) out[len] = (long long)set.size();
    return out;
}

namespace {

// Canonical face containing the three given pairwise adjacent cells.
HexVertex face_of(Cell a, Cell b, Cell c) {
    for (const Cell& k : {a, b, c}) {
        auto matches = [&](Cell x, Cell y) {
            return (x == a || x == b || x == c) && (y == a || y == b || y == c);
        };
        if (matches(k + Cell{1, 0}, k + Cell{0, 1})) return {k, true};
        if (matches(k + Cell{1, 0}, k + Cell{1, -1})) return {k, false};
    }
    throw std::logic_error("face_of: cells do not form a lattice face");
}

}  // namespace

DualBoundary dual_boundary(const Configuration& c) {
    // Hex edges dual to lattice edges with exactly one occupied endpoint.
    std::map<HexVertex, std::vector<HexVertex>> adj;
    int edges = 0;
    for (const Cell& x : c.cells()) {
        for (int d = 0; d < 6; ++d) {
            Cell nb = neighbor(x, {d});
            if (c.occupied(nb)) continue;
            Cell u = neighbor(x, {(d + 1) % 6});
            Cell v = neighbor(x, {(d + 5) % 6});
            HexVertex f1 = face_of(x, nb, u);
            HexVertex f2 = face_of(x, nb, v);
            adj[f1].push_back(f2);
            adj[f2].push_back(f1);
            ++edges;
        }
    }
    DualBoundary out;
    out.length = edges;
    if (edges == 0) return out;
    for (const auto& [v, nbs] : adj)
        if (nbs.size() != 2) return out;  // not a disjoint cycle cover
    // Trace from any vertex and check a single cycle covers every edge.
    const HexVertex start = adj.begin()->first;
    HexVertex prev = start, cur = adj.begin()->second.front();
    int steps = 1;
    while (cur != start) {
        const auto& nbs = adj[cur];
        HexVertex nxt = nbs[0] == prev ? nbs[1] : nbs[0];
        prev = cur;
        cur = nxt;
        ++steps;
        if (steps > edges) return out;
    }
    out.single_cycle = (steps == edges);
    return out;
}

BoundReport bounds_report(int n, double lambda, bool with_saw_counts) {
    if (lambda <= 0) throw std::invalid_argument("bounds_report: lambda must be positive");
    StateSpace s = enumerate_states(n);
    BoundReport rep;
    rep.n = n;
    rep.lambda = lambda;
    rep.z_exact = partition_function(s, lambda);
    int pmax = std::max(2 * n - 2, 0);
    rep.z_lb_sqrt2 = std::pow(std::sqrt(2.0) / lambda, pmax);
    rep.z_lb_167 = 0.12 * std::pow(1.67 / lambda, pmax);
    rep.z_lb_217 = 0.13 * std::pow(expansion_bound_217() / lambda, pmax);
    rep.sqrt2_holds = rep.z_lb_sqrt2 <= rep.z_exact;
    rep.b167_holds = lambda < 1 || rep.z_lb_167 <= rep.z_exact;
    rep.b217_holds = lambda <= 1 || rep.z_lb_217 <= rep.z_exact;
    if (with_saw_counts) {
        int maxLen = 2 * s.m_k.rbegin()->first + 6;
        auto saps = count_hex_polygons(maxLen);
        for (const auto& [len, cnt] : saps) rep.saw_counts[len] = cnt;
    }
    return rep;
}

SawCheckReport saw_bound_check(int n) {
    StateSpace s = enumerate_states(n);
    SawCheckReport rep;
    rep.m_k = s.m_k;
    int maxLen = 2 * s.m_k.rbegin()->first + 6;
    rep.sap_of_length = count_hex_polygons(maxLen);
    for (int i = 0; i < int(s.states.size()); ++i) {
        Configuration cfg(s.states[i]);
        DualBoundary b = dual_boundary(cfg);
        if (!b.single_cycle) rep.all_single_cycles = false;
        if (b.length != 2 * s.perimeter_of[i] + 6) rep.all_lengths_match = false;
    }
    for (const auto& [k, mk] : s.m_k) {
        auto it = rep.sap_of_length.find(2 * k + 6);
        if (it == rep.sap_of_length.end() || mk > it->second) rep.histogram_bounded = false;
    }
    return rep;
}

}  // namespace sops
