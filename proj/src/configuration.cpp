#include "sops/configuration.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace sops {

Configuration::Configuration(const std::vector<Cell>& cells) {
    for (const Cell& c : cells) cells_.insert(c);
    recompute_metrics();
}

int Configuration::occupied_degree(Cell c, Cell excluded) const {
    int deg = 0;
    for (int d = 0; d < 6; ++d) {
        Cell nb = neighbor(c, {d});
        if (nb != excluded && occupied(nb)) ++deg;
    }
    return deg;
}

int Configuration::incident_triangles(Cell c, Cell excluded) const {
    int t = 0;
    for (int d = 0; d < 6; ++d) {
        auto [a, b] = face_partners(c, d);
        if (a != excluded && b != excluded && occupied(a) && occupied(b)) ++t;
    }
    return t;
}

void Configuration::insert(Cell c) {
    if (occupied(c)) throw std::invalid_argument("insert: cell already occupied");
    edges_ += occupied_degree(c, c);
    triangles_ += incident_triangles(c, c);
    cells_.insert(c);
}

void Configuration::erase(Cell c) {
    if (!occupied(c)) throw std::invalid_argument("erase: cell not occupied");
    cells_.erase(c);
    edges_ -= occupied_degree(c, c);
    triangles_ -= incident_triangles(c, c);
}

void Configuration::move_particle(Cell from, Cell to) {
    erase(from);
    insert(to);
}

std::vector<Cell> Configuration::cells_sorted() const {
    std::vector<Cell> out(cells_.begin(), cells_.end());
    std::sort(out.begin(), out.end());
    return out;
}

void Configuration::recompute_metrics() {
    edges_ = 0;
    triangles_ = 0;
    for (const Cell& c : cells_) {
        // Count each edge once via directions 0..2, each face once via its key.
        for (int d = 0; d < 3; ++d)
            if (occupied(neighbor(c, {d}))) ++edges_;
        if (occupied(c + Cell{1, 0}) && occupied(c + Cell{0, 1})) ++triangles_;
        if (occupied(c + Cell{1, 0}) && occupied(c + Cell{1, -1})) ++triangles_;
    }
}

bool is_connected(const Configuration& c) {
    if (c.size() <= 1) return true;
    const auto& cells = c.cells();
    std::unordered_set<Cell, CellHash> seen;
    std::deque<Cell> queue{*cells.begin()};
    seen.insert(*cells.begin());
    while (!queue.empty()) {
        Cell cur = queue.front();
        queue.pop_front();
        for (int d = 0; d < 6; ++d) {
            Cell nb = neighbor(cur, {d});
            if (c.occupied(nb) && seen.insert(nb).second) queue.push_back(nb);
        }
    }
    return int(seen.size()) == c.size();
}

namespace {

struct Box {
    int qlo, qhi, rlo, rhi;
    bool contains(Cell c) const { return c.q >= qlo && c.q <= qhi && c.r >= rlo && c.r <= rhi; }
};

Box inflated_bounding_box(const Configuration& c) {
    Box b{std::numeric_limits<int>::max(), std::numeric_limits<int>::min(),
          std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
    for (const Cell& x : c.cells()) {
        b.qlo = std::min(b.qlo, x.q);
        b.qhi = std::max(b.qhi, x.q);
        b.rlo = std::min(b.rlo, x.r);
        b.rhi = std::max(b.rhi, x.r);
    }
    --b.qlo; ++b.qhi; --b.rlo; ++b.rhi;
    return b;
}

}  // namespace

bool has_hole(const Configuration& c) {
    if (c.size() == 0) return false;
    Box box = inflated_bounding_box(c);
    // Flood the empty space from a border corner; any empty cell inside the
    // box not reached is enclosed.
    std::unordered_set<Cell, CellHash> seen;
    std::deque<Cell> queue{Cell{box.qlo, box.rlo}};
    seen.insert(Cell{box.qlo, box.rlo});
    while (!queue.empty()) {
        Cell cur = queue.front();
        queue.pop_front();
        for (int d = 0; d < 6; ++d) {
            Cell nb = neighbor(cur, {d});
            if (!box.contains(nb) || c.occupied(nb)) continue;
            if (seen.insert(nb).second) queue.push_back(nb);
        }
    }
    long long boxArea = (long long)(box.qhi - box.qlo + 1) * (box.rhi - box.rlo + 1);
    return (long long)seen.size() + c.size() < boxArea;
}

bool is_gap(const Configuration& c, Cell l) {
    if (c.occupied(l)) throw std::invalid_argument("is_gap: cell is occupied");
    // Filling l can only enclose a region that touches l, so flood each empty
    // neighbor of l and see whether it escapes the inflated bounding box.
    Box box = inflated_bounding_box(c);
    std::unordered_set<Cell, CellHash> seen;
    for (int d0 = 0; d0 < 6; ++d0) {
        Cell start = neighbor(l, {d0});
        if (c.occupied(start) || seen.contains(start)) continue;
        std::deque<Cell> queue{start};
        std::vector<Cell> component{start};
        seen.insert(start);
        bool escaped = false;
        while (!queue.empty() && !escaped) {
            Cell cur = queue.front();
            queue.pop_front();
            for (int d = 0; d < 6; ++d) {
                Cell nb = neighbor(cur, {d});
                if (nb == l || c.occupied(nb)) continue;
                if (!box.contains(nb)) { escaped = true; break; }
                if (seen.insert(nb).second) queue.push_back(nb);
            }
        }
        if (!escaped) return true;
    }
    return false;
}

Cell anchor(const Configuration& c) {
    if (c.size() == 0) throw std::invalid_argument("anchor: empty configuration");
    Cell best{0, 0};
    bool first = true;
    for (const Cell& x : c.cells()) {
        if (first || x.r < best.r || (x.r == best.r && x.q < best.q)) {
            best = x;
            first = false;
        }
    }
    return best;
}

Cell first_neighbor(const Configuration& c) {
    if (c.size() < 2) throw std::invalid_argument("first_neighbor: need n >= 2");
    Cell s = anchor(c);
    // Clockwise scan of n(s) starting at the northwest neighbor (the cell
    // "directly above" s in the walk convention): NW, NE, E, SE, SW, W.
    for (int k = 0; k < 6; ++k) {
        int d = ((2 - k) % 6 + 6) % 6;
        Cell nb = neighbor(s, {d});
        if (c.occupied(nb)) return nb;
    }
    throw std::logic_error("first_neighbor: anchor isolated in connected configuration");
}

PerimeterWalk perimeter(const Configuration& c) {
    if (c.size() == 0) throw std::invalid_argument("perimeter: empty configuration");
    if (!is_connected(c)) throw std::invalid_argument("perimeter: configuration disconnected");
    if (has_hole(c)) throw std::invalid_argument("perimeter: configuration has a hole");
    PerimeterWalk w;
    Cell s = anchor(c);
    if (c.size() == 1) {
        w.cells = {s};
        w.length = 0;
        return w;
    }
    // The walk keeps unoccupied cells on its left. At each particle, scan
    // clockwise from just past the direction of the previous particle; the
    // first occupied neighbor is the next walk cell. The anchor's fictitious
    // predecessor is its (empty) southwest neighbor.
    int backDir = 4;  // direction from current cell to its predecessor
    Cell cur = s;
    w.cells.push_back(s);
    Cell firstNext{0, 0};
    int firstOut = -1;
    while (true) {
        int outDir = -1;
        for (int k = 1; k <= 6; ++k) {
            int d = ((backDir - k) % 6 + 6) % 6;
            if (c.occupied(neighbor(cur, {d}))) {
                outDir = d;
                break;
            }
        }
        Cell nxt = neighbor(cur, {outDir});
        if (firstOut < 0) {
            firstOut = outDir;
            firstNext = nxt;
        } else if (cur == s && outDir == firstOut) {
            break;  // the starting edge repeats; the walk is closed
        }
        w.cells.push_back(nxt);
        ++w.length;
        backDir = (outDir + 3) % 6;
        cur = nxt;
    }
    w.cells.pop_back();  // drop the duplicated anchor at the end
    return w;
}

std::vector<int> exterior_angles(const Configuration& c) {
    PerimeterWalk w = perimeter(c);
    std::vector<int> out;
    if (w.length == 0) return out;
    int p = w.length;
    for (int i = 0; i < p; ++i) {
        Cell prev = w.cells[(i + p - 1) % p];
        Cell cur = w.cells[i];
        Cell nxt = w.cells[(i + 1) % p];
        int a = direction_between(cur, prev).index;
        int b = direction_between(cur, nxt).index;
        int k = ((a - b) % 6 + 6) % 6;
        if (k == 0) k = 6;
        out.push_back(k);
    }
    return out;
}

Configuration canonicalize(const Configuration& c) {
    return Configuration(canonical_cells(c));
}

std::vector<Cell> canonical_cells(const Configuration& c) {
    Cell a = anchor(c);
    std::vector<Cell> out;
    out.reserve(c.size());
    for (const Cell& x : c.cells()) out.push_back(x - a);
    std::sort(out.begin(), out.end());
    return out;
}

Configuration read_snapshot(std::istream& in) {
    std::vector<Cell> cells;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long q, r;
        if (!(ls >> q)) continue;  // blank or comment-only line
        if (!(ls >> r)) {
            throw std::runtime_error("snapshot parse error at line " + std::to_string(lineno) +
                                     ": expected two integers");
        }
        std::string extra;
        if (ls >> extra) {
            throw std::runtime_error("snapshot parse error at line " + std::to_string(lineno) +
                                     ": trailing content '" + extra + "'");
        }
        cells.push_back(Cell{int(q), int(r)});
    }
    Configuration cfg(cells);
    if (cfg.size() != int(cells.size()))
        throw std::runtime_error("snapshot contains duplicate cells");
    return cfg;
}

Configuration read_snapshot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open snapshot file: " + path);
    return read_snapshot(in);
}

void write_snapshot(std::ostream& out, const Configuration& c) {
    for (const Cell& x : c.cells_sorted()) out << x.q << ' ' << x.r << '\n';
}

void write_snapshot_file(const std::string& path, const Configuration& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open snapshot file for writing: " + path);
    write_snapshot(out, c);
}

Configuration line_configuration(int n) {
    if (n < 1) throw std::invalid_argument("line_configuration: n must be >= 1");
    std::vector<Cell> cells;
    cells.reserve(n);
    for (int i = 0; i < n; ++i) cells.push_back(Cell{i, 0});
    return Configuration(cells);
}

}  // namespace sops
