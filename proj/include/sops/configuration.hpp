#pragma once

#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

#include "sops/lattice.hpp"

namespace sops {

// Clockwise walk around the single external boundary, starting at the anchor.
// An edge traversed twice contributes twice to the length p. For a single
// particle the walk is that one cell and p = 0, which keeps the
// triangle/edge/perimeter identities valid at n = 1.
struct PerimeterWalk {
    std::vector<Cell> cells;  // closed walk; cells[0] is the anchor
    int length = 0;           // p: number of edges traversed
};

// A finite set of occupied cells with cached edge and triangle counts.
// Single-particle moves maintain the counts in O(1); recompute_metrics()
// rebuilds them from scratch for audits.
class Configuration {
  public:
    Configuration() = default;
    explicit Configuration(const std::vector<Cell>& cells);

    bool occupied(Cell c) const { return cells_.contains(c); }
    int size() const { return int(cells_.size()); }
    long long edge_count() const { return edges_; }
    long long triangle_count() const { return triangles_; }

    void insert(Cell c);
    void erase(Cell c);
    void move_particle(Cell from, Cell to);

    // Occupied neighbors of c, skipping `excluded` (used when a mover is
    // conceptually lifted off the board).
    int occupied_degree(Cell c, Cell excluded) const;
    int occupied_degree(Cell c) const { return occupied_degree(c, c); }
    // Faces at c whose other two corners are occupied, skipping `excluded`.
    int incident_triangles(Cell c, Cell excluded) const;
    int incident_triangles(Cell c) const { return incident_triangles(c, c); }

    std::vector<Cell> cells_sorted() const;  // lexicographic (q, r)
    const std::unordered_set<Cell, CellHash>& cells() const { return cells_; }

    void recompute_metrics();

  private:
    std::unordered_set<Cell, CellHash> cells_;
    long long edges_ = 0;
    long long triangles_ = 0;
};

bool is_connected(const Configuration& c);
bool has_hole(const Configuration& c);

// True iff occupying unoccupied cell l would create a hole. Error if l occupied.
bool is_gap(const Configuration& c, Cell l);

// Lowest leftmost occupied cell: minimal Cartesian y (i.e. minimal r), ties
// broken by minimal Cartesian x (i.e. minimal q).
Cell anchor(const Configuration& c);

// First particle met in a clockwise scan of n(anchor) starting from the
// northwest neighbor. Error when n < 2.
Cell first_neighbor(const Configuration& c);

// Boundary walk; requires a connected, hole-free configuration.
PerimeterWalk perimeter(const Configuration& c);

// Translates so the anchor sits at the origin. Rotated copies stay distinct.
Configuration canonicalize(const Configuration& c);
std::vector<Cell> canonical_cells(const Configuration& c);

// Exterior angles along the walk, in units of 60 degrees (one entry per
// visited particle). Their sum times 60 equals 180*p + 360.
std::vector<int> exterior_angles(const Configuration& c);

// Snapshot text format: one "q r" pair per line, sorted lexicographically;
// '#' comments and blank lines ignored.
Configuration read_snapshot(std::istream& in);
Configuration read_snapshot_file(const std::string& path);
void write_snapshot(std::ostream& out, const Configuration& c);
void write_snapshot_file(const std::string& path, const Configuration& c);

// n cells in a straight line east from the origin.
Configuration line_configuration(int n);

}  // namespace sops
