#pragma once

#include <map>
#include <string>
#include <vector>

#include "sops/state_space.hpp"

namespace sops {

// Reference constants for the counting bounds.
//
// The 34-digit count of connected hole-free configurations with 50 particles
// is recorded from the literature, never recomputed here.
extern const char* const kConfigCount50;
long double config_count_50();          // parsed from kConfigCount50
double expansion_bound_217();           // (2 * N50)^(1/100) ~ 2.1720
double hex_connective_constant();       // sqrt(2 + sqrt(2)) ~ 1.8478
double compression_threshold(double alpha);  // (2 + sqrt 2)^(alpha/(alpha-1))

struct BoundReport {
    int n = 0;
    double lambda = 1;
    double z_exact = 0;
    double z_lb_sqrt2 = 0;   // (sqrt2 / lambda)^pmax, any lambda
    double z_lb_167 = 0;     // 0.12 * (1.67 / lambda)^pmax, lambda >= 1
    double z_lb_217 = 0;     // 0.13 * (2.17 / lambda)^pmax, lambda > 1
    bool sqrt2_holds = false;
    bool b167_holds = false;  // only meaningful when lambda >= 1
    bool b217_holds = false;  // only meaningful when lambda > 1
    std::map<int, long long> saw_counts;  // hex SAP count per polygon length
};

BoundReport bounds_report(int n, double lambda, bool with_saw_counts = false);

// Monotone staircase paths: n cells where each successive cell sits east or
// northeast of the previous one. There are 2^(n-1) of them, all trees of
// maximum perimeter 2n - 2.
std::vector<std::vector<Cell>> zigzag_configurations(int n);

// Iterative construction gluing 3-cell pieces (two attachment modes per
// piece) onto a growing configuration, yielding 22^floor((n-1)/3) distinct
// hole-free configurations of n cells.
std::vector<std::vector<Cell>> attachment22_configurations(int n);

// Hexagonal-lattice vertex: faces of the triangular lattice are the dual
// vertices; the face-adjacency graph is the honeycomb.
struct HexVertex {
    Cell key;
    bool up = true;
    friend bool operator==(const HexVertex&, const HexVertex&) = default;
    friend auto operator<=>(const HexVertex&, const HexVertex&) = default;
};

std::array<HexVertex, 3> hex_neighbors(const HexVertex& v);

// Counts self-avoiding polygons in the hexagonal lattice by length, up to
// translation, for all even lengths <= max_length.
std::map<int, long long> count_hex_polygons(int max_length);

// Boundary of the union of dual hexagons of sigma's cells. For a connected
// hole-free configuration this is a single cycle of length 2 p(sigma) + 6.
struct DualBoundary {
    bool single_cycle = false;
    int length = 0;
};
DualBoundary dual_boundary(const Configuration& c);

struct SawCheckReport {
    bool all_single_cycles = true;
    bool all_lengths_match = true;       // dual length == 2k + 6
    bool histogram_bounded = true;       // m_k <= SAP(2k + 6)
    std::map<int, long long> m_k;
    std::map<int, long long> sap_of_length;
};

// Verifies the dual injection on the full state space of size n.
SawCheckReport saw_bound_check(int n);

}  // namespace sops
