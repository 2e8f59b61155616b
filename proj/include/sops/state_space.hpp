#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "sops/dynamics.hpp"

namespace sops {

// All connected hole-free configurations of a given size, one canonical
// representative per translation class. Rotated copies are distinct states.
struct StateSpace {
    int n = 0;
    std::vector<std::vector<Cell>> states;            // canonical sorted cell lists
    std::unordered_map<std::string, int> index;       // serialized cells -> ordinal
    std::vector<int> perimeter_of;                    // p per state
    std::map<int, long long> m_k;                     // perimeter histogram

    int find(const std::vector<Cell>& canonical) const;
};

std::string state_key(const std::vector<Cell>& canonical);

// Anchored-growth enumeration with canonical deduplication. Every connected
// hole-free configuration of size n has a removable boundary cell (the
// top-rightmost cell works), so growing hole-free states one cell at a time
// reaches all of them.
StateSpace enumerate_states(int n, int limit = 10);

// Independent strategy for cross-checking counts: enumerate connected
// subsets containing the origin inside a bounded window, Redelmeier style,
// keeping those whose anchor is the origin and which are hole-free.
long long enumerate_count_window(int n);

// Row-stochastic one-step matrix of the chain on the enumerated space.
Eigen::MatrixXd build_matrix(const StateSpace& s, double lambda);

// pi(sigma) = lambda^(-p(sigma)) / Z.
Eigen::VectorXd stationary(const StateSpace& s, double lambda);

struct StationaryReport {
    double max_stationarity_residual = 0;  // ||pi P - pi||_inf
    double max_detailed_balance_residual = 0;
    double max_row_sum_error = 0;
};
StationaryReport verify_stationary(const StateSpace& s, double lambda);

// Checks every componentwise deviation between the triangle-, edge-, and
// perimeter-weighted stationary vectors.
double weight_form_deviation(const StateSpace& s, double lambda);

// Strong connectivity of the positive-transition digraph, plus support
// symmetry (P(i,j) > 0 iff P(j,i) > 0).
struct IrreducibilityReport {
    bool strongly_connected = false;
    bool support_symmetric = false;
};
IrreducibilityReport verify_irreducible(const StateSpace& s, double lambda);

enum class TailMode { Compression, Expansion };

// Exact stationary mass of {p >= alpha * p_min} (compression) or
// {p <= beta * p_max} (expansion), with p_min the enumerated minimum and
// p_max = 2n - 2.
double tail_probability(const StateSpace& s, double lambda, TailMode mode, double factor);

// Z = sum over states of lambda^(-p).
double partition_function(const StateSpace& s, double lambda);

}  // namespace sops
