#pragma once

#include <random>
#include <vector>

#include "gibbsnet/geometry.hpp"

namespace gibbsnet {

// Typical-node degree moments of the Poisson-Delaunay graph.
inline constexpr double kDelaunayMeanNeighbors = 6.0;
inline constexpr double kDelaunayNeighborSecondMoment = 37.7742;
inline constexpr double kDelaunayNeighborCV = 0.222;

struct OverheadParams {
    double lambda_macro = 1.0;  // macro BS intensity per unit area
    double lambda_user = 10.0;  // user intensity per unit area
    double lambda_small = 0.0;  // small-cell intensity per unit area
    double small_radius = 0.0;  // coverage radius of a small cell (rho)
    double beacon_rate = 1.0;   // beacon frequency tau, per second
    double window_w = 54.0;
    double window_h = 54.0;
    // Nuclei closer than this to the window boundary are excluded from the
    // statistics; negative selects the default 2/sqrt(lambda_macro).
    double interior_margin = -1.0;

    double margin() const;
};

// Sparsity threshold for the Boolean small-cell model: above this coverage
// fraction the closed-form heterogeneous means lose validity.
inline constexpr double kBooleanSparsityThreshold = 0.1;

struct OverheadReport {
    // Macro-only model.
    double users_per_cell = 0.0;                // mean M
    double users_per_cell_second_moment = 0.0;  // E(M^2)
    double uplink_mean = 0.0;                   // R: messages/s per macro cell's mobiles
    double uplink_bound = 0.0;                  // Cauchy-Schwarz upper bound on R
    double backhaul_mean = 0.0;                 // B: messages/s per Delaunay edge

    // Heterogeneous extension; populated when hetero is true.
    bool hetero = false;
    double mean_users_small = 0.0;
    double mean_users_macro = 0.0;
    double small_neighbors_of_macro = 0.0;
    double small_neighbors_of_small = 0.0;
    double macro_neighbors_of_macro = kDelaunayMeanNeighbors;
    double macro_neighbors_of_small = 7.0;
    double uplink_macro = 0.0;
    double uplink_small = 0.0;
    double backhaul_macro_macro = 0.0;
    double backhaul_macro_small = 0.0;

    double boolean_coverage = 0.0;  // lambda_small * pi * rho^2
    bool sparsity_warning = false;
};

// Mean uplink overhead, its Cauchy-Schwarz bound and the mean backhaul load
// per Delaunay edge for the macro-only Poisson model. Faults on zero macro
// intensity.
OverheadReport macro_overhead(const OverheadParams& params);

// Adds the macro+small means. Faults when the parameters leave a negative
// mean macro population (outside the sparse Boolean regime).
OverheadReport hetero_overhead(const OverheadParams& params);

// Homogeneous Poisson point process on a w x h window.
std::vector<Vec2> sample_ppp(double intensity, double window_w, double window_h,
                             std::mt19937_64& rng);

struct EmpiricalOverhead {
    std::size_t replications = 0;
    std::size_t interior_nuclei = 0;
    std::size_t interior_edges = 0;
    double mean_degree = 0.0;          // E(N) over interior nuclei
    double degree_second_moment = 0.0; // E(N^2)
    double degree_cv = 0.0;
    double mean_users = 0.0;           // E(M)
    double users_second_moment = 0.0;  // E(M^2)
    double uplink_mean = 0.0;          // tau * E(M N)
    double backhaul_mean = 0.0;        // per interior Delaunay edge
    double bound_exceed_fraction = 0.0;  // replications whose uplink stays under the bound
    std::vector<double> per_replication_uplink;
};

// Samples macro and user processes, assigns users to the nearest macro,
// builds the Delaunay graph and measures interior-cell statistics only.
// Faults if the margin leaves no interior nuclei.
EmpiricalOverhead monte_carlo_overhead(const OverheadParams& params, int replications,
                                       std::mt19937_64& rng);

}  // namespace gibbsnet
