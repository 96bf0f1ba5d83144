#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/group.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// |S|x|S| block of U at one wave vector: <h1|U_g|h2> = chi_{h1}(g) C_{h1 h2}.
/// Line: continuous k in [-pi, pi], row h scaled by exp(-i k h).
struct ReducedOperator {
    GroupElement wave_vector;  // finite groups
    double k = 0.0;            // line
    bool line = false;
    Eigen::MatrixXcd matrix;
};

ReducedOperator reduced_operator(const GroupElement& g, const Coin& coin,
                                 const GroupSpec& spec,
                                 const GeneratorSet& gens);
ReducedOperator reduced_operator_line(double k, const Coin& coin);

/// Eigenphases theta in (-pi, pi] with eigenvalue = exp(i theta), and
/// orthonormal eigenvector columns. Unitary input is normal, so the
/// Schur vectors are the eigenvectors.
struct SpectralDecomposition {
    Eigen::VectorXd eigenphases;
    Eigen::MatrixXcd eigenvectors;
};

SpectralDecomposition diagonalize(const ReducedOperator& op);

/// Fourier-transform positions, apply (U_g)^t blockwise, transform back.
/// Finite groups only.
WalkState spectral_evolve(const WalkState& initial, const Coin& coin, int t);

struct DispersionPoint {
    double wave_number = 0.0;  // Hamming weight |k| (hypercube), k (line),
                               // flat index (general finite)
    int branch = 0;
    double omega = 0.0;        // principal eigenphase
    double group_velocity = 0.0;
    double phase_velocity = 0.0;
};

struct DispersionTable {
    enum class Flavor { Hypercube, Line, General };

    Flavor flavor = Flavor::General;
    int hypercube_n = 0;       // Flavor::Hypercube
    int grid_points = 0;       // Flavor::Line
    bool grover_coin = false;  // closed-form velocities available
    bool hadamard_coin = false;
    /// General finite groups use per-axis wave numbers kappa_j = 2 pi g_j / N_j
    /// and report the Euclidean norm of the per-axis velocity vector.
    bool per_axis_extension = false;
    std::vector<std::int64_t> moduli;  // Flavor::General
    std::vector<DispersionPoint> rows;
};

/// Eigenphase table over all wave vectors (finite) or a uniform
/// endpoint-inclusive k-grid on [-pi, pi] (line), branch-matched for
/// continuity. Velocities are filled by the kinematics module.
DispersionTable dispersion_table(const Coin& coin, const GroupSpec& spec,
                                 const GeneratorSet& gens,
                                 int line_grid_points = 1025);

/// True iff spec is Z_2^n with the unit generating set in axis order.
bool is_hypercube(const GroupSpec& spec, const GeneratorSet& gens);

}  // namespace qwalk
