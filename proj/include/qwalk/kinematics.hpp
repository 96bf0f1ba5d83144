#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/group.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// v_g = d omega / d k by central differences in the interior and
/// second-order one-sided differences at the ends. Differences of the
/// eigenphase are taken on the circle (wrapped to (-pi, pi]).
/// Needs at least 2 points.
std::vector<double> group_velocity_numeric(const std::vector<double>& wave_numbers,
                                           const std::vector<double>& omegas);

/// Hypercube + Grover: +-1/sqrt(|k|(n-|k|)) for 0 < |k| < n, else 0.
double group_velocity_closed_hypercube(int n, int weight);

/// Line + Hadamard, + branch: cos(k)/sqrt(1+cos^2(k)).
double group_velocity_closed_line(double k);

/// Line + Hadamard phase velocities: v_ph+ = arcsin(sin k / sqrt 2)/k
/// with the k->0 limit 1/sqrt(2); v_ph- = -v_ph+ - pi/k.
double phase_velocity_closed_line_plus(double k);
double phase_velocity_closed_line_minus(double k);

/// Fills the group_velocity and phase_velocity columns of a dispersion
/// table: closed forms where available (hypercube+Grover, line+Hadamard),
/// numeric finite differences otherwise.
void fill_velocities(DispersionTable& table);

struct VelocityProfile {
    double v_g_max = 0.0;
    double argmax_wave_number = 0.0;
    int argmax_branch = 0;
};

/// Exhaustive max of |v_g| over table rows; on the line the maximum is
/// refined by golden-section search on the closed form around the grid
/// argmax. Flat bands at degenerate points carry v_g = 0 and never win.
VelocityProfile velocity_summary(const DispersionTable& table);

double max_group_velocity(const Coin& coin, const GroupSpec& spec,
                          const GeneratorSet& gens, int line_grid_points = 1025);

struct GvHittingResult {
    std::int64_t distance = 0;
    double v_g_max = 0.0;
    double hitting_time = 0.0;  // distance / v_g_max; +inf when v_g_max = 0
};

/// Word-metric distance divided by the maximal group velocity.
GvHittingResult gv_hitting_time(const GroupElement& g1, const GroupElement& g2,
                                const Coin& coin, const GroupSpec& spec,
                                const GeneratorSet& gens);

}  // namespace qwalk
