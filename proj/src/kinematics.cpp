#include "qwalk/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

double golden_max(double a, double b, const auto& f) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 80; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

}  // namespace

std::vector<double> group_velocity_numeric(const std::vector<double>& wave_numbers,
                                           const std::vector<double>& omegas) {
    const std::size_t m = wave_numbers.size();
    if (m != omegas.size()) {
        throw std::invalid_argument("group_velocity_numeric: length mismatch");
    }
    if (m < 2) {
        throw std::invalid_argument("group_velocity_numeric: need >= 2 points");
    }
    std::vector<double> v(m);
    // Phase differences taken on the circle.
    auto d = [&](std::size_t i) {
        return wrap_angle(omegas[i + 1] - omegas[i]);
    };
    if (m == 2) {
        const double slope = d(0) / (wave_numbers[1] - wave_numbers[0]);
        v[0] = v[1] = slope;
        return v;
    }
    for (std::size_t i = 1; i + 1 < m; ++i) {
        v[i] = (d(i - 1) + d(i)) / (wave_numbers[i + 1] - wave_numbers[i - 1]);
    }
    // Second-order one-sided differences at the ends.
    const double h0 = wave_numbers[1] - wave_numbers[0];
    v[0] = (3.0 * d(0) - d(1)) / (2.0 * h0);
    const double h1 = wave_numbers[m - 1] - wave_numbers[m - 2];
    v[m - 1] = (3.0 * d(m - 2) - d(m - 3)) / (2.0 * h1);
    return v;
}

double group_velocity_closed_hypercube(int n, int weight) {
    if (weight < 0 || weight > n) {
        throw std::out_of_range("hypercube weight out of range");
    }
    if (weight == 0 || weight == n) return 0.0;
    return 1.0 / std::sqrt(static_cast<double>(weight) *
                           static_cast<double>(n - weight));
}

double group_velocity_closed_line(double k) {
    const double c = std::cos(k);
    return c / std::sqrt(1.0 + c * c);
}

double phase_velocity_closed_line_plus(double k) {
    if (k == 0.0) return 1.0 / std::sqrt(2.0);
    return std::asin(std::sin(k) / std::sqrt(2.0)) / k;
}

double phase_velocity_closed_line_minus(double k) {
    if (k == 0.0) return -std::numeric_limits<double>::infinity();
    return -phase_velocity_closed_line_plus(k) - kPi / k;
}

namespace {

void fill_hypercube(DispersionTable& table) {
    const int n = table.hypercube_n;
    for (auto& row : table.rows) {
        const int w = static_cast<int>(row.wave_number);
        switch (row.branch) {
            case 0:
                row.group_velocity = group_velocity_closed_hypercube(n, w);
                break;
            case 1:
                row.group_velocity = -group_velocity_closed_hypercube(n, w);
                break;
            default:
                row.group_velocity = 0.0;  // flat +-1 bands
        }
        row.phase_velocity = w == 0 ? 0.0 : row.omega / w;
    }
}

void fill_line_closed(DispersionTable& table) {
    for (auto& row : table.rows) {
        const double k = row.wave_number;
        if (row.branch == 0) {
            row.group_velocity = group_velocity_closed_line(k);
            row.phase_velocity = phase_velocity_closed_line_plus(k);
        } else {
            row.group_velocity = -group_velocity_closed_line(k);
            row.phase_velocity = phase_velocity_closed_line_minus(k);
        }
    }
}

void fill_line_numeric(DispersionTable& table) {
    std::map<int, std::vector<std::size_t>> branches;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        branches[table.rows[i].branch].push_back(i);
    }
    for (auto& [branch, idx] : branches) {
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return table.rows[a].wave_number < table.rows[b].wave_number;
        });
        std::vector<double> k, omega;
        for (auto i : idx) {
            k.push_back(table.rows[i].wave_number);
            omega.push_back(table.rows[i].omega);
        }
        const auto v = group_velocity_numeric(k, omega);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            auto& row = table.rows[idx[j]];
            // Energy convention on the line: E = -theta.
            row.group_velocity = -v[j];
            row.phase_velocity =
                row.wave_number == 0.0 ? row.group_velocity
                                       : -row.omega / row.wave_number;
        }
    }
}

void fill_general(DispersionTable& table) {
    const auto& moduli = table.moduli;
    const auto rank = moduli.size();
    std::int64_t order = 1;
    for (auto n : moduli) order *= n;
    const auto d =
        static_cast<std::int64_t>(table.rows.size()) / std::max<std::int64_t>(order, 1);
    GroupSpec spec = GroupSpec::finite(moduli);
    for (std::int64_t g = 0; g < order; ++g) {
        const GroupElement wave = element_from_flat(g, spec);
        for (std::int64_t b = 0; b < d; ++b) {
            auto& row = table.rows[static_cast<std::size_t>(g * d + b)];
            // Per-axis wave numbers kappa_j = 2 pi g_j / N_j; the reported
            // group velocity is the Euclidean norm of the per-axis
            // derivative vector (sorted-phase branch correspondence).
            double sq = 0.0;
            double kappa_sq = 0.0;
            for (std::size_t j = 0; j < rank; ++j) {
                GroupElement up = wave, down = wave;
                up[j] = (wave[j] + 1) % moduli[j];
                down[j] = (wave[j] - 1 + moduli[j]) % moduli[j];
                const double omega_up =
                    table.rows[static_cast<std::size_t>(
                                   flat_index(up, spec) * d + b)]
                        .omega;
                const double omega_down =
                    table.rows[static_cast<std::size_t>(
                                   flat_index(down, spec) * d + b)]
                        .omega;
                const double spacing = 2.0 * kPi / static_cast<double>(moduli[j]);
                const double vj =
                    wrap_angle(omega_up - omega_down) / (2.0 * spacing);
                sq += vj * vj;
                const double kappa =
                    wrap_angle(2.0 * kPi * static_cast<double>(wave[j]) /
                               static_cast<double>(moduli[j]));
                kappa_sq += kappa * kappa;
            }
            row.group_velocity = std::sqrt(sq);
            row.phase_velocity =
                kappa_sq == 0.0 ? 0.0 : row.omega / std::sqrt(kappa_sq);
        }
    }
}

}  // namespace

void fill_velocities(DispersionTable& table) {
    switch (table.flavor) {
        case DispersionTable::Flavor::Hypercube:
            fill_hypercube(table);
            break;
        case DispersionTable::Flavor::Line:
            if (table.hadamard_coin) {
                fill_line_closed(table);
            } else {
                fill_line_numeric(table);
            }
            break;
        case DispersionTable::Flavor::General:
            fill_general(table);
            break;
    }
}

VelocityProfile velocity_summary(const DispersionTable& table) {
    VelocityProfile profile;
    bool first = true;
    for (const auto& row : table.rows) {
        const double v = std::abs(row.group_velocity);
        // |v_g| is symmetric in k, so maxima tie; report the smallest |k|.
        const bool better =
            first || v > profile.v_g_max + 1e-15 ||
            (v > profile.v_g_max - 1e-15 &&
             std::abs(row.wave_number) < std::abs(profile.argmax_wave_number));
        if (better) {
            profile.v_g_max = v;
            profile.argmax_wave_number = row.wave_number;
            profile.argmax_branch = row.branch;
            first = false;
        }
    }
    if (table.flavor == DispersionTable::Flavor::Line && table.hadamard_coin &&
        !table.rows.empty()) {
        // Interior maxima must not be limited by the grid resolution.
        const double h = 2.0 * kPi / (table.grid_points - 1);
        const double a = std::max(-kPi, profile.argmax_wave_number - h);
        const double b = std::min(kPi, profile.argmax_wave_number + h);
        profile.v_g_max =
            std::max(profile.v_g_max, golden_max(a, b, [](double k) {
                         return std::abs(group_velocity_closed_line(k));
                     }));
    }
    return profile;
}

double max_group_velocity(const Coin& coin, const GroupSpec& spec,
                          const GeneratorSet& gens, int line_grid_points) {
    DispersionTable table = dispersion_table(coin, spec, gens, line_grid_points);
    fill_velocities(table);
    return velocity_summary(table).v_g_max;
}

GvHittingResult gv_hitting_time(const GroupElement& g1, const GroupElement& g2,
                                const Coin& coin, const GroupSpec& spec,
                                const GeneratorSet& gens) {
    GvHittingResult result;
    result.distance = graph_distance(g1, g2, gens, spec);
    result.v_g_max = max_group_velocity(coin, spec, gens);
    result.hitting_time =
        result.v_g_max > 0.0
            ? static_cast<double>(result.distance) / result.v_g_max
            : (result.distance == 0
                   ? 0.0
                   : std::numeric_limits<double>::infinity());
    return result;
}

}  // namespace qwalk
