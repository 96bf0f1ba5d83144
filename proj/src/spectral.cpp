#include "qwalk/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

double principal_arg(const Complex& z) {
    double a = std::arg(z);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

bool matrix_matches(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           (a - b).cwiseAbs().maxCoeff() < 1e-12;
}

}  // namespace

ReducedOperator reduced_operator(const GroupElement& g, const Coin& coin,
                                 const GroupSpec& spec,
                                 const GeneratorSet& gens) {
    if (spec.is_line()) {
        throw std::invalid_argument(
            "reduced_operator: use reduced_operator_line for the line");
    }
    if (coin.dim() != gens.size()) {
        throw std::invalid_argument("reduced_operator: coin dimension != |S|");
    }
    ReducedOperator op;
    op.wave_vector = reduce(g, spec);
    op.matrix = coin.matrix;
    for (std::size_t h = 0; h < gens.size(); ++h) {
        op.matrix.row(static_cast<std::int64_t>(h)) *=
            character(gens[h], op.wave_vector, spec);
    }
    return op;
}

ReducedOperator reduced_operator_line(double k, const Coin& coin) {
    if (coin.dim() != 2) {
        throw std::invalid_argument("line reduced operator needs |S| = 2");
    }
    ReducedOperator op;
    op.line = true;
    op.k = k;
    op.matrix = coin.matrix;
    // Row for generator +1 picks up e^{-ik}, row for -1 picks up e^{+ik}.
    op.matrix.row(0) *= std::polar(1.0, -k);
    op.matrix.row(1) *= std::polar(1.0, k);
    return op;
}

SpectralDecomposition diagonalize(const ReducedOperator& op) {
    // Unitary matrices are normal, so the Schur form is diagonal and the
    // Schur basis is an orthonormal eigenbasis.
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(op.matrix);
    if (schur.info() != Eigen::Success) {
        throw std::runtime_error("diagonalize: Schur decomposition failed");
    }
    const auto n = op.matrix.rows();
    SpectralDecomposition dec;
    dec.eigenvectors = schur.matrixU();
    dec.eigenphases.resize(n);
    for (std::int64_t i = 0; i < n; ++i) {
        dec.eigenphases[i] = principal_arg(schur.matrixT()(i, i));
    }
    Eigen::VectorXcd eigvals(n);
    for (std::int64_t i = 0; i < n; ++i) {
        eigvals[i] = std::polar(1.0, dec.eigenphases[i]);
    }
    const double residual =
        (dec.eigenvectors * eigvals.asDiagonal() * dec.eigenvectors.adjoint() -
         op.matrix)
            .cwiseAbs()
            .maxCoeff();
    if (residual > 1e-9) {
        throw std::runtime_error("diagonalize: reconstruction residual " +
                                 std::to_string(residual));
    }
    return dec;
}

WalkState spectral_evolve(const WalkState& initial, const Coin& coin, int t) {
    const auto& spec = initial.spec();
    if (spec.is_line()) {
        throw std::invalid_argument(
            "spectral_evolve: finite groups only (embed the line in a cycle "
            "Z_N with N > 2t)");
    }
    if (t < 0) throw std::invalid_argument("spectral_evolve: t must be >= 0");
    const auto& gens = initial.gens();
    const std::int64_t p = initial.num_positions();
    const auto d = static_cast<std::int64_t>(initial.coin_dim());

    // Position -> Fourier space, per coin label.
    Eigen::MatrixXcd tilde(p, d);
    for (std::int64_t h = 0; h < d; ++h) {
        tilde.col(h) = fourier_transform(
            initial.amplitudes().segment(h * p, p), spec,
            FourierDirection::Forward);
    }
    // Blockwise (U_g)^t through the eigendecomposition.
    for (std::int64_t g = 0; g < p; ++g) {
        const GroupElement wave = element_from_flat(g, spec);
        const auto dec = diagonalize(reduced_operator(wave, coin, spec, gens));
        Eigen::VectorXcd powers(d);
        for (std::int64_t i = 0; i < d; ++i) {
            powers[i] = std::polar(1.0, dec.eigenphases[i] * t);
        }
        const Eigen::VectorXcd block = tilde.row(g).transpose();
        tilde.row(g) = (dec.eigenvectors * powers.asDiagonal() *
                        dec.eigenvectors.adjoint() * block)
                           .transpose();
    }
    WalkState out(spec, gens);
    for (std::int64_t h = 0; h < d; ++h) {
        out.amplitudes().segment(h * p, p) =
            fourier_transform(tilde.col(h), spec, FourierDirection::Inverse);
    }
    out.set_time(initial.time() + t);
    return out;
}

bool is_hypercube(const GroupSpec& spec, const GeneratorSet& gens) {
    if (spec.is_line()) return false;
    for (auto n : spec.moduli) {
        if (n != 2) return false;
    }
    if (gens.size() != spec.rank()) return false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        GroupElement e(spec.rank(), 0);
        e[j] = 1;
        if (gens[j] != e) return false;
    }
    return true;
}

namespace {

DispersionTable hypercube_table(const Coin& coin, const GroupSpec& spec,
                                const GeneratorSet& gens) {
    const int n = static_cast<int>(spec.rank());
    DispersionTable table;
    table.flavor = DispersionTable::Flavor::Hypercube;
    table.hypercube_n = n;
    table.grover_coin = matrix_matches(coin.matrix, Coin::grover(gens.size()).matrix);
    for (int w = 0; w <= n; ++w) {
        GroupElement wave(spec.rank(), 0);
        for (int j = 0; j < w; ++j) wave[static_cast<std::size_t>(j)] = 1;
        const auto dec = diagonalize(reduced_operator(wave, coin, spec, gens));
        // Eigenvalues depend only on the Hamming weight; collapse the
        // multiset to its distinct phases.
        std::vector<double> phases(dec.eigenphases.data(),
                                   dec.eigenphases.data() + dec.eigenphases.size());
        std::sort(phases.begin(), phases.end());
        std::vector<double> distinct;
        for (double ph : phases) {
            if (distinct.empty() || ph - distinct.back() > 1e-7) {
                distinct.push_back(ph);
            }
        }
        bool have_flat_minus = false;
        for (double ph : distinct) {
            DispersionPoint pt;
            pt.wave_number = w;
            pt.omega = ph;
            if (std::abs(ph) < 1e-7) {
                pt.branch = 2;  // flat eigenvalue +1
            } else if (std::abs(std::abs(ph) - kPi) < 1e-7) {
                // flat eigenvalue -1; roundoff can put the principal
                // phase on either side of +-pi
                if (have_flat_minus) continue;
                have_flat_minus = true;
                pt.branch = 3;
                pt.omega = kPi;
            } else {
                pt.branch = ph > 0 ? 0 : 1;  // +/- omega_k
            }
            table.rows.push_back(pt);
        }
    }
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const DispersionPoint& a, const DispersionPoint& b) {
                         if (a.branch != b.branch) return a.branch < b.branch;
                         return a.wave_number < b.wave_number;
                     });
    return table;
}

DispersionTable line_table(const Coin& coin, int grid_points) {
    if (grid_points < 2) {
        throw std::invalid_argument("line dispersion needs a grid of >= 2 points");
    }
    DispersionTable table;
    table.flavor = DispersionTable::Flavor::Line;
    table.grid_points = grid_points;
    table.hadamard_coin = matrix_matches(coin.matrix, Coin::hadamard().matrix);
    const int m = grid_points;
    std::vector<std::array<double, 2>> omegas(static_cast<std::size_t>(m));
    Eigen::MatrixXcd prev_vecs;
    for (int i = 0; i < m; ++i) {
        const double k = -kPi + 2.0 * kPi * i / (m - 1);
        const auto dec = diagonalize(reduced_operator_line(k, coin));
        int order[2] = {0, 1};
        if (i == 0) {
            // Branch 0 starts at the phase nearest zero.
            if (std::abs(dec.eigenphases[1]) < std::abs(dec.eigenphases[0])) {
                std::swap(order[0], order[1]);
            }
        } else {
            // Continuity: greedy maximum eigenvector overlap with the
            // previous grid point, ties broken by nearest eigenphase.
            const double o00 = std::abs(prev_vecs.col(0).dot(dec.eigenvectors.col(0)));
            const double o01 = std::abs(prev_vecs.col(0).dot(dec.eigenvectors.col(1)));
            if (o01 > o00) std::swap(order[0], order[1]);
        }
        Eigen::MatrixXcd matched(2, 2);
        matched.col(0) = dec.eigenvectors.col(order[0]);
        matched.col(1) = dec.eigenvectors.col(order[1]);
        prev_vecs = matched;
        omegas[static_cast<std::size_t>(i)] = {dec.eigenphases[order[0]],
                                               dec.eigenphases[order[1]]};
    }
    for (int b = 0; b < 2; ++b) {
        for (int i = 0; i < m; ++i) {
            DispersionPoint pt;
            pt.wave_number = -kPi + 2.0 * kPi * i / (m - 1);
            pt.branch = b;
            pt.omega = omegas[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
            table.rows.push_back(pt);
        }
    }
    return table;
}

DispersionTable general_table(const Coin& coin, const GroupSpec& spec,
                              const GeneratorSet& gens) {
    DispersionTable table;
    table.flavor = DispersionTable::Flavor::General;
    table.per_axis_extension = true;
    table.moduli = spec.moduli;
    const std::int64_t order = spec.order();
    const auto d = static_cast<int>(gens.size());
    for (std::int64_t g = 0; g < order; ++g) {
        const GroupElement wave = element_from_flat(g, spec);
        auto dec = diagonalize(reduced_operator(wave, coin, spec, gens));
        std::vector<double> phases(dec.eigenphases.data(),
                                   dec.eigenphases.data() + d);
        std::sort(phases.begin(), phases.end());
        for (int b = 0; b < d; ++b) {
            DispersionPoint pt;
            pt.wave_number = static_cast<double>(g);
            pt.branch = b;
            pt.omega = phases[static_cast<std::size_t>(b)];
            table.rows.push_back(pt);
        }
    }
    return table;
}

}  // namespace

DispersionTable dispersion_table(const Coin& coin, const GroupSpec& spec,
                                 const GeneratorSet& gens,
                                 int line_grid_points) {
    if (coin.dim() != gens.size()) {
        throw std::invalid_argument("dispersion_table: coin dimension != |S|");
    }
    if (spec.is_line()) return line_table(coin, line_grid_points);
    // The per-weight collapse relies on the Grover coin's permutation
    // symmetry; other coins on Z_2^n go through the general path.
    if (is_hypercube(spec, gens) &&
        matrix_matches(coin.matrix, Coin::grover(gens.size()).matrix)) {
        return hypercube_table(coin, spec, gens);
    }
    return general_table(coin, spec, gens);
}

}  // namespace qwalk
