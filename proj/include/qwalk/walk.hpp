#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/group.hpp"

namespace qwalk {

/// Unitary coin operator on the space spanned by the generator labels.
struct Coin {
    Eigen::MatrixXcd matrix;
    std::string name = "custom";

    static Coin grover(std::size_t degree);    // 2/n - delta_ij
    static Coin hadamard();                    // 2x2, rows (+,-)
    static Coin identity(std::size_t degree);
    static Coin custom(Eigen::MatrixXcd m, std::string name = "custom");

    std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }
    bool is_unitary(double tol = 1e-10) const;
};

/// Amplitude table psi_{h,g} over coin label x position, unit norm.
/// Finite groups address positions by mixed-radix flat index; the line
/// uses a fixed window [-window, window] allocated for a planned horizon
/// (support grows at most one site per step, so the window is exact).
class WalkState {
public:
    WalkState(GroupSpec spec, GeneratorSet gens, std::int64_t line_window = 0);

    const GroupSpec& spec() const { return spec_; }
    const GeneratorSet& gens() const { return gens_; }
    int time() const { return time_; }
    void set_time(int t) { time_ = t; }

    std::size_t coin_dim() const { return gens_.size(); }
    std::int64_t num_positions() const { return num_positions_; }
    std::int64_t window() const { return window_; }

    /// Storage index of (coin label h, position index g).
    std::int64_t idx(std::size_t h, std::int64_t g) const {
        return static_cast<std::int64_t>(h) * num_positions_ + g;
    }
    /// Line position -> storage position index.
    std::int64_t line_pos_index(std::int64_t n) const;

    Complex& at(std::size_t h, std::int64_t g) { return amps_[idx(h, g)]; }
    Complex at(std::size_t h, std::int64_t g) const { return amps_[idx(h, g)]; }

    Eigen::VectorXcd& amplitudes() { return amps_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }

    double norm() const { return amps_.norm(); }

    /// Point start |coin_vector> (x) |vertex>.
    static WalkState point_start(const GroupSpec& spec, const GeneratorSet& gens,
                                 const GroupElement& vertex,
                                 const Eigen::VectorXcd& coin_vector,
                                 std::int64_t line_window = 0);
    /// (|0> + i|1>)/sqrt(2) (x) |n=0> on the line.
    static WalkState symmetric_line_start(std::int64_t window);
    /// n^{-1/2} sum_j |e_j> (x) |vertex| on any finite group.
    static WalkState uniform_coin_start(const GroupSpec& spec,
                                        const GeneratorSet& gens,
                                        const GroupElement& vertex);

private:
    GroupSpec spec_;
    GeneratorSet gens_;
    std::int64_t window_;
    std::int64_t num_positions_;
    Eigen::VectorXcd amps_;
    int time_ = 0;
};

/// (C (x) I): per position the coin-index vector is multiplied by C.
void apply_coin(WalkState& state, const Coin& coin);

/// S: amplitude at (h, g) moves to (h, g.h); exact permutation.
/// Throws if a line amplitude would leave the allocated window.
void apply_shift(WalkState& state);

/// One step U = S o (C (x) I); increments time.
void step(WalkState& state, const Coin& coin);

/// t applications of step.
void evolve(WalkState& state, const Coin& coin, int t);

/// P_g = sum_h |psi_{h,g}|^2 over position indices.
Eigen::VectorXd position_distribution(const WalkState& state);

}  // namespace qwalk
