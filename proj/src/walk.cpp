#include "qwalk/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qwalk {

Coin Coin::grover(std::size_t degree) {
    if (degree == 0) throw std::invalid_argument("grover: degree must be > 0");
    const double off = 2.0 / static_cast<double>(degree);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Constant(degree, degree, off);
    m.diagonal().array() -= 1.0;
    return Coin{std::move(m), "grover"};
}

Coin Coin::hadamard() {
    Eigen::MatrixXcd m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return Coin{std::move(m), "hadamard"};
}

Coin Coin::identity(std::size_t degree) {
    return Coin{Eigen::MatrixXcd::Identity(degree, degree), "identity"};
}

Coin Coin::custom(Eigen::MatrixXcd m, std::string name) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("coin matrix must be square");
    }
    Coin c{std::move(m), std::move(name)};
    if (!c.is_unitary()) {
        throw std::invalid_argument("coin matrix is not unitary");
    }
    return c;
}

bool Coin::is_unitary(double tol) const {
    const auto n = matrix.rows();
    return (matrix * matrix.adjoint() - Eigen::MatrixXcd::Identity(n, n))
               .cwiseAbs()
               .maxCoeff() < tol;
}

WalkState::WalkState(GroupSpec spec, GeneratorSet gens, std::int64_t line_window)
    : spec_(std::move(spec)), gens_(std::move(gens)), window_(line_window) {
    if (spec_.is_line()) {
        if (window_ < 0) throw std::invalid_argument("negative line window");
        num_positions_ = 2 * window_ + 1;
    } else {
        window_ = 0;
        num_positions_ = spec_.order();
    }
    amps_ = Eigen::VectorXcd::Zero(static_cast<std::int64_t>(gens_.size()) *
                                   num_positions_);
}

std::int64_t WalkState::line_pos_index(std::int64_t n) const {
    if (!spec_.is_line()) throw std::logic_error("not a line state");
    if (n < -window_ || n > window_) {
        throw std::out_of_range("line position outside the allocated window");
    }
    return n + window_;
}

WalkState WalkState::point_start(const GroupSpec& spec, const GeneratorSet& gens,
                                 const GroupElement& vertex,
                                 const Eigen::VectorXcd& coin_vector,
                                 std::int64_t line_window) {
    if (static_cast<std::size_t>(coin_vector.size()) != gens.size()) {
        throw std::invalid_argument("coin vector dimension != |S|");
    }
    const double nrm = coin_vector.norm();
    if (std::abs(nrm - 1.0) > 1e-9) {
        throw std::invalid_argument("coin vector must have unit norm");
    }
    WalkState state(spec, gens, line_window);
    const std::int64_t g = spec.is_line() ? state.line_pos_index(vertex.at(0))
                                          : flat_index(vertex, spec);
    for (std::size_t h = 0; h < gens.size(); ++h) {
        state.at(h, g) = coin_vector[static_cast<std::int64_t>(h)];
    }
    return state;
}

WalkState WalkState::symmetric_line_start(std::int64_t window) {
    Eigen::VectorXcd coin(2);
    const double s = 1.0 / std::sqrt(2.0);
    coin << Complex(s, 0.0), Complex(0.0, s);
    return point_start(GroupSpec::line(), GeneratorSet::unit(GroupSpec::line()),
                       {0}, coin, window);
}

WalkState WalkState::uniform_coin_start(const GroupSpec& spec,
                                        const GeneratorSet& gens,
                                        const GroupElement& vertex) {
    const auto d = static_cast<std::int64_t>(gens.size());
    Eigen::VectorXcd coin =
        Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
    return point_start(spec, gens, vertex, coin);
}

void apply_coin(WalkState& state, const Coin& coin) {
    const auto d = static_cast<std::int64_t>(state.coin_dim());
    if (coin.matrix.rows() != d) {
        throw std::invalid_argument("coin dimension != |S|");
    }
    // Columns of the position-major view are the coin labels.
    Eigen::Map<Eigen::MatrixXcd> view(state.amplitudes().data(),
                                      state.num_positions(), d);
    view = (view * coin.matrix.transpose()).eval();
}

void apply_shift(WalkState& state) {
    const auto& spec = state.spec();
    const auto& gens = state.gens();
    const std::int64_t p = state.num_positions();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.amplitudes().size());
    if (spec.is_line()) {
        for (std::size_t h = 0; h < gens.size(); ++h) {
            const std::int64_t move = gens[h][0];
            for (std::int64_t g = 0; g < p; ++g) {
                const Complex a = state.at(h, g);
                if (a == 0.0) continue;
                const std::int64_t dst = g + move;
                if (dst < 0 || dst >= p) {
                    throw std::out_of_range(
                        "shift would leave the allocated line window");
                }
                out[state.idx(h, dst)] = a;
            }
        }
    } else {
        for (std::size_t h = 0; h < gens.size(); ++h) {
            for (std::int64_t g = 0; g < p; ++g) {
                const GroupElement dst =
                    compose(element_from_flat(g, spec), gens[h], spec);
                out[state.idx(h, flat_index(dst, spec))] = state.at(h, g);
            }
        }
    }
    state.amplitudes() = std::move(out);
}

void step(WalkState& state, const Coin& coin) {
    apply_coin(state, coin);
    apply_shift(state);
    state.set_time(state.time() + 1);
}

void evolve(WalkState& state, const Coin& coin, int t) {
    if (t < 0) throw std::invalid_argument("evolve: t must be >= 0");
    for (int i = 0; i < t; ++i) step(state, coin);
}

Eigen::VectorXd position_distribution(const WalkState& state) {
    const auto d = static_cast<std::int64_t>(state.coin_dim());
    Eigen::Map<const Eigen::MatrixXcd> view(state.amplitudes().data(),
                                            state.num_positions(), d);
    return view.cwiseAbs2().rowwise().sum();
}

}  // namespace qwalk
