#include <doctest.h>

#include <cmath>
#include <random>

#include "qwalk/group.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

// U^{-1} = (C^dagger (x) I) S^{-1}: the exact inverse step.
void inverse_step(WalkState& state, const Coin& coin) {
    const auto& spec = state.spec();
    const auto& gens = state.gens();
    const std::int64_t p = state.num_positions();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.amplitudes().size());
    for (std::size_t h = 0; h < gens.size(); ++h) {
        for (std::int64_t g = 0; g < p; ++g) {
            if (spec.is_line()) {
                const std::int64_t src = g + gens[h][0];
                if (src >= 0 && src < p) out[state.idx(h, g)] = state.at(h, src);
            } else {
                const GroupElement src =
                    compose(element_from_flat(g, spec), gens[h], spec);
                out[state.idx(h, g)] = state.at(h, flat_index(src, spec));
            }
        }
    }
    state.amplitudes() = std::move(out);
    Coin adj{coin.matrix.adjoint(), "adjoint"};
    apply_coin(state, adj);
    state.set_time(state.time() - 1);
}

Coin random_unitary_coin(std::size_t d, std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    Eigen::MatrixXcd a(d, d);
    for (std::int64_t i = 0; i < a.rows(); ++i) {
        for (std::int64_t j = 0; j < a.cols(); ++j) {
            a(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    return Coin::custom(std::move(q), "random");
}

}  // namespace

TEST_CASE("coin constructors") {
    const auto grover = Coin::grover(4);
    CHECK(grover.is_unitary());
    CHECK(std::abs(grover.matrix(0, 0) - Complex(-0.5)) < 1e-15);
    CHECK(std::abs(grover.matrix(0, 1) - Complex(0.5)) < 1e-15);

    CHECK(Coin::hadamard().is_unitary());
    CHECK(Coin::identity(3).is_unitary());

    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Constant(2, 2, 1.0);
    CHECK_THROWS_AS(Coin::custom(bad), std::invalid_argument);
}

TEST_CASE("hadamard coin on the symmetric state") {
    auto state = WalkState::symmetric_line_start(4);
    apply_coin(state, Coin::hadamard());
    const std::int64_t origin = state.line_pos_index(0);
    CHECK(std::abs(state.at(0, origin) - Complex(0.5, 0.5)) < 1e-14);
    CHECK(std::abs(state.at(1, origin) - Complex(0.5, -0.5)) < 1e-14);
}

TEST_CASE("identity coin leaves the state unchanged") {
    const auto spec = GroupSpec::finite({2, 2});
    const auto gens = GeneratorSet::unit(spec);
    auto state = WalkState::uniform_coin_start(spec, gens, {0, 0});
    const Eigen::VectorXcd before = state.amplitudes();
    apply_coin(state, Coin::identity(2));
    CHECK((state.amplitudes() - before).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("grover coin on a basis coin vector") {
    const auto spec = GroupSpec::finite({2, 2, 2, 2});
    const auto gens = GeneratorSet::unit(spec);
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(4);
    phi[0] = 1.0;
    auto state = WalkState::point_start(spec, gens, {0, 0, 0, 0}, phi);
    apply_coin(state, Coin::grover(4));
    const std::int64_t origin = 0;
    CHECK(std::abs(state.at(0, origin) - Complex(-0.5)) < 1e-14);
    for (std::size_t h = 1; h < 4; ++h) {
        CHECK(std::abs(state.at(h, origin) - Complex(0.5)) < 1e-14);
    }
}

TEST_CASE("shift moves along the chosen generator") {
    const auto spec = GroupSpec::finite({2, 2, 2, 2});
    const auto gens = GeneratorSet::unit(spec);
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(4);
    phi[0] = 1.0;
    auto state = WalkState::point_start(spec, gens, {0, 0, 0, 0}, phi);
    apply_shift(state);
    CHECK(std::abs(state.at(0, flat_index({1, 0, 0, 0}, spec)) - 1.0) < 1e-15);

    // e_j + e_j = 0: shifting twice is the identity on Z_2^n.
    apply_shift(state);
    CHECK(std::abs(state.at(0, 0) - 1.0) < 1e-15);
}

TEST_CASE("line shift moves one site") {
    const auto line = GroupSpec::line();
    const auto gens = GeneratorSet::unit(line);
    Eigen::VectorXcd phi(2);
    phi << 1.0, 0.0;
    auto state = WalkState::point_start(line, gens, {5}, phi, 8);
    apply_shift(state);
    CHECK(std::abs(state.at(0, state.line_pos_index(6)) - 1.0) < 1e-15);
}

TEST_CASE("shift orbit closes after the lcm of generator orders") {
    const auto spec = GroupSpec::finite({3, 4});
    const auto gens = GeneratorSet::unit(spec);
    std::mt19937 rng(5);
    std::normal_distribution<double> gauss;
    WalkState state(spec, gens);
    for (auto& a : state.amplitudes()) a = Complex(gauss(rng), gauss(rng));
    state.amplitudes().normalize();
    const Eigen::VectorXcd before = state.amplitudes();
    for (int i = 0; i < 12; ++i) apply_shift(state);
    CHECK((state.amplitudes() - before).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("one Hadamard step from the symmetric start") {
    auto state = WalkState::symmetric_line_start(4);
    step(state, Coin::hadamard());
    CHECK(state.time() == 1);
    CHECK(std::abs(state.at(0, state.line_pos_index(1)) - Complex(0.5, 0.5)) <
          1e-14);
    CHECK(std::abs(state.at(1, state.line_pos_index(-1)) - Complex(0.5, -0.5)) <
          1e-14);
    const auto dist = position_distribution(state);
    CHECK(std::abs(dist[state.line_pos_index(1)] - 0.5) < 1e-14);
    CHECK(std::abs(dist[state.line_pos_index(-1)] - 0.5) < 1e-14);
}

TEST_CASE("deterministic hop on Z2") {
    const auto z2 = GroupSpec::finite({2});
    const auto gens = GeneratorSet({{1}}, z2);
    Eigen::VectorXcd phi(1);
    phi << 1.0;
    auto state = WalkState::point_start(z2, gens, {0}, phi);
    step(state, Coin::identity(1));
    CHECK(std::abs(state.at(0, 1) - 1.0) < 1e-15);
}

TEST_CASE("evolve t=0 is the identity") {
    auto state = WalkState::symmetric_line_start(4);
    const Eigen::VectorXcd before = state.amplitudes();
    evolve(state, Coin::hadamard(), 0);
    CHECK((state.amplitudes() - before).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(evolve(state, Coin::hadamard(), -1), std::invalid_argument);
}

TEST_CASE("norm preservation over long evolutions") {
    std::mt19937 rng(23);
    const auto spec = GroupSpec::finite({3, 4});
    const auto gens = GeneratorSet::unit(spec);
    const auto coin = random_unitary_coin(gens.size(), rng);
    auto state = WalkState::uniform_coin_start(spec, gens, {1, 2});
    const int t = 200;
    evolve(state, coin, t);
    CHECK(std::abs(state.norm() - 1.0) < t * 1e-13);
}

TEST_CASE("line support stays within [-t, t]") {
    auto state = WalkState::symmetric_line_start(64);
    evolve(state, Coin::hadamard(), 17);
    const auto dist = position_distribution(state);
    for (std::int64_t n = -64; n <= 64; ++n) {
        if (std::abs(n) > 17) CHECK(dist[state.line_pos_index(n)] == 0.0);
    }
    CHECK(std::abs(dist.sum() - 1.0) < 1e-10);
}

TEST_CASE("line window overflow is an error") {
    auto state = WalkState::symmetric_line_start(2);
    CHECK_THROWS_AS(evolve(state, Coin::hadamard(), 3), std::out_of_range);
}

TEST_CASE("reversibility") {
    std::mt19937 rng(31);
    const auto spec = GroupSpec::finite({2, 2, 2});
    const auto gens = GeneratorSet::unit(spec);
    const auto coin = random_unitary_coin(gens.size(), rng);
    auto state = WalkState::uniform_coin_start(spec, gens, {0, 0, 0});
    const Eigen::VectorXcd initial = state.amplitudes();
    const int t = 200;
    evolve(state, coin, t);
    for (int i = 0; i < t; ++i) inverse_step(state, coin);
    CHECK((state.amplitudes() - initial).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(state.time() == 0);
}

TEST_CASE("position distribution at t=0 is a delta") {
    const auto spec = GroupSpec::finite({5});
    const auto gens = GeneratorSet::unit(spec);
    auto state = WalkState::uniform_coin_start(spec, gens, {3});
    const auto dist = position_distribution(state);
    CHECK(std::abs(dist[3] - 1.0) < 1e-14);
    CHECK(std::abs(dist.sum() - 1.0) < 1e-14);
}

TEST_CASE("Hadamard walk at t=100 peaks near t/sqrt(2)") {
    auto state = WalkState::symmetric_line_start(128);
    evolve(state, Coin::hadamard(), 100);
    const auto dist = position_distribution(state);
    CHECK(std::abs(dist.sum() - 1.0) < 1e-10);
    std::int64_t peak = 0;
    double best = 0.0;
    for (std::int64_t n = -128; n <= 128; ++n) {
        if (dist[state.line_pos_index(n)] > best) {
            best = dist[state.line_pos_index(n)];
            peak = n;
        }
    }
    CHECK(std::abs(std::abs(peak) - 100.0 / std::sqrt(2.0)) <= 3.0);
}
