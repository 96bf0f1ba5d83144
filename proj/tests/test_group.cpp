#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qwalk/group.hpp"

using namespace qwalk;

TEST_CASE("compose reduces componentwise") {
    const auto z2z2 = GroupSpec::finite({2, 2});
    CHECK(compose({1, 1}, {1, 0}, z2z2) == GroupElement{0, 1});

    const auto z5 = GroupSpec::finite({5});
    CHECK(compose({3}, {4}, z5) == GroupElement{2});
    CHECK(compose({3}, identity_element(z5), z5) == GroupElement{3});

    const auto line = GroupSpec::line();
    CHECK(compose({5}, {-7}, line) == GroupElement{-2});

    CHECK_THROWS_AS(compose({1, 2}, {1}, z2z2), std::invalid_argument);
}

TEST_CASE("inverse composes to the identity") {
    const auto spec = GroupSpec::finite({3, 4, 5});
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        GroupElement g;
        for (auto n : spec.moduli) {
            g.push_back(std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng));
        }
        CHECK(compose(g, inverse(g, spec), spec) == identity_element(spec));
    }
}

TEST_CASE("flat index round trip") {
    const auto spec = GroupSpec::finite({3, 4});
    for (std::int64_t i = 0; i < spec.order(); ++i) {
        CHECK(flat_index(element_from_flat(i, spec), spec) == i);
    }
    // mixed radix, last axis fastest
    CHECK(flat_index({1, 2}, spec) == 6);
}

TEST_CASE("group spec validation") {
    CHECK_THROWS_AS(GroupSpec::finite({1}), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::finite({}), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::line().order(), std::logic_error);
}

TEST_CASE("character on Z2^n is (-1)^{x_j}") {
    const auto spec = GroupSpec::finite({2, 2, 2});
    for (std::size_t j = 0; j < 3; ++j) {
        GroupElement e(3, 0);
        e[j] = 1;
        for (std::int64_t i = 0; i < spec.order(); ++i) {
            const GroupElement x = element_from_flat(i, spec);
            const double expected = x[j] ? -1.0 : 1.0;
            CHECK(std::abs(character(x, e, spec) - Complex(expected)) < 1e-12);
        }
    }
}

TEST_CASE("character special values") {
    const auto z4 = GroupSpec::finite({4});
    CHECK(std::abs(character({1}, {1}, z4) - Complex(0, 1)) < 1e-12);

    const auto spec = GroupSpec::finite({3, 4});
    for (std::int64_t i = 0; i < spec.order(); ++i) {
        const GroupElement h = element_from_flat(i, spec);
        CHECK(std::abs(character(identity_element(spec), h, spec) - 1.0) < 1e-12);
        CHECK(std::abs(std::abs(character(h, h, spec)) - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(character({0}, {0}, GroupSpec::line()), std::invalid_argument);
}

TEST_CASE("character multiplicativity") {
    const auto spec = GroupSpec::finite({4, 3});
    std::mt19937 rng(11);
    auto random_element = [&] {
        GroupElement g;
        for (auto n : spec.moduli) {
            g.push_back(std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng));
        }
        return g;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_element();
        const auto h1 = random_element();
        const auto h2 = random_element();
        const auto lhs = character(g, compose(h1, h2, spec), spec);
        const auto rhs = character(g, h1, spec) * character(g, h2, spec);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("character orthogonality") {
    const auto spec = GroupSpec::finite({3, 4});
    const std::int64_t order = spec.order();
    for (std::int64_t a = 0; a < order; ++a) {
        for (std::int64_t b = 0; b < order; ++b) {
            Complex sum = 0.0;
            for (std::int64_t i = 0; i < order; ++i) {
                const GroupElement h = element_from_flat(i, spec);
                sum += character(element_from_flat(a, spec), h, spec) *
                       std::conj(character(element_from_flat(b, spec), h, spec));
            }
            const double expected = a == b ? static_cast<double>(order) : 0.0;
            CHECK(std::abs(sum - expected) < 1e-10);
        }
    }
}

TEST_CASE("fourier transform examples") {
    const auto z2 = GroupSpec::finite({2});
    Eigen::VectorXcd delta(2);
    delta << 1.0, 0.0;
    const auto plus = fourier_transform(delta, z2, FourierDirection::Forward);
    CHECK(std::abs(plus[0] - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(plus[1] - 1.0 / std::sqrt(2.0)) < 1e-14);

    // Uniform vector -> delta at the identity.
    const auto spec = GroupSpec::finite({3, 4});
    const std::int64_t order = spec.order();
    Eigen::VectorXcd uniform =
        Eigen::VectorXcd::Constant(order, 1.0 / std::sqrt(double(order)));
    const auto hat = fourier_transform(uniform, spec, FourierDirection::Inverse);
    CHECK(std::abs(hat[0] - 1.0) < 1e-12);
    for (std::int64_t i = 1; i < order; ++i) CHECK(std::abs(hat[i]) < 1e-12);

    CHECK_THROWS_AS(fourier_transform(delta, spec, FourierDirection::Forward),
                    std::invalid_argument);
}

TEST_CASE("fourier round trip and unitarity") {
    const auto spec = GroupSpec::finite({3, 4});
    std::mt19937 rng(3);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXcd v(spec.order());
        for (auto& x : v) x = Complex(gauss(rng), gauss(rng));
        const auto fwd = fourier_transform(v, spec, FourierDirection::Forward);
        CHECK(std::abs(fwd.norm() - v.norm()) < 1e-12 * v.norm());
        const auto back = fourier_transform(fwd, spec, FourierDirection::Inverse);
        CHECK((back - v).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("fourier transform agrees with the dense matrix") {
    const auto spec = GroupSpec::finite({2, 3, 2});
    const std::int64_t order = spec.order();
    Eigen::MatrixXcd dense(order, order);
    for (std::int64_t g = 0; g < order; ++g) {
        for (std::int64_t h = 0; h < order; ++h) {
            dense(g, h) = character(element_from_flat(g, spec),
                                    element_from_flat(h, spec), spec) /
                          std::sqrt(static_cast<double>(order));
        }
    }
    std::mt19937 rng(17);
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd v(order);
    for (auto& x : v) x = Complex(gauss(rng), gauss(rng));
    const auto fast = fourier_transform(v, spec, FourierDirection::Forward);
    CHECK((fast - dense * v).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("generator set validation") {
    const auto z4 = GroupSpec::finite({4});
    CHECK_THROWS_AS(GeneratorSet({{0}}, z4), std::invalid_argument);     // identity
    CHECK_THROWS_AS(GeneratorSet({{1}}, z4), std::invalid_argument);     // not symmetric
    CHECK_THROWS_AS(GeneratorSet({{1}, {3}, {1}}, z4), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSet({{2}}, z4), std::invalid_argument);     // <2> != Z4
    CHECK_NOTHROW(GeneratorSet({{1}, {3}}, z4));
    CHECK_THROWS_AS(GeneratorSet({{2}}, GroupSpec::finite({2, 2})),
                    std::invalid_argument);  // wrong rank
    CHECK_THROWS_AS(GeneratorSet({{2}}, GroupSpec::line()), std::invalid_argument);

    const auto unit = GeneratorSet::unit(z4);
    REQUIRE(unit.size() == 2);
    CHECK(unit[0] == GroupElement{1});
    CHECK(unit[1] == GroupElement{3});
    CHECK(unit.inverse_label(0) == 1);

    const auto cube = GeneratorSet::unit(GroupSpec::finite({2, 2, 2}));
    CHECK(cube.size() == 3);
    CHECK(cube.inverse_label(1) == 1);  // self-inverse when N_j = 2
}

TEST_CASE("graph distance on the hypercube is Hamming distance") {
    const auto spec = GroupSpec::finite({2, 2, 2, 2});
    const auto gens = GeneratorSet::unit(spec);
    for (std::int64_t a = 0; a < spec.order(); ++a) {
        for (std::int64_t b = 0; b < spec.order(); ++b) {
            const auto ea = element_from_flat(a, spec);
            const auto eb = element_from_flat(b, spec);
            std::int64_t hamming = 0;
            for (std::size_t j = 0; j < 4; ++j) hamming += ea[j] != eb[j];
            CHECK(graph_distance(ea, eb, gens, spec) == hamming);
        }
    }
    CHECK(graph_distance({0, 0, 0, 0}, {1, 1, 1, 1}, gens, spec) == 4);
}

TEST_CASE("graph distance on the cycle") {
    const auto z8 = GroupSpec::finite({8});
    const auto gens = GeneratorSet::unit(z8);
    CHECK(graph_distance({0}, {5}, gens, z8) == 3);  // min(5, 8-5)
    CHECK(graph_distance({2}, {2}, gens, z8) == 0);
    for (std::int64_t a = 0; a < 8; ++a) {
        for (std::int64_t b = 0; b < 8; ++b) {
            const std::int64_t direct = std::abs(a - b);
            CHECK(graph_distance({a}, {b}, gens, z8) ==
                  std::min(direct, 8 - direct));
        }
    }
}

TEST_CASE("graph distance is a metric") {
    const auto spec = GroupSpec::finite({3, 4});
    const auto gens =
        GeneratorSet({{1, 0}, {2, 0}, {0, 1}, {0, 3}}, spec);
    const std::int64_t order = spec.order();
    std::vector<std::vector<std::int64_t>> d(
        order, std::vector<std::int64_t>(order));
    for (std::int64_t a = 0; a < order; ++a) {
        for (std::int64_t b = 0; b < order; ++b) {
            d[a][b] = graph_distance(element_from_flat(a, spec),
                                     element_from_flat(b, spec), gens, spec);
        }
    }
    for (std::int64_t a = 0; a < order; ++a) {
        CHECK(d[a][a] == 0);
        for (std::int64_t b = 0; b < order; ++b) {
            CHECK(d[a][b] == d[b][a]);
            for (std::int64_t c = 0; c < order; ++c) {
                CHECK(d[a][c] <= d[a][b] + d[b][c]);
            }
        }
    }
}

TEST_CASE("line graph distance") {
    const auto line = GroupSpec::line();
    const auto gens = GeneratorSet::unit(line);
    CHECK(graph_distance({0}, {42}, gens, line) == 42);
    CHECK(graph_distance({-3}, {4}, gens, line) == 7);
}
