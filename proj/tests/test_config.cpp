#include <doctest.h>

#include <cmath>

#include "qwalk/config.hpp"

using namespace qwalk;

TEST_CASE("group spec strings") {
    const auto cube = parse_group("Z2^10");
    CHECK(cube.moduli == std::vector<std::int64_t>(10, 2));

    const auto z8 = parse_group("Z8");
    CHECK(z8.moduli == std::vector<std::int64_t>{8});

    const auto mixed = parse_group("Z3xZ4");
    CHECK(mixed.moduli == std::vector<std::int64_t>{3, 4});

    CHECK(parse_group("line").is_line());
    CHECK_THROWS_AS(parse_group("Q8"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group("Z1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group("Z2^0"), std::invalid_argument);

    CHECK(group_to_string(mixed) == "Z3xZ4");
    CHECK(group_to_string(GroupSpec::line()) == "line");
}

TEST_CASE("generator strings") {
    const auto spec = parse_group("Z3xZ4");
    const auto unit = parse_gens("unit", spec);
    CHECK(unit.size() == 4);

    const auto custom = parse_gens("1,0; 2,0; 0,1; 0,3", spec);
    CHECK(custom.size() == 4);
    CHECK_THROWS_AS(parse_gens("1,0", spec), std::invalid_argument);
}

TEST_CASE("coin strings") {
    CHECK(parse_coin("grover", 4).name == "grover");
    CHECK(parse_coin("hadamard", 2).name == "hadamard");
    CHECK_THROWS_AS(parse_coin("hadamard", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_coin("nonsense", 2), std::invalid_argument);
}

TEST_CASE("vertex strings") {
    const auto spec = parse_group("Z2^4");
    CHECK(parse_vertex("0", spec) == GroupElement(4, 0));
    CHECK(parse_vertex("ones", spec) == GroupElement(4, 1));
    CHECK(parse_vertex("1,0,1,0", spec) == GroupElement{1, 0, 1, 0});
    CHECK_THROWS_AS(parse_vertex("1,0", spec), std::invalid_argument);

    const auto line = GroupSpec::line();
    CHECK(parse_vertex("-7", line) == GroupElement{-7});
}

TEST_CASE("initial coin states") {
    const auto line = GroupSpec::line();
    const auto line_gens = GeneratorSet::unit(line);
    const auto sym = parse_init("symmetric", line, line_gens);
    CHECK(std::abs(sym[0] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
    CHECK(std::abs(sym[1] - Complex(0.0, 1.0 / std::sqrt(2.0))) < 1e-15);

    const auto cube = parse_group("Z2^4");
    const auto cube_gens = GeneratorSet::unit(cube);
    const auto uniform = parse_init("corner-symmetric", cube, cube_gens);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(uniform[i] - 0.5) < 1e-15);

    const auto label = parse_init("label:2", cube, cube_gens);
    CHECK(std::abs(label[2] - 1.0) < 1e-15);
    CHECK_THROWS_AS(parse_init("label:9", cube, cube_gens),
                    std::invalid_argument);

    const auto literal = parse_init("1, i", line, line_gens);
    CHECK(std::abs(literal[0] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-12);
    CHECK(std::abs(literal[1] - Complex(0.0, 1.0 / std::sqrt(2.0))) < 1e-12);

    const auto mixed = parse_init("0.5-0.5i, -1", line, line_gens);
    CHECK(std::abs(mixed.norm() - 1.0) < 1e-12);
}
