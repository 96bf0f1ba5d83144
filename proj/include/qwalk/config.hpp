#pragma once

#include <string>

#include <Eigen/Dense>

#include "qwalk/group.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// "Z2^10", "Z8", "Z3xZ4", "line" (case-insensitive prefix Z).
GroupSpec parse_group(const std::string& text);

/// "unit" or an explicit tuple list "1,0;0,1;..." (inverses must be listed).
GeneratorSet parse_gens(const std::string& text, const GroupSpec& spec);

/// "grover", "hadamard", "identity", or "@file.json" holding a row-major
/// [[re, im], ...] nested array of shape degree x degree x 2.
Coin parse_coin(const std::string& text, std::size_t degree);

/// "0" = identity, "ones" = all-ones tuple, or an explicit comma tuple.
GroupElement parse_vertex(const std::string& text, const GroupSpec& spec);

/// Initial coin state: "default" (symmetric on the line, equal
/// superposition otherwise), "symmetric", "uniform", "corner-symmetric",
/// "label:j", or a comma list of complex amplitudes "a+bi" (normalized).
Eigen::VectorXcd parse_init(const std::string& text, const GroupSpec& spec,
                            const GeneratorSet& gens);

std::string group_to_string(const GroupSpec& spec);

}  // namespace qwalk
