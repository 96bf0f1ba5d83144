#include "qwalk/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_rank(const GroupElement& g, const GroupSpec& spec,
                const char* what) {
    if (g.size() != spec.rank()) {
        throw std::invalid_argument(std::string(what) +
                                    ": element rank does not match group spec");
    }
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

// |G| when it is small enough to enumerate, -1 otherwise.
std::int64_t enumerable_order(const GroupSpec& spec, std::int64_t cap) {
    std::int64_t order = 1;
    for (auto n : spec.moduli) {
        if (order > cap / n) return -1;
        order *= n;
    }
    return order;
}

// Each generator moves a single axis by +-1 and every axis is covered.
// Such sets generate G outright, and (being inverse-closed) carry the
// per-axis cyclic L1 metric.
bool unit_style(const std::vector<GroupElement>& elements,
                const GroupSpec& spec) {
    std::vector<char> covered(spec.rank(), 0);
    for (const auto& h : elements) {
        int axis = -1;
        for (std::size_t j = 0; j < h.size(); ++j) {
            if (h[j] == 0) continue;
            if (axis >= 0) return false;
            if (h[j] != 1 && h[j] != spec.moduli[j] - 1) return false;
            axis = static_cast<int>(j);
        }
        if (axis < 0) return false;
        covered[static_cast<std::size_t>(axis)] = 1;
    }
    return std::all_of(covered.begin(), covered.end(),
                       [](char c) { return c != 0; });
}

constexpr std::int64_t kEnumerationCap = std::int64_t{1} << 20;

}  // namespace

GroupSpec GroupSpec::finite(std::vector<std::int64_t> moduli) {
    if (moduli.empty()) {
        throw std::invalid_argument("finite group needs at least one modulus");
    }
    for (auto n : moduli) {
        if (n < 2) {
            throw std::invalid_argument("every modulus N_j must be >= 2");
        }
    }
    GroupSpec spec;
    spec.kind = Kind::FiniteAbelian;
    spec.moduli = std::move(moduli);
    return spec;
}

GroupSpec GroupSpec::line() {
    GroupSpec spec;
    spec.kind = Kind::Line;
    return spec;
}

std::int64_t GroupSpec::order() const {
    if (is_line()) {
        throw std::logic_error("the line has no finite order");
    }
    std::int64_t order = 1;
    for (auto n : moduli) {
        if (order > std::numeric_limits<std::int64_t>::max() / n) {
            throw std::overflow_error("|G| overflows the index range");
        }
        order *= n;
    }
    return order;
}

GroupElement identity_element(const GroupSpec& spec) {
    return GroupElement(spec.rank(), 0);
}

GroupElement reduce(GroupElement g, const GroupSpec& spec) {
    check_rank(g, spec, "reduce");
    if (!spec.is_line()) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            g[j] = mod_reduce(g[j], spec.moduli[j]);
        }
    }
    return g;
}

GroupElement compose(const GroupElement& a, const GroupElement& b,
                     const GroupSpec& spec) {
    check_rank(a, spec, "compose");
    check_rank(b, spec, "compose");
    GroupElement out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        out[j] = a[j] + b[j];
        if (!spec.is_line()) out[j] = mod_reduce(out[j], spec.moduli[j]);
    }
    return out;
}

GroupElement inverse(const GroupElement& g, const GroupSpec& spec) {
    check_rank(g, spec, "inverse");
    GroupElement out(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        out[j] = spec.is_line() ? -g[j] : mod_reduce(-g[j], spec.moduli[j]);
    }
    return out;
}

std::int64_t flat_index(const GroupElement& g, const GroupSpec& spec) {
    if (spec.is_line()) {
        throw std::logic_error("flat_index: line positions are unbounded");
    }
    check_rank(g, spec, "flat_index");
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        idx = idx * spec.moduli[j] + mod_reduce(g[j], spec.moduli[j]);
    }
    return idx;
}

GroupElement element_from_flat(std::int64_t index, const GroupSpec& spec) {
    if (spec.is_line()) {
        throw std::logic_error("element_from_flat: line positions are unbounded");
    }
    if (index < 0 || index >= spec.order()) {
        throw std::out_of_range("element_from_flat: index out of range");
    }
    GroupElement g(spec.rank());
    for (std::size_t j = spec.rank(); j-- > 0;) {
        g[j] = index % spec.moduli[j];
        index /= spec.moduli[j];
    }
    return g;
}

Complex character(const GroupElement& g, const GroupElement& h,
                  const GroupSpec& spec) {
    if (spec.is_line()) {
        throw std::invalid_argument("character: finite groups only");
    }
    check_rank(g, spec, "character");
    check_rank(h, spec, "character");
    double phase = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const std::int64_t n = spec.moduli[j];
        phase += static_cast<double>(mod_reduce(g[j] * h[j], n)) / n;
    }
    return std::polar(1.0, kTwoPi * phase);
}

GeneratorSet::GeneratorSet(std::vector<GroupElement> elements,
                           const GroupSpec& spec)
    : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw std::invalid_argument("generating set is empty");
    }
    const GroupElement id = identity_element(spec);
    std::set<GroupElement> seen;
    for (auto& h : elements_) {
        h = reduce(h, spec);
        if (h == id) {
            throw std::invalid_argument("generating set contains the identity");
        }
        if (!seen.insert(h).second) {
            throw std::invalid_argument("duplicate generator");
        }
    }
    inverse_label_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const GroupElement inv = inverse(elements_[i], spec);
        auto it = std::find(elements_.begin(), elements_.end(), inv);
        if (it == elements_.end()) {
            throw std::invalid_argument(
                "generating set is not symmetric: missing inverse of " +
                to_string(elements_[i]));
        }
        inverse_label_[i] = static_cast<std::size_t>(it - elements_.begin());
    }
    if (spec.is_line()) {
        std::int64_t g = 0;
        for (const auto& h : elements_) g = std::gcd(g, std::abs(h[0]));
        if (g != 1) {
            throw std::invalid_argument("generating set does not generate Z");
        }
        return;
    }
    // BFS closure must reach all of G; groups too large to enumerate are
    // accepted only with structurally obvious generating sets.
    const std::int64_t order = enumerable_order(spec, kEnumerationCap);
    if (order < 0) {
        if (!unit_style(elements_, spec)) {
            throw std::invalid_argument(
                "group too large to verify generation by enumeration");
        }
        return;
    }
    std::vector<char> visited(static_cast<std::size_t>(order), 0);
    std::deque<GroupElement> queue{id};
    visited[static_cast<std::size_t>(flat_index(id, spec))] = 1;
    std::int64_t reached = 1;
    while (!queue.empty()) {
        const GroupElement g = queue.front();
        queue.pop_front();
        for (const auto& h : elements_) {
            const GroupElement next = compose(g, h, spec);
            auto& v = visited[static_cast<std::size_t>(flat_index(next, spec))];
            if (!v) {
                v = 1;
                ++reached;
                queue.push_back(next);
            }
        }
    }
    if (reached != order) {
        throw std::invalid_argument("generating set does not generate G");
    }
}

GeneratorSet GeneratorSet::unit(const GroupSpec& spec) {
    std::vector<GroupElement> elems;
    if (spec.is_line()) {
        elems.push_back({1});
        elems.push_back({-1});
        return GeneratorSet(std::move(elems), spec);
    }
    for (std::size_t j = 0; j < spec.rank(); ++j) {
        GroupElement e(spec.rank(), 0);
        e[j] = 1;
        elems.push_back(e);
        if (spec.moduli[j] > 2) {
            e[j] = spec.moduli[j] - 1;
            elems.push_back(e);
        }
    }
    return GeneratorSet(std::move(elems), spec);
}

Eigen::VectorXcd fourier_transform(const Eigen::VectorXcd& amplitudes,
                                   const GroupSpec& spec,
                                   FourierDirection direction) {
    if (spec.is_line()) {
        throw std::invalid_argument("fourier_transform: finite groups only");
    }
    const std::int64_t order = spec.order();
    if (amplitudes.size() != order) {
        throw std::invalid_argument("fourier_transform: length mismatch");
    }
    const double sign = direction == FourierDirection::Forward ? 1.0 : -1.0;

    // Separable transform, one cyclic factor at a time.
    Eigen::VectorXcd work = amplitudes;
    Eigen::VectorXcd scratch;
    std::unordered_map<std::int64_t, Eigen::MatrixXcd> dft_cache;
    std::int64_t stride = 1;
    for (std::size_t j = spec.rank(); j-- > 0;) {
        const std::int64_t n = spec.moduli[j];
        auto it = dft_cache.find(n);
        if (it == dft_cache.end()) {
            Eigen::MatrixXcd d(n, n);
            const double scale = 1.0 / std::sqrt(static_cast<double>(n));
            for (std::int64_t a = 0; a < n; ++a) {
                for (std::int64_t b = 0; b < n; ++b) {
                    d(a, b) = scale * std::polar(1.0, sign * kTwoPi *
                                                          ((a * b) % n) / n);
                }
            }
            it = dft_cache.emplace(n, std::move(d)).first;
        }
        const Eigen::MatrixXcd& d = it->second;
        scratch.resize(order);
        const std::int64_t block = n * stride;
        for (std::int64_t base = 0; base < order; base += block) {
            for (std::int64_t s = 0; s < stride; ++s) {
                for (std::int64_t a = 0; a < n; ++a) {
                    Complex acc = 0.0;
                    for (std::int64_t b = 0; b < n; ++b) {
                        acc += d(a, b) * work[base + b * stride + s];
                    }
                    scratch[base + a * stride + s] = acc;
                }
            }
        }
        work.swap(scratch);
        stride *= n;
    }
    return work;
}

std::int64_t graph_distance(const GroupElement& a, const GroupElement& b,
                            const GeneratorSet& gens, const GroupSpec& spec) {
    if (spec.is_line()) {
        // Unit generators step one site; the word metric is |b - a|.
        return std::abs(b.at(0) - a.at(0));
    }
    const GroupElement start = reduce(a, spec);
    const GroupElement goal = reduce(b, spec);
    if (start == goal) return 0;
    if (unit_style(gens.elements(), spec)) {
        std::int64_t d = 0;
        for (std::size_t j = 0; j < spec.rank(); ++j) {
            const std::int64_t n = spec.moduli[j];
            const std::int64_t delta = mod_reduce(goal[j] - start[j], n);
            d += std::min(delta, n - delta);
        }
        return d;
    }
    const std::int64_t order = spec.order();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(order), -1);
    std::deque<GroupElement> queue{start};
    dist[static_cast<std::size_t>(flat_index(start, spec))] = 0;
    const std::int64_t goal_idx = flat_index(goal, spec);
    while (!queue.empty()) {
        const GroupElement g = queue.front();
        queue.pop_front();
        const std::int64_t dg = dist[static_cast<std::size_t>(flat_index(g, spec))];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const GroupElement next = compose(g, gens[i], spec);
            auto& dn = dist[static_cast<std::size_t>(flat_index(next, spec))];
            if (dn < 0) {
                dn = dg + 1;
                if (flat_index(next, spec) == goal_idx) return dn;
                queue.push_back(next);
            }
        }
    }
    throw std::invalid_argument("graph_distance: target unreachable");
}

std::string to_string(const GroupElement& g) {
    std::ostringstream out;
    out << '(';
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (j) out << ',';
        out << g[j];
    }
    out << ')';
    return out.str();
}

}  // namespace qwalk
