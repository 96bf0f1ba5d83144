#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;

/// Position space of the walk: a finite Abelian group
/// Z_{N1} x ... x Z_{Nn}, or the integer line.
struct GroupSpec {
    enum class Kind { FiniteAbelian, Line };

    Kind kind = Kind::FiniteAbelian;
    std::vector<std::int64_t> moduli;  // empty for Line

    static GroupSpec finite(std::vector<std::int64_t> moduli);
    static GroupSpec line();

    bool is_line() const { return kind == Kind::Line; }
    std::size_t rank() const { return is_line() ? 1 : moduli.size(); }

    /// |G|; throws for the line.
    std::int64_t order() const;
};

/// Element as an integer tuple, reduced mod N_j for finite groups.
/// For the line a single signed integer.
using GroupElement = std::vector<std::int64_t>;

GroupElement identity_element(const GroupSpec& spec);
GroupElement reduce(GroupElement g, const GroupSpec& spec);
GroupElement compose(const GroupElement& a, const GroupElement& b,
                     const GroupSpec& spec);
GroupElement inverse(const GroupElement& g, const GroupSpec& spec);

/// Mixed-radix flat index: g <-> sum_j g_j * prod_{l>j} N_l.
std::int64_t flat_index(const GroupElement& g, const GroupSpec& spec);
GroupElement element_from_flat(std::int64_t index, const GroupSpec& spec);

/// chi_g(h) = prod_j omega_{N_j}^{g_j h_j}, omega_N = exp(2 pi i / N).
/// Finite groups only.
Complex character(const GroupElement& g, const GroupElement& h,
                  const GroupSpec& spec);

/// Symmetric generating set with index <-> element bijection.
/// Construction validates: no identity, no duplicates, closed under
/// inverse, and (for finite groups) generation of all of G.
class GeneratorSet {
public:
    GeneratorSet(std::vector<GroupElement> elements, const GroupSpec& spec);

    /// The +/-e_j basis, reduced to e_j when N_j = 2.
    /// Line: {+1, -1} in that order.
    static GeneratorSet unit(const GroupSpec& spec);

    std::size_t size() const { return elements_.size(); }
    const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<GroupElement>& elements() const { return elements_; }

    /// Label of h^{-1} given the label of h.
    std::size_t inverse_label(std::size_t i) const { return inverse_label_[i]; }

private:
    std::vector<GroupElement> elements_;
    std::vector<std::size_t> inverse_label_;
};

enum class FourierDirection { Forward, Inverse };

/// F_G = |G|^{-1/2} sum_{g,h} chi_g(h) |g><h|; inverse is the adjoint.
Eigen::VectorXcd fourier_transform(const Eigen::VectorXcd& amplitudes,
                                   const GroupSpec& spec,
                                   FourierDirection direction);

/// Word-metric distance on the Cayley graph (BFS over generator moves).
/// Finite groups only; throws if b is unreachable from a.
std::int64_t graph_distance(const GroupElement& a, const GroupElement& b,
                            const GeneratorSet& gens, const GroupSpec& spec);

std::string to_string(const GroupElement& g);

}  // namespace qwalk
