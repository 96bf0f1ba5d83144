#include "qwalk/config.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qwalk/hitting.hpp"

namespace qwalk {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, delim)) out.push_back(trim(item));
    return out;
}

std::int64_t parse_int(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(ctx + ": not an integer: '" + s + "'");
    }
}

// "a", "a+bi", "bi", "i", "-i", ...
Complex parse_complex(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() == 'i' || s.back() == 'I') {
        s.pop_back();
        // Find the split between real and imaginary parts.
        std::size_t split_pos = std::string::npos;
        for (std::size_t i = s.size(); i-- > 1;) {
            if ((s[i] == '+' || s[i] == '-') &&
                std::tolower(s[i - 1]) != 'e') {
                split_pos = i;
                break;
            }
        }
        std::string im = split_pos == std::string::npos ? s : s.substr(split_pos);
        std::string re = split_pos == std::string::npos ? "" : s.substr(0, split_pos);
        if (im.empty() || im == "+") im = "1";
        if (im == "-") im = "-1";
        return Complex(re.empty() ? 0.0 : std::stod(re), std::stod(im));
    }
    return Complex(std::stod(s), 0.0);
}

}  // namespace

GroupSpec parse_group(const std::string& text) {
    const std::string s = trim(text);
    if (s == "line") return GroupSpec::line();
    std::vector<std::int64_t> moduli;
    for (const auto& factor : split(s, 'x')) {
        if (factor.size() < 2 || (factor[0] != 'Z' && factor[0] != 'z')) {
            throw std::invalid_argument(
                "bad group spec '" + text +
                "' (expected e.g. Z2^10, Z8, Z3xZ4, line)");
        }
        const auto caret = factor.find('^');
        const std::int64_t n =
            parse_int(factor.substr(1, caret == std::string::npos
                                           ? std::string::npos
                                           : caret - 1),
                      "group modulus");
        std::int64_t power = 1;
        if (caret != std::string::npos) {
            power = parse_int(factor.substr(caret + 1), "group power");
            if (power < 1) throw std::invalid_argument("group power must be >= 1");
        }
        for (std::int64_t i = 0; i < power; ++i) moduli.push_back(n);
    }
    return GroupSpec::finite(std::move(moduli));
}

GeneratorSet parse_gens(const std::string& text, const GroupSpec& spec) {
    const std::string s = trim(text);
    if (s.empty() || s == "unit") return GeneratorSet::unit(spec);
    std::vector<GroupElement> elems;
    for (const auto& tuple : split(s, ';')) {
        GroupElement g;
        for (const auto& c : split(tuple, ',')) {
            g.push_back(parse_int(c, "generator component"));
        }
        if (g.size() != spec.rank()) {
            throw std::invalid_argument("generator '" + tuple +
                                        "' has wrong rank");
        }
        elems.push_back(std::move(g));
    }
    return GeneratorSet(std::move(elems), spec);
}

Coin parse_coin(const std::string& text, std::size_t degree) {
    const std::string s = trim(text);
    if (s == "grover") return Coin::grover(degree);
    if (s == "hadamard") {
        if (degree != 2) {
            throw std::invalid_argument("hadamard coin needs |S| = 2");
        }
        return Coin::hadamard();
    }
    if (s == "identity") return Coin::identity(degree);
    if (!s.empty() && s[0] == '@') {
        std::ifstream in(s.substr(1));
        if (!in) throw std::invalid_argument("cannot open coin file " + s.substr(1));
        nlohmann::json j;
        in >> j;
        const auto n = j.size();
        if (n != degree) {
            throw std::invalid_argument("coin file dimension != |S|");
        }
        Eigen::MatrixXcd m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (j[r].size() != n) {
                throw std::invalid_argument("coin file is not square");
            }
            for (std::size_t c = 0; c < n; ++c) {
                m(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)) =
                    Complex(j[r][c][0].get<double>(), j[r][c][1].get<double>());
            }
        }
        return Coin::custom(std::move(m));
    }
    throw std::invalid_argument("unknown coin '" + text + "'");
}

GroupElement parse_vertex(const std::string& text, const GroupSpec& spec) {
    const std::string s = trim(text);
    if (s == "ones") {
        if (spec.is_line()) return {1};
        return GroupElement(spec.rank(), 1);
    }
    GroupElement g;
    for (const auto& c : split(s, ',')) {
        g.push_back(parse_int(c, "vertex component"));
    }
    if (g.size() == 1 && spec.rank() > 1 && g[0] == 0) {
        return identity_element(spec);  // "0" addresses the identity
    }
    if (g.size() != spec.rank()) {
        throw std::invalid_argument("vertex '" + text + "' has wrong rank");
    }
    return spec.is_line() ? g : reduce(std::move(g), spec);
}

Eigen::VectorXcd parse_init(const std::string& text, const GroupSpec& spec,
                            const GeneratorSet& gens) {
    const std::string s = trim(text);
    const auto d = static_cast<std::int64_t>(gens.size());
    if (s.empty() || s == "default" ||
        (s == "symmetric" && !spec.is_line())) {
        return default_coin_state(spec, gens);
    }
    if (s == "uniform" || s == "corner-symmetric") {
        return Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
    }
    if (s == "symmetric") {
        Eigen::VectorXcd phi(2);
        const double r = 1.0 / std::sqrt(2.0);
        phi << Complex(r, 0.0), Complex(0.0, r);
        return phi;
    }
    if (s.rfind("label:", 0) == 0) {
        const std::int64_t j = parse_int(s.substr(6), "coin label");
        if (j < 0 || j >= d) throw std::invalid_argument("coin label out of range");
        Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(d);
        phi[j] = 1.0;
        return phi;
    }
    const auto parts = split(s, ',');
    if (static_cast<std::int64_t>(parts.size()) != d) {
        throw std::invalid_argument("initial coin state has wrong dimension");
    }
    Eigen::VectorXcd phi(d);
    for (std::int64_t i = 0; i < d; ++i) {
        phi[i] = parse_complex(parts[static_cast<std::size_t>(i)]);
    }
    const double nrm = phi.norm();
    if (nrm < 1e-12) throw std::invalid_argument("initial coin state is zero");
    return phi / nrm;
}

std::string group_to_string(const GroupSpec& spec) {
    if (spec.is_line()) return "line";
    std::ostringstream out;
    for (std::size_t j = 0; j < spec.moduli.size(); ++j) {
        if (j) out << 'x';
        out << 'Z' << spec.moduli[j];
    }
    return out.str();
}

}  // namespace qwalk
