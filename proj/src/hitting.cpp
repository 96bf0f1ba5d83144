#include "qwalk/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qwalk {

std::string to_string(HittingKind kind) {
    switch (kind) {
        case HittingKind::OneShot: return "one-shot";
        case HittingKind::Concurrent: return "concurrent";
        case HittingKind::Average: return "average";
        case HittingKind::GroupVelocity: return "gv";
    }
    return "unknown";
}

namespace {

std::int64_t target_storage_index(const WalkState& state,
                                  const GroupElement& target) {
    if (state.spec().is_line()) return state.line_pos_index(target.at(0));
    return flat_index(target, state.spec());
}

std::int64_t line_window_for(const GroupElement& g1, const GroupElement& g2,
                             int t_max) {
    return std::max(std::abs(g1.at(0)), std::abs(g2.at(0))) + t_max + 1;
}

WalkState start_state(const GroupElement& g1, const Eigen::VectorXcd& phi0,
                      const GroupSpec& spec, const GeneratorSet& gens,
                      std::int64_t line_window) {
    return WalkState::point_start(spec, gens, g1, phi0,
                                  spec.is_line() ? line_window : 0);
}

double probability_at(const WalkState& state, std::int64_t g) {
    double p = 0.0;
    for (std::size_t h = 0; h < state.coin_dim(); ++h) {
        p += std::norm(state.at(h, g));
    }
    return p;
}

}  // namespace

Eigen::VectorXcd default_coin_state(const GroupSpec& spec,
                                    const GeneratorSet& gens) {
    const auto d = static_cast<std::int64_t>(gens.size());
    if (spec.is_line()) {
        Eigen::VectorXcd phi(2);
        const double s = 1.0 / std::sqrt(2.0);
        phi << Complex(s, 0.0), Complex(0.0, s);
        return phi;
    }
    return Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
}

HittingResult one_shot(const GroupElement& g1, const GroupElement& g2,
                       const Coin& coin, const Eigen::VectorXcd& phi0,
                       double threshold, int t_max, const GroupSpec& spec,
                       const GeneratorSet& gens) {
    if (threshold < 0.0 || threshold > 1.0) {
        throw std::invalid_argument("one_shot: threshold must be in [0, 1]");
    }
    if (t_max < 0) throw std::invalid_argument("one_shot: t_max must be >= 0");
    HittingResult result;
    result.kind = HittingKind::OneShot;
    result.threshold = threshold;
    result.t_max = t_max;

    WalkState state = start_state(g1, phi0, spec, gens,
                                  spec.is_line() ? line_window_for(g1, g2, t_max)
                                                 : 0);
    const std::int64_t target = target_storage_index(state, g2);

    const double p0 = probability_at(state, target);
    result.peak_probability = p0;
    result.peak_time = 0;
    if (p0 >= threshold) {
        result.value = 0.0;
        return result;
    }
    for (int t = 1; t <= t_max; ++t) {
        step(state, coin);
        const double p = probability_at(state, target);
        result.curve.p.push_back(p);
        result.curve.cumulative.push_back(p);  // instantaneous curve; no sum
        if (p > result.peak_probability) {
            result.peak_probability = p;
            result.peak_time = t;
        }
        if (p >= threshold) {
            result.value = t;
            return result;
        }
    }
    result.reached = false;
    result.value = result.peak_time;
    return result;
}

double measured_step(WalkState& state, const Coin& coin,
                     const MeasuredWalkConfig& cfg) {
    step(state, coin);
    const std::int64_t target = target_storage_index(state, cfg.target);
    const double p = probability_at(state, target);
    for (std::size_t h = 0; h < state.coin_dim(); ++h) {
        state.at(h, target) = 0.0;  // project onto Q; no renormalization
    }
    return p;
}

HittingResult concurrent(const GroupElement& g1, const GroupElement& g2,
                         const Coin& coin, const Eigen::VectorXcd& phi0,
                         double threshold, int t_max, const GroupSpec& spec,
                         const GeneratorSet& gens) {
    if (threshold < 0.0 || threshold > 1.0) {
        throw std::invalid_argument("concurrent: threshold must be in [0, 1]");
    }
    if (t_max < 1) throw std::invalid_argument("concurrent: t_max must be >= 1");
    HittingResult result;
    result.kind = HittingKind::Concurrent;
    result.threshold = threshold;
    result.t_max = t_max;

    WalkState state = start_state(g1, phi0, spec, gens,
                                  spec.is_line() ? line_window_for(g1, g2, t_max)
                                                 : 0);
    MeasuredWalkConfig cfg{g2, t_max, 0.0};
    double cumulative = 0.0;
    for (int t = 1; t <= t_max; ++t) {
        const double p = measured_step(state, coin, cfg);
        cumulative += p;
        result.curve.p.push_back(p);
        result.curve.cumulative.push_back(cumulative);
        if (p > result.peak_probability) {
            result.peak_probability = p;
            result.peak_time = t;
        }
        if (cumulative >= threshold) {
            result.value = t;
            result.residual_mass = 1.0 - cumulative;
            return result;
        }
    }
    result.reached = false;
    result.value = t_max;
    result.residual_mass = 1.0 - cumulative;
    return result;
}

HittingResult average(const GroupElement& g1, const GroupElement& g2,
                      const Coin& coin, const Eigen::VectorXcd& phi0,
                      int t_max, double eps_tail, const GroupSpec& spec,
                      const GeneratorSet& gens) {
    if (t_max < 1) throw std::invalid_argument("average: t_max must be >= 1");
    HittingResult result;
    result.kind = HittingKind::Average;
    result.t_max = t_max;

    WalkState state = start_state(g1, phi0, spec, gens,
                                  spec.is_line() ? line_window_for(g1, g2, t_max)
                                                 : 0);
    MeasuredWalkConfig cfg{g2, t_max, eps_tail};
    double partial = 0.0;
    double arrived = 0.0;
    for (int t = 1; t <= t_max; ++t) {
        const double p = measured_step(state, coin, cfg);
        partial += t * p;
        arrived += p;
        result.curve.p.push_back(p);
        result.curve.cumulative.push_back(arrived);
        if (p > result.peak_probability) {
            result.peak_probability = p;
            result.peak_time = t;
        }
        if (1.0 - arrived < eps_tail) break;
    }
    // The true series exceeds the partial sum by at least
    // residual * (T_max + 1); callers get both numbers.
    result.residual_mass = std::max(0.0, 1.0 - arrived);
    result.value = partial;
    result.reached = result.residual_mass < eps_tail;
    return result;
}

std::pair<int, double> peak_arrival(const GroupElement& g1,
                                    const GroupElement& g2, const Coin& coin,
                                    const Eigen::VectorXcd& phi0, int t_max,
                                    const GroupSpec& spec,
                                    const GeneratorSet& gens) {
    WalkState state = start_state(g1, phi0, spec, gens,
                                  spec.is_line() ? line_window_for(g1, g2, t_max)
                                                 : 0);
    const std::int64_t target = target_storage_index(state, g2);
    int best_t = 0;
    double best_p = probability_at(state, target);
    for (int t = 1; t <= t_max; ++t) {
        step(state, coin);
        const double p = probability_at(state, target);
        if (p > best_p) {
            best_p = p;
            best_t = t;
        }
    }
    return {best_t, best_p};
}

}  // namespace qwalk
