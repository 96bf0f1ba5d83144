#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/group.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class HittingKind { OneShot, Concurrent, Average, GroupVelocity };

std::string to_string(HittingKind kind);

/// Target vertex and horizon of the |g2>-measured walk. The projectors
/// P = I (x) |g2><g2| and Q = I - P are implied.
struct MeasuredWalkConfig {
    GroupElement target;
    int t_max = 0;
    double eps_tail = 1e-6;
};

/// Per-step probability record, t = 1 .. size(). For the unitary walk
/// p is the instantaneous probability at the target; for the measured
/// walk it is the arrival probability of Definition-style stopping.
struct ArrivalCurve {
    std::vector<double> p;
    std::vector<double> cumulative;
};

struct HittingResult {
    HittingKind kind = HittingKind::OneShot;
    bool reached = true;
    double value = 0.0;  // steps; integer-valued except Average/GroupVelocity
    double threshold = 0.0;
    int t_max = 0;
    // diagnostics
    double peak_probability = 0.0;
    int peak_time = 0;
    double residual_mass = 0.0;  // 1 - sum p(t), measured definitions
    ArrivalCurve curve;
};

/// min{T <= T_max : P_{g2}(T) >= p} under unitary evolution, with
/// P_{g2}(T) = sum_h |psi_{h,g2}(T)|^2. T = 0 is allowed (only ever
/// satisfied when g1 = g2). Unreached thresholds are reported
/// explicitly with the best probability seen.
HittingResult one_shot(const GroupElement& g1, const GroupElement& g2,
                       const Coin& coin, const Eigen::VectorXcd& phi0,
                       double threshold, int t_max, const GroupSpec& spec,
                       const GeneratorSet& gens);

/// One measured step: apply U, return the arrival probability (squared
/// norm of the target component), zero the target amplitudes. The state
/// is NOT renormalized, so its norm decays.
double measured_step(WalkState& state, const Coin& coin,
                     const MeasuredWalkConfig& cfg);

/// min{T <= T_max : sum_{t<=T} p(t) >= p} over the measured walk.
HittingResult concurrent(const GroupElement& g1, const GroupElement& g2,
                         const Coin& coin, const Eigen::VectorXcd& phi0,
                         double threshold, int t_max, const GroupSpec& spec,
                         const GeneratorSet& gens);

/// Partial sum sum_{t<=T_max} t p(t) with the residual mass reported
/// alongside; the true value exceeds the partial sum by at least
/// residual * (T_max + 1).
HittingResult average(const GroupElement& g1, const GroupElement& g2,
                      const Coin& coin, const Eigen::VectorXcd& phi0,
                      int t_max, double eps_tail, const GroupSpec& spec,
                      const GeneratorSet& gens);

/// Scans the unitary arrival curve up to t_max and returns the peak
/// (T_peak, p_peak); the natural near-peak threshold choice.
std::pair<int, double> peak_arrival(const GroupElement& g1,
                                    const GroupElement& g2, const Coin& coin,
                                    const Eigen::VectorXcd& phi0, int t_max,
                                    const GroupSpec& spec,
                                    const GeneratorSet& gens);

/// Default initial coin states: (|0>+i|1>)/sqrt(2) on the line,
/// the equal superposition n^{-1/2} sum_j |e_j> otherwise.
Eigen::VectorXcd default_coin_state(const GroupSpec& spec,
                                    const GeneratorSet& gens);

}  // namespace qwalk
