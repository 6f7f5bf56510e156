// measures.hpp: Gaussian steerability G and logarithmic negativity E_N

#pragma once

#include "cvsteer/criteria.hpp"
#include "cvsteer/gaussian_state.hpp"

namespace cvsteer {

/// 1/2 ln(det(steering block) / det V) without the clamp. Evaluated as
/// -1/2 ln det(Schur complement of the steering block), so only 2x2 determinants appear.
double steering_log_ratio(const GaussianState& state, Direction dir);

/// max{0, steering_log_ratio}.
double gaussian_steerability(const GaussianState& state, Direction dir);

/// -ln nu_s, nu_s the smaller symplectic eigenvalue of the partial transpose (unclamped).
double negativity_exponent(const GaussianState& state);

/// max{0, -ln nu_s}.
double log_negativity(const GaussianState& state);

struct SteeringReport {
    double reid_AtoB = 0.0;
    double reid_BtoA = 0.0;
    double entropic_AtoB = 0.0;
    double entropic_BtoA = 0.0;
    double g_AtoB = 0.0;
    double g_BtoA = 0.0;
    double e_n = 0.0;
    bool steerable_AtoB = false;
    bool steerable_BtoA = false;
    bool entangled = false;
};

/// Verdicts come from the Reid margins. Throws NumericError when the quantities disagree
/// beyond 1e-12: Reid and entropic verdicts must match, Reid steering implies G > 0 (and
/// G > 0 implies Reid steering for Q/P-decoupled states), and G > 0 implies E_N > 0.
SteeringReport steering_report(const GaussianState& state);

} // namespace cvsteer
