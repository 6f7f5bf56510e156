// criteria.hpp: Reid inferred-variance and entropic steering inequalities (Gaussian closed forms)

#pragma once

#include "cvsteer/gaussian_state.hpp"

namespace cvsteer {

/// AtoB: Alice (mode A) steers Bob, i.e. mode-B outcomes are inferred from mode-A outcomes.
enum class Direction { AtoB, BtoA };

constexpr Mode steering_mode(Direction d) noexcept { return d == Direction::AtoB ? Mode::A : Mode::B; }
constexpr Mode steered_mode(Direction d) noexcept { return d == Direction::AtoB ? Mode::B : Mode::A; }
constexpr Direction reverse(Direction d) noexcept
{
    return d == Direction::AtoB ? Direction::BtoA : Direction::AtoB;
}

/// Optimal linear estimate x_est = d - lambda x_steering (scaled units x = X / sqrt 2).
struct ReidEstimate {
    double lambda = 0.0;
    double d = 0.0;
};

inline constexpr double kReidBound = 0.25;
/// ln(e pi)
double entropic_bound();

/// lambda = -E / V(steering), d = (lambda <X_steering> + <X_steered>) / sqrt 2.
ReidEstimate reid_estimate(const GaussianState& state, Direction dir, Quadrature q);

/// 1/2 [V(X_steered) - E^2 / V(X_steering)]; throws DegenerateInput on zero conditioning variance.
double reid_inferred_variance(const GaussianState& state, Direction dir, Quadrature q);

/// Product of the Q and P inferred variances; steerable iff < 1/4.
double reid_product(const GaussianState& state, Direction dir);

/// Shannon entropies of quadrature outcomes, natural log, scaled units.
double marginal_entropy(const GaussianState& state, Mode m, Quadrature q);
double joint_entropy(const GaussianState& state, Quadrature q);
/// H(X_steered | X_steering) = 1/2 ln(pi e (V2 - E^2 / V1)).
double conditional_entropy(const GaussianState& state, Direction dir, Quadrature q);

/// H(Q_steered|Q_steering) + H(P_steered|P_steering); steerable iff < ln(e pi).
double entropic_sum(const GaussianState& state, Direction dir);

enum class Criterion { Reid, Entropic };

/// margin < 0 means steerable. Reid: product - 1/4. Entropic: sum - ln(e pi), evaluated as
/// 1/2 ln(v_Q v_P) so that the bound cancels exactly.
struct Verdict {
    bool steerable = false;
    double margin = 0.0;
};

Verdict is_steerable(const GaussianState& state, Direction dir, Criterion criterion);

const char* to_string(Direction d);
const char* to_string(Criterion c);

} // namespace cvsteer
