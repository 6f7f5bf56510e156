// criteria.cpp: closed-form Reid and entropic criteria

#include "cvsteer/criteria.hpp"

#include "cvsteer/errors.hpp"

#include <cmath>
#include <numbers>

namespace cvsteer {

namespace {

// V(X_steered) - E^2 / V(X_steering), the unscaled conditional variance.
double conditional_variance(const GaussianState& state, Direction dir, Quadrature q)
{
    const double v1 = state.variance(steering_mode(dir), q);
    const double v2 = state.variance(steered_mode(dir), q);
    const double e = state.covariance(q);
    if (!(v1 > 0.0)) {
        throw DegenerateInput("conditioning variance is zero");
    }
    return v2 - e * e / v1;
}

} // namespace

double entropic_bound() { return 1.0 + std::log(std::numbers::pi); }

ReidEstimate reid_estimate(const GaussianState& state, Direction dir, Quadrature q)
{
    const double v1 = state.variance(steering_mode(dir), q);
    if (!(v1 > 0.0)) {
        throw DegenerateInput("conditioning variance is zero");
    }
    ReidEstimate est;
    est.lambda = -state.covariance(q) / v1;
    est.d = (est.lambda * state.first_moment(steering_mode(dir), q) +
             state.first_moment(steered_mode(dir), q)) /
            std::numbers::sqrt2;
    return est;
}

double reid_inferred_variance(const GaussianState& state, Direction dir, Quadrature q)
{
    return 0.5 * conditional_variance(state, dir, q);
}

double reid_product(const GaussianState& state, Direction dir)
{
    return reid_inferred_variance(state, dir, Quadrature::Q) * reid_inferred_variance(state, dir, Quadrature::P);
}

double marginal_entropy(const GaussianState& state, Mode m, Quadrature q)
{
    return 0.5 * std::log(std::numbers::pi * std::numbers::e * state.variance(m, q));
}

double joint_entropy(const GaussianState& state, Quadrature q)
{
    const double v1 = state.variance(Mode::A, q);
    const double v2 = state.variance(Mode::B, q);
    const double e = state.covariance(q);
    return std::log(std::numbers::pi * std::numbers::e) + 0.5 * std::log(v1 * v2 - e * e);
}

double conditional_entropy(const GaussianState& state, Direction dir, Quadrature q)
{
    return 0.5 * std::log(std::numbers::pi * std::numbers::e * conditional_variance(state, dir, q));
}

double entropic_sum(const GaussianState& state, Direction dir)
{
    return conditional_entropy(state, dir, Quadrature::Q) + conditional_entropy(state, dir, Quadrature::P);
}

Verdict is_steerable(const GaussianState& state, Direction dir, Criterion criterion)
{
    const double vq = conditional_variance(state, dir, Quadrature::Q);
    const double vp = conditional_variance(state, dir, Quadrature::P);
    Verdict v;
    if (criterion == Criterion::Reid) {
        v.margin = 0.25 * vq * vp - kReidBound;
    } else {
        v.margin = 0.5 * std::log(vq * vp);
    }
    v.steerable = v.margin < 0.0;
    return v;
}

const char* to_string(Direction d) { return d == Direction::AtoB ? "AtoB" : "BtoA"; }

const char* to_string(Criterion c) { return c == Criterion::Reid ? "reid" : "entropic"; }

} // namespace cvsteer
