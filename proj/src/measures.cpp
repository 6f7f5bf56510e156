// measures.cpp: steerability and log-negativity

#include "cvsteer/measures.hpp"

#include "cvsteer/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cvsteer {

namespace {

double det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

constexpr double kBoundaryTolerance = 1e-12;

} // namespace

double steering_log_ratio(const GaussianState& state, Direction dir)
{
    const Mat2 a = state.block(steering_mode(dir));
    const Mat2 b = state.block(steered_mode(dir));
    const Mat2 c = dir == Direction::AtoB ? state.cross() : Mat2(state.cross().transpose());
    const double da = det2(a);
    if (!(da > 0.0)) {
        throw DegenerateInput("steering block is singular");
    }
    Mat2 a_inv;
    a_inv << a(1, 1) / da, -a(0, 1) / da, -a(1, 0) / da, a(0, 0) / da;
    const Mat2 schur = b - c.transpose() * a_inv * c;
    const double ds = det2(schur);
    if (!(ds > 0.0)) {
        throw DegenerateInput("covariance matrix is singular");
    }
    return -0.5 * std::log(ds);
}

double gaussian_steerability(const GaussianState& state, Direction dir)
{
    return std::max(0.0, steering_log_ratio(state, dir));
}

double negativity_exponent(const GaussianState& state)
{
    const auto nu = symplectic_eigenvalues(partial_transpose(state, Mode::B));
    return -std::log(nu.smaller);
}

double log_negativity(const GaussianState& state) { return std::max(0.0, negativity_exponent(state)); }

SteeringReport steering_report(const GaussianState& state)
{
    SteeringReport rep;
    rep.reid_AtoB = reid_product(state, Direction::AtoB);
    rep.reid_BtoA = reid_product(state, Direction::BtoA);
    rep.entropic_AtoB = entropic_sum(state, Direction::AtoB);
    rep.entropic_BtoA = entropic_sum(state, Direction::BtoA);
    rep.g_AtoB = gaussian_steerability(state, Direction::AtoB);
    rep.g_BtoA = gaussian_steerability(state, Direction::BtoA);
    rep.e_n = log_negativity(state);
    rep.entangled = rep.e_n > 0.0;

    const bool decoupled = is_quadrature_decoupled(state.cm());
    for (Direction dir : {Direction::AtoB, Direction::BtoA}) {
        const Verdict reid = is_steerable(state, dir, Criterion::Reid);
        const Verdict ent = is_steerable(state, dir, Criterion::Entropic);
        const double g = dir == Direction::AtoB ? rep.g_AtoB : rep.g_BtoA;
        const std::string tag = std::string(" (") + to_string(dir) + ")";
        if (reid.steerable != ent.steerable) {
            throw NumericError("Reid and entropic verdicts disagree" + tag);
        }
        if (reid.margin < -kBoundaryTolerance && !(g > 0.0)) {
            throw NumericError("Reid-steerable state with zero steerability" + tag);
        }
        if (decoupled && g > kBoundaryTolerance && !reid.steerable) {
            throw NumericError("positive steerability without Reid violation" + tag);
        }
        if (g > kBoundaryTolerance && !rep.entangled) {
            throw NumericError("steerable state reported separable" + tag);
        }
        (dir == Direction::AtoB ? rep.steerable_AtoB : rep.steerable_BtoA) = reid.steerable;
    }
    return rep;
}

} // namespace cvsteer
