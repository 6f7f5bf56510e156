// thresholds.cpp: closed-form and bisected threshold times

#include "cvsteer/thresholds.hpp"

#include "cvsteer/errors.hpp"
#include "cvsteer/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cvsteer {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_squeezing(double r)
{
    if (!std::isfinite(r) || r <= 0.0) {
        throw InvalidArgument("squeezing r must be finite and positive");
    }
}

void require_rates(double g, double kappa)
{
    if (!std::isfinite(g) || !std::isfinite(kappa) || g < 0.0 || kappa < 0.0) {
        throw InvalidArgument("rates must be finite and non-negative");
    }
    if (g + kappa == 0.0) {
        throw InvalidArgument("at least one of g, kappa must be positive");
    }
}

// log1p(u) / u, continuous through u = 0.
double log1p_ratio(double u)
{
    if (std::abs(u) < 1e-8) return 1.0 - 0.5 * u;
    return std::log1p(u) / u;
}

// t = log1p(u) / (2 (kappa - g)) for u = (kappa - g) * scale. Returns the finite time
// scale * log1p_ratio(u) / 2, or unbounded when the log argument is not positive.
ThresholdTime log_time(double u, double scale)
{
    if (u <= -1.0 || !std::isfinite(u) || !std::isfinite(scale)) return ThresholdTime::unbounded();
    return ThresholdTime::finite(0.5 * scale * log1p_ratio(u));
}

double raw_quantity(const GaussianState& s, Quantity q)
{
    switch (q) {
    case Quantity::SteerAtoB: return steering_log_ratio(s, Direction::AtoB);
    case Quantity::SteerBtoA: return steering_log_ratio(s, Direction::BtoA);
    case Quantity::SteerTwoWay:
        return std::min(steering_log_ratio(s, Direction::AtoB), steering_log_ratio(s, Direction::BtoA));
    case Quantity::Inseparability: return negativity_exponent(s);
    }
    throw InvalidArgument("unknown quantity");
}

Quantity mirrored(Quantity q)
{
    if (q == Quantity::SteerAtoB) return Quantity::SteerBtoA;
    if (q == Quantity::SteerBtoA) return Quantity::SteerAtoB;
    return q;
}

ThresholdTime earlier(const ThresholdTime& x, const ThresholdTime& y)
{
    return x.as_double() <= y.as_double() ? x : y;
}

std::optional<ThresholdTime> closed_for(const ChannelFamily& f, double r, Quantity q)
{
    if (f.kind == ChannelFamily::Kind::PhaseSensitive) return std::nullopt;
    const double g = f.effective_g();
    const double k = f.effective_kappa();
    if (f.side == Side::Both) {
        if (q == Quantity::Inseparability) return closed_form::two_side_inseparability(g, k, r);
        return closed_form::two_way_laser(g, k, r);
    }
    // One-side formulas are written for a channel on mode B; mode A is the mirror image.
    const Quantity qb = f.side == Side::B ? q : mirrored(q);
    switch (qb) {
    case Quantity::SteerAtoB: return closed_form::one_side_AtoB(g, k, r);
    case Quantity::SteerBtoA: return closed_form::one_side_BtoA(g, k);
    case Quantity::SteerTwoWay:
        return earlier(closed_form::one_side_AtoB(g, k, r), closed_form::one_side_BtoA(g, k));
    case Quantity::Inseparability: return closed_form::one_side_inseparability(g, k);
    }
    return std::nullopt;
}

} // namespace

ThresholdTime ThresholdTime::finite(double t)
{
    if (!std::isfinite(t)) {
        throw std::invalid_argument("ThresholdTime::finite needs a finite value");
    }
    ThresholdTime out;
    out.finite_ = true;
    out.t_ = t;
    return out;
}

double ThresholdTime::value() const
{
    if (!finite_) throw std::logic_error("unbounded threshold has no finite value");
    return t_;
}

double ThresholdTime::as_double() const noexcept { return finite_ ? t_ : kInf; }

std::string ThresholdTime::to_string() const
{
    if (!finite_) return "inf";
    std::ostringstream os;
    os.precision(12);
    os << t_;
    return os.str();
}

const char* to_string(Quantity q)
{
    switch (q) {
    case Quantity::SteerAtoB: return "steer-AtoB";
    case Quantity::SteerBtoA: return "steer-BtoA";
    case Quantity::SteerTwoWay: return "steer-two-way";
    case Quantity::Inseparability: return "inseparability";
    }
    return "?";
}

double threshold_quantity(const GaussianState& state, Quantity q) { return raw_quantity(state, q); }

NumericThreshold numeric_threshold(const ChannelFamily& family, double r, Quantity q, double t_max, int scan_points)
{
    if (!std::isfinite(t_max) || t_max <= 0.0) {
        throw InvalidArgument("numeric_threshold: t_max must be finite and positive");
    }
    if (scan_points < 2) {
        throw InvalidArgument("numeric_threshold: need at least two scan points");
    }
    const GaussianState input = make_tmsv(r);
    auto f = [&](double t) { return raw_quantity(family.evolve(input, t), q); };

    if (!(f(0.0) > 0.0)) {
        throw InvalidArgument(std::string("numeric_threshold: ") + to_string(q) + " is not positive at t = 0");
    }

    std::vector<std::pair<double, double>> brackets;
    double prev_t = 0.0;
    bool prev_alive = true;
    for (int i = 1; i <= scan_points; ++i) {
        const double t = t_max * static_cast<double>(i) / scan_points;
        const bool alive = f(t) > 0.0;
        if (alive != prev_alive) brackets.emplace_back(prev_t, t);
        prev_t = t;
        prev_alive = alive;
    }

    NumericThreshold out;
    if (brackets.empty()) {
        out.positive_tail = true;
        return out;
    }
    if (brackets.size() > 1) {
        throw MultiRootError(std::string("numeric_threshold: ") + to_string(q) + " changes sign " +
                                 std::to_string(brackets.size()) + " times on (0, t_max]",
                             std::move(brackets));
    }
    double lo = brackets.front().first;
    double hi = brackets.front().second;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) lo = mid;
        else hi = mid;
    }
    out.time = ThresholdTime::finite(0.5 * (lo + hi));
    return out;
}

namespace closed_form {

ThresholdTime two_way_laser(double g, double kappa, double r)
{
    require_rates(g, kappa);
    require_squeezing(r);
    const double ch = std::cosh(2.0 * r);
    const double sh_r = std::sinh(r);
    const double w = (kappa - g) / (kappa + g); // 1 / Omega
    // B^2 - C^2 < B with R = 1 - A w rearranges to a A^2 + b A - c < 0.
    const double a = 1.0 - 2.0 * ch * w + w * w;
    const double b = 2.0 * ch - 2.0 * w - 1.0 + ch * w;
    const double c = 2.0 * sh_r * sh_r;
    const double disc = b * b + 4.0 * a * c;
    if (disc < 0.0) return ThresholdTime::unbounded();
    const double denom = b + std::sqrt(disc);
    if (!(denom > 0.0)) return ThresholdTime::unbounded();
    const double a_c = 2.0 * c / denom;
    // t = -log1p(-A_c w) / (2 (kappa - g))
    const double v = -a_c * w;
    if (v <= -1.0) return ThresholdTime::unbounded();
    return ThresholdTime::finite(log1p_ratio(v) * a_c / (2.0 * (kappa + g)));
}

std::optional<double> two_way_thermal_kt(double nbar, double r)
{
    require_squeezing(r);
    if (!std::isfinite(nbar) || nbar < 0.0) {
        throw InvalidArgument("nbar must be finite and non-negative");
    }
    const double n = 2.0 * nbar + 1.0;
    const double ch_r = std::cosh(r);
    const double alpha = (n + 1.0) * (n + 1.0) - 4.0 * n * ch_r * ch_r;
    if (!(alpha < 0.0)) return std::nullopt;
    const double beta = (2.0 * n - 1.0) * (std::cosh(2.0 * r) - n);
    const double delta = n * (n - 1.0);
    const double abs_alpha = -alpha;
    const double rc = (beta + std::sqrt(beta * beta + 4.0 * abs_alpha * delta)) / (2.0 * abs_alpha);
    return -0.5 * std::log(rc);
}

ThresholdTime one_side_AtoB(double g, double kappa, double r)
{
    require_rates(g, kappa);
    require_squeezing(r);
    if (g == 0.0) return ThresholdTime::unbounded();
    const double s2 = std::sinh(r) * std::sinh(r);
    const double ch = std::cosh(2.0 * r);
    // ln[(kappa sinh^2 r + g cosh^2 r) / (g cosh 2r)] = log1p((kappa - g) sinh^2 r / (g cosh 2r))
    const double scale = s2 / (g * ch);
    return log_time((kappa - g) * scale, scale);
}

ThresholdTime one_side_BtoA(double g, double kappa)
{
    require_rates(g, kappa);
    // ln[2 kappa / (kappa + g)] = log1p((kappa - g) / (kappa + g))
    const double scale = 1.0 / (kappa + g);
    return log_time((kappa - g) * scale, scale);
}

ThresholdTime two_side_inseparability(double g, double kappa, double r)
{
    require_rates(g, kappa);
    require_squeezing(r);
    if (g == 0.0) return ThresholdTime::unbounded();
    const double tr = std::tanh(r);
    // ln[(g + kappa tanh r) / (g (1 + tanh r))] = log1p((kappa - g) tanh r / (g (1 + tanh r)))
    const double scale = tr / (g * (1.0 + tr));
    return log_time((kappa - g) * scale, scale);
}

ThresholdTime one_side_inseparability(double g, double kappa)
{
    require_rates(g, kappa);
    if (g == 0.0) return ThresholdTime::unbounded();
    // ln(kappa / g) = log1p((kappa - g) / g)
    const double scale = 1.0 / g;
    return log_time((kappa - g) * scale, scale);
}

double two_way_loss_kt() { return 0.5 * std::log(2.0); }

double two_way_gain_gt(double r)
{
    const double th = std::tanh(r);
    return 0.5 * std::log((3.0 + std::sqrt(1.0 + 8.0 * th * th)) / 4.0);
}

double one_side_gain_AtoB_gt(double r)
{
    const double sech = 1.0 / std::cosh(r);
    return 0.5 * std::log(2.0 - sech * sech);
}

double one_side_thermal_AtoB_kt(double nbar, double r)
{
    if (nbar == 0.0) return kInf;
    return 0.5 * std::log((2.0 * nbar + 1.0 - 1.0 / std::cosh(2.0 * r)) / (2.0 * nbar));
}

double one_side_loss_BtoA_kt() { return 0.5 * std::log(2.0); }

double one_side_thermal_BtoA_kt(double nbar) { return 0.5 * std::log((2.0 * nbar + 2.0) / (2.0 * nbar + 1.0)); }

double two_side_gain_inseparability_gt(double r) { return 0.5 * std::log(1.0 + std::tanh(r)); }

double two_side_thermal_inseparability_kt(double nbar, double r)
{
    if (nbar == 0.0) return kInf;
    const double tr = std::tanh(r);
    return 0.5 * std::log1p(tr / (nbar * (1.0 + tr)));
}

double one_side_thermal_inseparability_kt(double nbar)
{
    if (nbar == 0.0) return kInf;
    return 0.5 * std::log1p(1.0 / nbar);
}

} // namespace closed_form

ThresholdResult threshold(const ChannelFamily& family, double r, Quantity q, std::optional<double> t_max)
{
    require_squeezing(r);
    ThresholdResult res;
    res.channel = family.describe();
    res.quantity = q;
    res.r = r;
    res.closed = closed_for(family, r, q);

    double horizon = t_max.value_or(10.0 / family.rate());
    if (!t_max && res.closed && res.closed->is_finite()) {
        horizon = std::max(horizon, 2.0 * res.closed->value());
    }
    const NumericThreshold num = numeric_threshold(family, r, q, horizon);
    res.numeric = num.time;
    res.positive_tail = num.positive_tail;

    if (!res.closed) {
        res.agreement = std::numeric_limits<double>::quiet_NaN();
        res.status = "numeric-only";
        return res;
    }
    const ThresholdTime& c = *res.closed;
    if (c.is_finite() && res.numeric.is_finite()) {
        res.agreement = std::abs(c.value() - res.numeric.value());
        res.status = res.agreement < kThresholdAgreement * std::max(1.0, c.value()) ? "ok" : "mismatch";
    } else if (!c.is_finite() && !res.numeric.is_finite()) {
        res.agreement = 0.0;
        res.status = "ok";
    } else {
        res.agreement = std::numeric_limits<double>::quiet_NaN();
        res.status = "mismatch";
    }
    return res;
}

ThresholdResult two_way_laser_threshold(double g, double kappa, double r)
{
    require_rates(g, kappa);
    return threshold(ChannelFamily::laser(g, kappa, Side::Both), r, Quantity::SteerTwoWay);
}

ThresholdResult two_way_thermal_threshold(double nbar, double r, double kappa)
{
    ThresholdResult res = threshold(ChannelFamily::thermal(kappa, nbar, Side::Both), r, Quantity::SteerTwoWay);
    const auto window = closed_form::two_way_thermal_kt(nbar, r);
    if (!window) {
        if (res.status == "ok") res.status = "outside-closed-form-window";
        return res;
    }
    // Inside the window the dedicated thermal expression must match the general one.
    const ThresholdTime thermal = ThresholdTime::finite(*window / kappa);
    res.closed = thermal;
    if (res.numeric.is_finite()) {
        res.agreement = std::abs(thermal.value() - res.numeric.value());
        res.status = res.agreement < kThresholdAgreement * std::max(1.0, thermal.value()) ? "ok" : "mismatch";
    } else {
        res.agreement = std::numeric_limits<double>::quiet_NaN();
        res.status = "mismatch";
    }
    return res;
}

OneSideThresholds one_side_thresholds(double g, double kappa, double r)
{
    require_rates(g, kappa);
    const ChannelFamily f = ChannelFamily::laser(g, kappa, Side::B);
    return {threshold(f, r, Quantity::SteerAtoB), threshold(f, r, Quantity::SteerBtoA)};
}

ThresholdResult inseparability_threshold(double g, double kappa, double r, Side side)
{
    require_rates(g, kappa);
    return threshold(ChannelFamily::laser(g, kappa, side), r, Quantity::Inseparability);
}

} // namespace cvsteer
