// channels.cpp: covariance-matrix maps of the laser and phase-sensitive channels

#include "cvsteer/channels.hpp"

#include "cvsteer/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cvsteer {

namespace {

void require_rate(double v, const char* name)
{
    if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument(std::string(name) + " must be finite and non-negative");
    }
}

bool touches(Side side, Mode m)
{
    return side == Side::Both || (side == Side::A ? m == Mode::A : m == Mode::B);
}

} // namespace

double LaserParams::omega() const
{
    if (kappa == g) return std::numeric_limits<double>::infinity();
    return (kappa + g) / (kappa - g);
}

LaserParams laser_coefficients(double g, double kappa, double t)
{
    require_rate(g, "gain rate g");
    require_rate(kappa, "loss rate kappa");
    require_rate(t, "time t");

    LaserParams p;
    p.g = g;
    p.kappa = kappa;
    p.t = t;
    const double x = (kappa - g) * t;
    p.survival = std::exp(-2.0 * x);
    // A = (kappa+g)/(kappa-g) (1 - e^{-2x}) = (kappa+g) t (1 - e^{-2x}) / x
    if (std::abs(x) < 1e-8) {
        p.noise = 2.0 * (kappa + g) * t * (1.0 - x);
    } else {
        p.noise = (kappa + g) * t * (-std::expm1(-2.0 * x) / x);
    }
    return p;
}

LaserParams loss_preset(double kappa, double t) { return laser_coefficients(0.0, kappa, t); }

LaserParams gain_preset(double g, double t) { return laser_coefficients(g, 0.0, t); }

LaserParams thermal_preset(double kappa, double nbar, double t)
{
    require_rate(kappa, "loss rate kappa");
    require_rate(nbar, "thermal occupation nbar");
    require_rate(t, "time t");
    // Equivalent to laser_coefficients(kappa nbar, kappa (nbar+1), t) but free of the
    // cancellation in (kappa' - g').
    LaserParams p;
    p.g = kappa * nbar;
    p.kappa = kappa * (nbar + 1.0);
    p.t = t;
    p.survival = std::exp(-2.0 * kappa * t);
    p.noise = (2.0 * nbar + 1.0) * -std::expm1(-2.0 * kappa * t);
    return p;
}

GaussianState apply_local_map(const GaussianState& state, Side side, double survival, const Mat2& noise)
{
    if (!std::isfinite(survival) || survival < 0.0) {
        throw InvalidArgument("apply_local_map: survival factor must be finite and non-negative");
    }
    const double amp = std::sqrt(survival);
    Vec4 scale = Vec4::Ones();
    for (Mode m : {Mode::A, Mode::B}) {
        if (touches(side, m)) {
            const int o = m == Mode::A ? 0 : 2;
            scale(o) = scale(o + 1) = amp;
        }
    }
    Mat4 cm = scale.asDiagonal() * state.cm() * scale.asDiagonal();
    for (Mode m : {Mode::A, Mode::B}) {
        if (touches(side, m)) {
            const int o = m == Mode::A ? 0 : 2;
            cm.block<2, 2>(o, o) += noise;
        }
    }
    const Vec4 mean = scale.cwiseProduct(state.mean());
    return GaussianState(mean, cm);
}

GaussianState apply_laser(const GaussianState& state, const LaserParams& params, Side side)
{
    return apply_local_map(state, side, params.survival, params.noise * Mat2::Identity());
}

double PhaseSensitiveParams::transmitted() const { return std::exp(-2.0 * kappa * t); }

double PhaseSensitiveParams::absorbed() const { return -std::expm1(-2.0 * kappa * t); }

void validate(const PhaseSensitiveParams& params)
{
    require_rate(params.kappa, "loss rate kappa");
    require_rate(params.nbar, "thermal occupation nbar");
    require_rate(params.t, "time t");
    if (!std::isfinite(params.M.real()) || !std::isfinite(params.M.imag())) {
        throw InvalidArgument("squeezing parameter M must be finite");
    }
    if (std::norm(params.M) > params.nbar * (params.nbar + 1.0) + 1e-12) {
        throw InvalidArgument("squeezing parameter violates |M|^2 <= nbar (nbar + 1)");
    }
}

Mat2 v_infinity(const PhaseSensitiveParams& params)
{
    validate(params);
    const double n = params.N();
    const double re = 2.0 * params.M.real();
    const double im = 2.0 * params.M.imag();
    Mat2 v;
    v << n + re, im, im, n - re;
    return v;
}

GaussianState apply_phase_sensitive(const GaussianState& state, const PhaseSensitiveParams& params, Side side)
{
    const Mat2 vinf = v_infinity(params);
    return apply_local_map(state, side, params.transmitted(), params.absorbed() * vinf);
}

ChannelFamily ChannelFamily::loss(double kappa, Side side)
{
    require_rate(kappa, "loss rate kappa");
    ChannelFamily f;
    f.kind = Kind::Loss;
    f.kappa = kappa;
    f.side = side;
    return f;
}

ChannelFamily ChannelFamily::gain(double g, Side side)
{
    require_rate(g, "gain rate g");
    ChannelFamily f;
    f.kind = Kind::Gain;
    f.g = g;
    f.side = side;
    return f;
}

ChannelFamily ChannelFamily::thermal(double kappa, double nbar, Side side)
{
    require_rate(kappa, "loss rate kappa");
    require_rate(nbar, "thermal occupation nbar");
    ChannelFamily f;
    f.kind = Kind::Thermal;
    f.kappa = kappa;
    f.nbar = nbar;
    f.side = side;
    return f;
}

ChannelFamily ChannelFamily::laser(double g, double kappa, Side side)
{
    require_rate(g, "gain rate g");
    require_rate(kappa, "loss rate kappa");
    ChannelFamily f;
    f.kind = Kind::Laser;
    f.g = g;
    f.kappa = kappa;
    f.side = side;
    return f;
}

ChannelFamily ChannelFamily::phase_sensitive(double kappa, double nbar, std::complex<double> M, Side side)
{
    PhaseSensitiveParams p{kappa, nbar, M, 0.0};
    validate(p);
    ChannelFamily f;
    f.kind = Kind::PhaseSensitive;
    f.kappa = kappa;
    f.nbar = nbar;
    f.M = M;
    f.side = side;
    return f;
}

double ChannelFamily::effective_g() const
{
    switch (kind) {
    case Kind::Thermal: return kappa * nbar;
    case Kind::PhaseSensitive: return 0.0;
    default: return g;
    }
}

double ChannelFamily::effective_kappa() const
{
    return kind == Kind::Thermal ? kappa * (nbar + 1.0) : kappa;
}

double ChannelFamily::rate() const
{
    const double r = std::max(effective_g(), effective_kappa());
    return r > 0.0 ? r : 1.0;
}

GaussianState ChannelFamily::evolve(const GaussianState& state, double t) const
{
    switch (kind) {
    case Kind::Loss: return apply_laser(state, loss_preset(kappa, t), side);
    case Kind::Gain: return apply_laser(state, gain_preset(g, t), side);
    case Kind::Thermal: return apply_laser(state, thermal_preset(kappa, nbar, t), side);
    case Kind::Laser: return apply_laser(state, laser_coefficients(g, kappa, t), side);
    case Kind::PhaseSensitive:
        return apply_phase_sensitive(state, PhaseSensitiveParams{kappa, nbar, M, t}, side);
    }
    throw InvalidArgument("unknown channel kind");
}

std::string ChannelFamily::describe() const
{
    std::ostringstream os;
    os.precision(12);
    os << to_string(kind) << "(";
    switch (kind) {
    case Kind::Loss: os << "kappa=" << kappa; break;
    case Kind::Gain: os << "g=" << g; break;
    case Kind::Thermal: os << "kappa=" << kappa << ",nbar=" << nbar; break;
    case Kind::Laser: os << "g=" << g << ",kappa=" << kappa; break;
    case Kind::PhaseSensitive:
        os << "kappa=" << kappa << ",nbar=" << nbar << ",M=" << M.real();
        if (M.imag() != 0.0) os << (M.imag() > 0 ? "+" : "") << M.imag() << "i";
        break;
    }
    os << ",side=" << to_string(side) << ")";
    return os.str();
}

const char* to_string(ChannelFamily::Kind kind)
{
    switch (kind) {
    case ChannelFamily::Kind::Loss: return "loss";
    case ChannelFamily::Kind::Gain: return "gain";
    case ChannelFamily::Kind::Thermal: return "thermal";
    case ChannelFamily::Kind::Laser: return "laser";
    case ChannelFamily::Kind::PhaseSensitive: return "phase-sensitive";
    }
    return "?";
}

const char* to_string(Side side)
{
    switch (side) {
    case Side::A: return "a";
    case Side::B: return "b";
    case Side::Both: return "two";
    }
    return "?";
}

} // namespace cvsteer
