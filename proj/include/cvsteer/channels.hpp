// channels.hpp: laser (gain + loss), thermal and phase-sensitive Gaussian channels
//
// Every channel here acts mode-locally as V_block -> s V_block + N, cross blocks -> sqrt(s) C,
// means -> sqrt(s) m, with a survival factor s and a 2x2 noise matrix N.

#pragma once

#include "cvsteer/gaussian_state.hpp"

#include <complex>
#include <string>

namespace cvsteer {

/// Which modes a channel touches.
enum class Side { A, B, Both };

/// Gain g, loss kappa, duration t and the derived survival factor R = exp(-2(kappa-g)t)
/// plus added noise A = Omega (1 - R), Omega = (kappa+g)/(kappa-g).
struct LaserParams {
    double g = 0.0;
    double kappa = 0.0;
    double t = 0.0;
    double survival = 1.0; ///< R
    double noise = 0.0;    ///< A

    /// (kappa+g)/(kappa-g); infinite when kappa == g.
    double omega() const;
};

/// Throws InvalidArgument on negative or non-finite input. Uses the series
/// A = 2(kappa+g)t (1 - x) when |x| = |kappa-g| t < 1e-8.
LaserParams laser_coefficients(double g, double kappa, double t);

LaserParams loss_preset(double kappa, double t);
LaserParams gain_preset(double g, double t);
/// g -> kappa nbar, kappa -> kappa (nbar+1); gives R = exp(-2 kappa t), A = (2 nbar + 1)(1 - R).
LaserParams thermal_preset(double kappa, double nbar, double t);

/// Shared local map: touched blocks V -> s V + noise, cross block and means scale by sqrt(s).
GaussianState apply_local_map(const GaussianState& state, Side side, double survival, const Mat2& noise);

GaussianState apply_laser(const GaussianState& state, const LaserParams& params, Side side);

/// Squeezed thermal bath: occupation nbar, complex squeezing M with |M|^2 <= nbar(nbar+1).
struct PhaseSensitiveParams {
    double kappa = 0.0;
    double nbar = 0.0;
    std::complex<double> M{0.0, 0.0};
    double t = 0.0;

    double N() const { return 2.0 * nbar + 1.0; }
    double transmitted() const; ///< T = exp(-2 kappa t)
    double absorbed() const;    ///< 1 - T, via expm1
};

/// Throws InvalidArgument on negative rates/times or |M|^2 > nbar(nbar+1) + 1e-12.
void validate(const PhaseSensitiveParams& params);

/// Stationary single-mode covariance matrix [[N + 2 Re M, 2 Im M], [2 Im M, N - 2 Re M]].
Mat2 v_infinity(const PhaseSensitiveParams& params);

/// Per touched mode V_out = (1-T) V_inf + T V_in.
GaussianState apply_phase_sensitive(const GaussianState& state, const PhaseSensitiveParams& params, Side side);

/// A channel with fixed rates, parameterized by the evolution time.
struct ChannelFamily {
    enum class Kind { Loss, Gain, Thermal, Laser, PhaseSensitive };

    Kind kind = Kind::Loss;
    double g = 0.0;
    double kappa = 0.0;
    double nbar = 0.0;
    std::complex<double> M{0.0, 0.0};
    Side side = Side::Both;

    static ChannelFamily loss(double kappa, Side side);
    static ChannelFamily gain(double g, Side side);
    static ChannelFamily thermal(double kappa, double nbar, Side side);
    static ChannelFamily laser(double g, double kappa, Side side);
    static ChannelFamily phase_sensitive(double kappa, double nbar, std::complex<double> M, Side side);

    /// Effective laser rates after the thermal substitution (phase-sensitive: kappa, 0).
    double effective_g() const;
    double effective_kappa() const;
    /// max(effective kappa, effective g); the unit of dimensionless time.
    double rate() const;

    GaussianState evolve(const GaussianState& state, double t) const;
    std::string describe() const;
};

const char* to_string(ChannelFamily::Kind kind);
const char* to_string(Side side);

} // namespace cvsteer
