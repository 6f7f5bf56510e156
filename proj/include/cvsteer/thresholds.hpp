// thresholds.hpp: decoherence times at which steering or entanglement of a decohered TMSV dies

#pragma once

#include "cvsteer/channels.hpp"
#include "cvsteer/gaussian_state.hpp"

#include <optional>
#include <string>

namespace cvsteer {

/// A finite time or the "never" sentinel. Serialized as a number or the string "inf".
class ThresholdTime {
public:
    static ThresholdTime finite(double t);
    static ThresholdTime unbounded() { return ThresholdTime(); }

    bool is_finite() const noexcept { return finite_; }
    /// Throws std::logic_error on the unbounded sentinel.
    double value() const;
    /// value() for finite times, +infinity otherwise (comparisons only, never serialized).
    double as_double() const noexcept;
    std::string to_string() const;

    friend bool operator==(const ThresholdTime&, const ThresholdTime&) = default;

private:
    ThresholdTime() = default;
    bool finite_ = false;
    double t_ = 0.0;
};

enum class Quantity {
    SteerAtoB,      ///< G^{A->B}
    SteerBtoA,      ///< G^{B->A}
    SteerTwoWay,    ///< min of both directions
    Inseparability, ///< E_N
};

const char* to_string(Quantity q);

/// Signed quantity whose zero crossing defines the threshold: the unclamped log ratio
/// (or their minimum) for steering, -ln nu_s for entanglement.
double threshold_quantity(const GaussianState& state, Quantity q);

struct NumericThreshold {
    ThresholdTime time = ThresholdTime::unbounded();
    /// Set when no root was found and the quantity stayed positive on the whole scan.
    bool positive_tail = false;
};

/// Smallest t in (0, t_max] where threshold_quantity(family.evolve(tmsv(r), t)) reaches 0.
/// Scans `scan_points` uniform cells for sign changes, bisects the bracket to 1e-13 relative.
/// Throws InvalidArgument if the quantity is not positive at t = 0, MultiRootError when
/// more than one sign change is seen.
NumericThreshold numeric_threshold(const ChannelFamily& family, double r, Quantity q, double t_max,
                                   int scan_points = 4096);

/// Closed-form thresholds of the decohered TMSV, as absolute times. g, kappa are the
/// effective laser rates; one-side formulas assume the channel acts on mode B.
/// Each function handles kappa == g through its analytic limit.
namespace closed_form {

/// Two-side channel, both directions: positive root of a A^2 + b A - c = 0 mapped back to t.
ThresholdTime two_way_laser(double g, double kappa, double r);
/// Two-side thermal channel, in units of kappa t. Empty outside 0 <= nbar < (e^{2r} - 1)/2.
std::optional<double> two_way_thermal_kt(double nbar, double r);

ThresholdTime one_side_AtoB(double g, double kappa, double r);
ThresholdTime one_side_BtoA(double g, double kappa);

ThresholdTime two_side_inseparability(double g, double kappa, double r);
ThresholdTime one_side_inseparability(double g, double kappa);

/// Specializations in dimensionless time (kappa t or g t).
double two_way_loss_kt();                        // 1/2 ln 2
double two_way_gain_gt(double r);                // 1/2 ln[(3 + sqrt(1 + 8 tanh^2 r)) / 4]
double one_side_gain_AtoB_gt(double r);          // 1/2 ln(2 - sech^2 r)
double one_side_thermal_AtoB_kt(double nbar, double r);
double one_side_loss_BtoA_kt();                  // 1/2 ln 2
double one_side_thermal_BtoA_kt(double nbar);    // 1/2 ln[(2 nbar + 2)/(2 nbar + 1)]
double two_side_gain_inseparability_gt(double r); // 1/2 ln(1 + tanh r)
double two_side_thermal_inseparability_kt(double nbar, double r);
double one_side_thermal_inseparability_kt(double nbar); // 1/2 ln[(nbar + 1)/nbar]

} // namespace closed_form

struct ThresholdResult {
    std::string channel;
    Quantity quantity = Quantity::SteerTwoWay;
    double r = 0.0;
    std::optional<ThresholdTime> closed; ///< absent for channels without a closed form
    ThresholdTime numeric = ThresholdTime::unbounded();
    bool positive_tail = false;
    /// |closed - numeric| when both finite, 0 when both unbounded, NaN otherwise.
    double agreement = 0.0;
    std::string status;
};

/// Closed form where one exists (laser-type channels, side B or two-side) plus the bisected
/// root. t_max defaults to 10 / rate, stretched to twice any finite closed-form time.
ThresholdResult threshold(const ChannelFamily& family, double r, Quantity q,
                          std::optional<double> t_max = std::nullopt);

/// Named wrappers over threshold().
ThresholdResult two_way_laser_threshold(double g, double kappa, double r);
/// Thermal two-side channel with unit kappa (times are kappa t). Outside the closed-form
/// window the reported closed value comes from the general laser expression and the
/// status is "outside-closed-form-window".
ThresholdResult two_way_thermal_threshold(double nbar, double r, double kappa = 1.0);
struct OneSideThresholds {
    ThresholdResult a_to_b;
    ThresholdResult b_to_a;
};
OneSideThresholds one_side_thresholds(double g, double kappa, double r);
ThresholdResult inseparability_threshold(double g, double kappa, double r, Side side);

/// Relative tolerance for closed form vs bisection.
inline constexpr double kThresholdAgreement = 1e-6;

} // namespace cvsteer
