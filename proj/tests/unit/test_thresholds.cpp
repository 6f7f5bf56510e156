#include "cvsteer/errors.hpp"
#include "cvsteer/measures.hpp"
#include "cvsteer/thresholds.hpp"
#include "unit/support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace cvsteer;

namespace {

void expect_close(const ThresholdTime& a, double b, double rel, const std::string& what = {})
{
    ASSERT_TRUE(a.is_finite()) << what;
    EXPECT_NEAR(a.value(), b, rel * std::max(1.0, std::abs(b))) << what;
}

} // namespace

TEST(ThresholdTime, Sentinel)
{
    const auto inf = ThresholdTime::unbounded();
    EXPECT_FALSE(inf.is_finite());
    EXPECT_THROW(inf.value(), std::logic_error);
    EXPECT_EQ(inf.to_string(), "inf");
    EXPECT_TRUE(std::isinf(inf.as_double()));
    EXPECT_EQ(ThresholdTime::finite(0.5).as_double(), 0.5);
    EXPECT_EQ(ThresholdTime::finite(0.5), ThresholdTime::finite(0.5));
    EXPECT_FALSE(ThresholdTime::finite(0.5) == inf);
}

TEST(ClosedForm, Specializations)
{
    const double ln2 = std::log(2.0);
    EXPECT_NEAR(closed_form::two_way_loss_kt(), 0.5 * ln2, 1e-15);
    EXPECT_NEAR(closed_form::one_side_loss_BtoA_kt(), 0.5 * ln2, 1e-15);
    for (double r : {0.2, 0.5, 1.0, 2.0}) {
        expect_close(closed_form::two_way_laser(0.0, 1.0, r), 0.5 * ln2, 1e-14);
        expect_close(closed_form::two_way_laser(1.0, 0.0, r), closed_form::two_way_gain_gt(r), 1e-14);
        EXPECT_NEAR(closed_form::two_way_gain_gt(r),
                    0.5 * std::log((3 + std::sqrt(1 + 8 * std::tanh(r) * std::tanh(r))) / 4), 1e-15);
        EXPECT_LT(closed_form::two_way_gain_gt(r), 0.5 * std::log(1.5));
        expect_close(closed_form::one_side_AtoB(1.0, 0.0, r), closed_form::one_side_gain_AtoB_gt(r), 1e-14);
        EXPECT_NEAR(closed_form::one_side_gain_AtoB_gt(r), 0.5 * std::log(2 - 1 / std::pow(std::cosh(r), 2)), 1e-15);
        EXPECT_FALSE(closed_form::one_side_AtoB(0.0, 1.0, r).is_finite());
        expect_close(closed_form::two_side_inseparability(1.0, 0.0, r),
                     closed_form::two_side_gain_inseparability_gt(r), 1e-14);
        EXPECT_NEAR(closed_form::two_side_gain_inseparability_gt(r), 0.5 * std::log1p(std::tanh(r)), 1e-15);
        EXPECT_FALSE(closed_form::two_side_inseparability(0.0, 1.0, r).is_finite());
        for (double nbar : {0.1, 0.5, 2.0}) {
            expect_close(closed_form::one_side_AtoB(nbar, nbar + 1, r), closed_form::one_side_thermal_AtoB_kt(nbar, r),
                         1e-14);
            expect_close(closed_form::two_side_inseparability(nbar, nbar + 1, r),
                         closed_form::two_side_thermal_inseparability_kt(nbar, r), 1e-14);
        }
    }
    expect_close(closed_form::one_side_BtoA(0.0, 1.0), 0.5 * ln2, 1e-15);
    EXPECT_FALSE(closed_form::one_side_BtoA(1.0, 0.0).is_finite());
    for (double nbar : {0.1, 0.5, 2.0}) {
        expect_close(closed_form::one_side_BtoA(nbar, nbar + 1), closed_form::one_side_thermal_BtoA_kt(nbar), 1e-14);
        EXPECT_NEAR(closed_form::one_side_thermal_BtoA_kt(nbar), 0.5 * std::log((2 * nbar + 2) / (2 * nbar + 1)),
                    1e-15);
        expect_close(closed_form::one_side_inseparability(nbar, nbar + 1),
                     closed_form::one_side_thermal_inseparability_kt(nbar), 1e-14);
        EXPECT_NEAR(closed_form::one_side_thermal_inseparability_kt(nbar), 0.5 * std::log((nbar + 1) / nbar), 1e-15);
    }
}

TEST(ClosedForm, OneSideInseparabilityIsSqueezingIndependent)
{
    for (double g : {0.25, 0.5, 2.0}) {
        const double expected = std::log(1.0 / g) / (2 * (1.0 - g));
        expect_close(closed_form::one_side_inseparability(g, 1.0), expected, 1e-14);
        for (double r : {0.3, 0.6, 1.0}) {
            const auto res = inseparability_threshold(g, 1.0, r, Side::B);
            expect_close(res.numeric, expected, 1e-8, "g=" + std::to_string(g));
        }
    }
}

TEST(ClosedForm, BalancedRatesLimit)
{
    const double r = 0.7;
    for (double d : {1e-9, 1e-6}) {
        const double g = 1.0, k = 1.0 + d;
        const auto near = [&](const ThresholdTime& a, const ThresholdTime& b) {
            ASSERT_TRUE(a.is_finite() && b.is_finite());
            EXPECT_NEAR(a.value(), b.value(), 10 * d);
        };
        near(closed_form::two_way_laser(g, k, r), closed_form::two_way_laser(1.0, 1.0, r));
        near(closed_form::one_side_AtoB(g, k, r), closed_form::one_side_AtoB(1.0, 1.0, r));
        near(closed_form::one_side_BtoA(g, k), closed_form::one_side_BtoA(1.0, 1.0));
        near(closed_form::two_side_inseparability(g, k, r), closed_form::two_side_inseparability(1.0, 1.0, r));
        near(closed_form::one_side_inseparability(g, k), closed_form::one_side_inseparability(1.0, 1.0));
    }
    expect_close(closed_form::one_side_BtoA(1.0, 1.0), 0.25, 1e-15);
    expect_close(closed_form::one_side_inseparability(1.0, 1.0), 0.5, 1e-15);
    expect_close(closed_form::one_side_AtoB(1.0, 1.0, r), std::pow(std::sinh(r), 2) / (2 * std::cosh(2 * r)), 1e-15);
    expect_close(closed_form::two_side_inseparability(1.0, 1.0, r), std::tanh(r) / (2 * (1 + std::tanh(r))), 1e-15);
}

TEST(Thresholds, ClosedFormsMatchBisection)
{
    int checked = 0;
    for (double gamma : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
        for (Side side : {Side::B, Side::Both}) {
            const auto f = ChannelFamily::laser(gamma, 1.0, side);
            for (double r : {0.2, 0.5, 1.0, 1.5}) {
                for (auto q : {Quantity::SteerAtoB, Quantity::SteerBtoA, Quantity::SteerTwoWay, Quantity::Inseparability}) {
                    const auto res = threshold(f, r, q);
                    const std::string what = f.describe() + " r=" + std::to_string(r) + " " + to_string(q);
                    ASSERT_TRUE(res.closed.has_value()) << what;
                    EXPECT_EQ(res.status, "ok") << what;
                    if (res.closed->is_finite()) {
                        expect_close(res.numeric, res.closed->value(), 1e-8, what);
                    } else {
                        EXPECT_FALSE(res.numeric.is_finite()) << what;
                        EXPECT_TRUE(res.positive_tail) << what;
                    }
                    ++checked;
                }
            }
        }
    }
    EXPECT_EQ(checked, 192);
}

TEST(Thresholds, SideAMirrorsSideB)
{
    const auto b = threshold(ChannelFamily::laser(0.5, 1.0, Side::B), 0.5, Quantity::SteerAtoB);
    const auto a = threshold(ChannelFamily::laser(0.5, 1.0, Side::A), 0.5, Quantity::SteerBtoA);
    ASSERT_TRUE(a.closed.has_value());
    EXPECT_NEAR(a.numeric.value(), b.numeric.value(), 1e-12);
    EXPECT_NEAR(a.closed->value(), b.closed->value(), 1e-15);
}

// Reference values from tests/oracle/derive_values.py.
TEST(Thresholds, FrozenLaserValues)
{
    struct Row {
        double gamma;
        double ab, ba, two_way, en_two;
    };
    const Row rows[] = {
        {0.5, 0.16209577367282463, 0.28768207245178093, 0.097078658379495819, 0.27464263688015504},
        {1.0, 0.08798643158402865, 0.25, 0.05851594394765662, 0.15803013970713942},
        {2.0, 0.046050205684692697, 0.20273255405408219, 0.032762473420664133, 0.086005530378565125},
    };
    for (const auto& row : rows) {
        const auto one = one_side_thresholds(row.gamma, 1.0, 0.5);
        expect_close(one.a_to_b.numeric, row.ab, 1e-12);
        expect_close(*one.a_to_b.closed, row.ab, 1e-12);
        expect_close(one.b_to_a.numeric, row.ba, 1e-12);
        expect_close(*one.b_to_a.closed, row.ba, 1e-12);
        const auto two = two_way_laser_threshold(row.gamma, 1.0, 0.5);
        expect_close(two.numeric, row.two_way, 1e-12);
        expect_close(*two.closed, row.two_way, 1e-12);
        const auto en = inseparability_threshold(row.gamma, 1.0, 0.5, Side::Both);
        expect_close(en.numeric, row.en_two, 1e-12);
        // At r = 0.5 the decohered side steers longer; the two-side channel is shortest.
        EXPECT_GT(row.ba - row.ab, 1e-10);
        EXPECT_GT(row.ab - row.two_way, 1e-10);
    }
    expect_close(inseparability_threshold(0.5, 1.0, 0.5, Side::B).numeric, 0.69314718055994531, 1e-12);
}

TEST(Thresholds, FrozenThermalTwoWay)
{
    const auto inside = two_way_thermal_threshold(0.2, 0.5);
    EXPECT_EQ(inside.status, "ok");
    expect_close(inside.numeric, 0.14844421826983573, 1e-12);
    const auto inside2 = two_way_thermal_threshold(0.1, 0.88);
    expect_close(inside2.numeric, 0.24557667185589218, 1e-12);
    ASSERT_TRUE(closed_form::two_way_thermal_kt(0.2, 0.5).has_value());
    EXPECT_NEAR(*closed_form::two_way_thermal_kt(0.2, 0.5), 0.14844421826983573, 1e-12);

    const auto outside = two_way_thermal_threshold(1.0, 0.5);
    EXPECT_EQ(outside.status, "outside-closed-form-window");
    expect_close(outside.numeric, 0.048539329189747909, 1e-12);
    ASSERT_TRUE(outside.closed.has_value());
    expect_close(*outside.closed, 0.048539329189747909, 1e-12);
    EXPECT_FALSE(closed_form::two_way_thermal_kt(1.0, 0.5).has_value());
}

TEST(Thresholds, ThermalWindowEdgeIsContinuous)
{
    for (double r : {0.3, 0.5, 1.0}) {
        const double edge = std::expm1(2 * r) / 2;
        const auto below = two_way_thermal_threshold(edge * (1 - 1e-7), r);
        const auto above = two_way_thermal_threshold(edge * (1 + 1e-7), r);
        EXPECT_EQ(below.status, "ok");
        EXPECT_EQ(above.status, "outside-closed-form-window");
        ASSERT_TRUE(below.numeric.is_finite() && above.numeric.is_finite());
        EXPECT_GT(below.numeric.value(), 0.0);
        EXPECT_NEAR(below.numeric.value(), above.numeric.value(), 1e-6) << r;
    }
}

TEST(Thresholds, ThermalDecreasesWithOccupation)
{
    double prev = INFINITY;
    for (double nbar : test::linspace(0.0, 5.0, 26)) {
        const auto res = two_way_thermal_threshold(nbar, 0.5);
        ASSERT_TRUE(res.numeric.is_finite());
        EXPECT_LT(res.numeric.value(), prev) << nbar;
        prev = res.numeric.value();
    }
}

TEST(Thresholds, LaserOneSideOrderFlipsWithSqueezing)
{
    // g/kappa = 1/2: A->B and B->A thresholds cross at sinh r = 1.
    const double rc = std::asinh(1.0);
    const auto low = one_side_thresholds(0.5, 1.0, rc - 0.05);
    const auto at = one_side_thresholds(0.5, 1.0, rc);
    const auto high = one_side_thresholds(0.5, 1.0, rc + 0.05);
    EXPECT_LT(low.a_to_b.closed->value(), low.b_to_a.closed->value());
    EXPECT_NEAR(at.a_to_b.closed->value(), at.b_to_a.closed->value(), 1e-12);
    EXPECT_GT(high.a_to_b.closed->value(), high.b_to_a.closed->value());
    // For g >= kappa the order never flips.
    for (double r : {0.5, 1.0, 2.0, 4.0}) {
        const auto one = one_side_thresholds(2.0, 1.0, r);
        EXPECT_LT(one.a_to_b.closed->value(), one.b_to_a.closed->value()) << r;
    }
}

TEST(Thresholds, ThermalBalancePoint)
{
    for (double r : {0.3, 0.5, 0.88, 1.2}) {
        const double nbar = std::pow(std::sinh(r), 2);
        const auto one = one_side_thresholds(nbar, nbar + 1, r);
        EXPECT_NEAR(one.a_to_b.numeric.value(), one.b_to_a.numeric.value(), 1e-8) << r;
    }
}

TEST(Thresholds, InseparabilityOutlivesSteering)
{
    for (double gamma : {0.0, 0.5, 1.0, 2.0}) {
        for (double r : {0.3, 0.6, 1.0}) {
            for (Side side : {Side::B, Side::Both}) {
                const auto f = ChannelFamily::laser(gamma, 1.0, side);
                const double en = threshold(f, r, Quantity::Inseparability).numeric.as_double();
                for (auto q : {Quantity::SteerAtoB, Quantity::SteerBtoA}) {
                    const double st = threshold(f, r, q).numeric.as_double();
                    if (std::isinf(st)) {
                        EXPECT_TRUE(std::isinf(en)) << f.describe();
                    } else {
                        EXPECT_GT(en, st) << f.describe() << " r=" << r;
                    }
                }
            }
        }
    }
}

TEST(Thresholds, OneSideLossNeverKillsAtoB)
{
    const auto res = numeric_threshold(ChannelFamily::loss(1.0, Side::B), 0.5, Quantity::SteerAtoB, 10.0);
    EXPECT_FALSE(res.time.is_finite());
    EXPECT_TRUE(res.positive_tail);
    const auto en = numeric_threshold(ChannelFamily::loss(1.0, Side::B), 0.5, Quantity::Inseparability, 10.0);
    EXPECT_FALSE(en.time.is_finite());
}

TEST(Thresholds, GainAsymmetryPersists)
{
    const auto f = ChannelFamily::gain(1.0, Side::B);
    for (double gt : test::linspace(0.0, 15.0, 151)) {
        EXPECT_GT(steering_log_ratio(f.evolve(make_tmsv(0.5), gt), Direction::BtoA), 0.0) << gt;
    }
    EXPECT_FALSE(numeric_threshold(f, 0.5, Quantity::SteerBtoA, 15.0).time.is_finite());
}

TEST(Thresholds, NoDecoherenceNeverCrosses)
{
    const auto res = numeric_threshold(ChannelFamily::loss(0.0, Side::Both), 0.5, Quantity::SteerTwoWay, 10.0);
    EXPECT_FALSE(res.time.is_finite());
    EXPECT_TRUE(res.positive_tail);
}

TEST(Thresholds, RequiresPositiveStart)
{
    EXPECT_THROW(numeric_threshold(ChannelFamily::loss(1.0, Side::Both), 0.0, Quantity::SteerTwoWay, 1.0),
                 InvalidArgument);
    EXPECT_THROW(numeric_threshold(ChannelFamily::loss(1.0, Side::Both), 0.5, Quantity::SteerTwoWay, -1.0),
                 InvalidArgument);
}

TEST(Thresholds, PhaseSensitiveNumericOnly)
{
    const auto f = ChannelFamily::phase_sensitive(1.0, 1.0, {std::sqrt(2.0), 0.0}, Side::B);
    const auto ab = threshold(f, 0.5, Quantity::SteerAtoB);
    EXPECT_EQ(ab.status, "numeric-only");
    EXPECT_FALSE(ab.closed.has_value());
    expect_close(ab.numeric, 0.13392995266299574, 1e-12);
    expect_close(threshold(f, 0.5, Quantity::SteerBtoA).numeric, 0.34657359027997265, 1e-12);
    const auto two = threshold(ChannelFamily::phase_sensitive(1.0, 1.0, {1.0, 0.0}, Side::Both), 0.6,
                               Quantity::SteerTwoWay);
    expect_close(two.numeric, 0.068986477232377414, 1e-12);
}

TEST(Thresholds, MultiRootErrorKeepsBrackets)
{
    // No channel family here produces a non-monotone quantity; check the error contract itself.
    const MultiRootError err("two sign changes", {{0.1, 0.2}, {0.5, 0.6}});
    ASSERT_EQ(err.brackets().size(), 2u);
    EXPECT_EQ(err.brackets()[1].first, 0.5);
}

TEST(Thresholds, QuantityNames)
{
    EXPECT_STREQ(to_string(Quantity::SteerTwoWay), "steer-two-way");
    EXPECT_STREQ(to_string(Quantity::Inseparability), "inseparability");
}
