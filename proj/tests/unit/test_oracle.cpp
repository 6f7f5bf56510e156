#include "cvsteer/channels.hpp"
#include "cvsteer/criteria.hpp"
#include "cvsteer/errors.hpp"
#include "cvsteer/oracle.hpp"
#include "unit/support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace cvsteer;
using namespace cvsteer::oracle;

namespace {

GaussianState decohered() { return ChannelFamily::thermal(1.0, 1.0, Side::B).evolve(make_tmsv(0.88), 0.1); }

} // namespace

TEST(OraclePdf, MatchesClosedDensity)
{
    for (const auto& s : {make_tmsv(0.5), decohered()}) {
        for (auto pair : {QuadraturePair::Position, QuadraturePair::Momentum}) {
            const auto q = pair == QuadraturePair::Position ? Quadrature::Q : Quadrature::P;
            const auto table = pdf_from_cf(s, pair);
            EXPECT_NEAR(table.mass(), 1.0, 1e-6);
            double worst = 0.0;
            for (int i = 0; i < table.grid.points; i += 3) {
                for (int j = 0; j < table.grid.points; j += 3) {
                    const double ref = joint_quadrature_density(s, q, table.grid.coord(i), table.grid.coord(j));
                    worst = std::max(worst, std::abs(table.values(i, j) - ref));
                }
            }
            EXPECT_LT(worst, 1e-7);
        }
    }
}

TEST(OraclePdf, MarginalsMatch)
{
    const auto s = decohered();
    const auto table = pdf_from_cf(s, QuadraturePair::Momentum);
    const auto mb = table.marginal(Mode::B);
    for (int k = 0; k < table.grid.points; k += 7) {
        const double ref = marginal_quadrature_density(s, Mode::B, Quadrature::P, table.grid.coord(k));
        EXPECT_NEAR(mb(k), ref, 1e-7);
    }
}

TEST(OraclePdf, RejectsCoarseWindow)
{
    const auto s = make_tmsv(1.0);
    EXPECT_THROW(pdf_from_cf(s, QuadraturePair::Position, Grid2D{1.0, 256}), InvalidArgument);
    EXPECT_THROW(pdf_from_cf(s, QuadraturePair::Position, Grid2D{8.0, 200}), InvalidArgument);
}

TEST(OraclePdf, DetectsUnderResolvedGrid)
{
    // Window wide enough but the cells are far wider than the squeezed direction.
    const auto s = make_tmsv(2.0);
    const auto g = Grid2D::for_state(s, 16);
    EXPECT_ANY_THROW(pdf_from_cf(s, QuadraturePair::Position, g));
}

TEST(OracleEntropy, MatchesClosedForms)
{
    const auto s = decohered();
    const auto tq = pdf_from_cf(s, QuadraturePair::Position);
    const auto tp = pdf_from_cf(s, QuadraturePair::Momentum);
    for (auto dir : {Direction::AtoB, Direction::BtoA}) {
        EXPECT_NEAR(numeric_entropy(tq, EntropyKind::Conditional, dir), conditional_entropy(s, dir, Quadrature::Q), 1e-5);
        EXPECT_NEAR(numeric_entropy(tp, EntropyKind::Conditional, dir), conditional_entropy(s, dir, Quadrature::P), 1e-5);
        EXPECT_NEAR(numeric_entropy(tq, EntropyKind::Marginal, dir),
                    marginal_entropy(s, steered_mode(dir), Quadrature::Q), 1e-5);
    }
    EXPECT_NEAR(numeric_entropy(tq, EntropyKind::Joint), joint_entropy(s, Quadrature::Q), 1e-5);
}

TEST(OracleInferred, MatchesClosedForms)
{
    const auto s = decohered();
    const auto tq = pdf_from_cf(s, QuadraturePair::Position);
    const auto tp = pdf_from_cf(s, QuadraturePair::Momentum);
    for (auto dir : {Direction::AtoB, Direction::BtoA}) {
        EXPECT_NEAR(numeric_inferred_variance(tq, dir), reid_inferred_variance(s, dir, Quadrature::Q), 1e-6);
        EXPECT_NEAR(numeric_inferred_variance(tp, dir), reid_inferred_variance(s, dir, Quadrature::P), 1e-6);
    }
}

TEST(OracleInferred, DisplacedState)
{
    Vec4 m;
    m << 0.8, -0.3, -1.1, 0.6;
    const GaussianState s(m, make_tmsv(0.4).cm());
    const auto tq = pdf_from_cf(s, QuadraturePair::Position);
    EXPECT_NEAR(numeric_inferred_variance(tq, Direction::AtoB), reid_inferred_variance(s, Direction::AtoB, Quadrature::Q),
                1e-6);
}

TEST(OracleMoments, RecoverCovarianceAndMean)
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        const auto s = sample_physical_state(rng, {3.0, 1.0, 2.0});
        const Mat4 num = numeric_covariance_matrix(s);
        EXPECT_LT(test::max_abs_diff(num, s.cm()), 1e-7);
        EXPECT_LT((numeric_mean(s) - s.mean()).cwiseAbs().maxCoeff(), 1e-7);
    }
}

TEST(OracleSymplectic, MatchesClosedForm)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Mat4 v = sample_physical_state(rng).cm();
        const auto a = symplectic_eigenvalues(v);
        const auto b = numeric_symplectic(v);
        EXPECT_NEAR(a.larger, b.larger, 1e-9 * a.larger);
        EXPECT_NEAR(a.smaller, b.smaller, 1e-9 * a.larger);
        const Mat4 pt = partial_transpose(v, Mode::B);
        const auto c = symplectic_eigenvalues(pt);
        const auto d = numeric_symplectic(pt);
        EXPECT_NEAR(c.smaller, d.smaller, 1e-9 * c.larger);
    }
}

TEST(OracleSampler, PhysicalAndReproducible)
{
    std::mt19937_64 a(123), b(123);
    for (int i = 0; i < 100; ++i) {
        const auto x = sample_physical_state(a);
        const auto y = sample_physical_state(b);
        EXPECT_EQ(x.cm(), y.cm());
        EXPECT_TRUE(is_physical(x.cm()));
    }
}

TEST(OracleGrid, ForState)
{
    const auto g = Grid2D::for_state(make_tmsv(0.5));
    EXPECT_NEAR(g.half_width, 8.0 * std::sqrt(std::cosh(1.0)), 1e-12);
    EXPECT_EQ(g.points, 256);
    EXPECT_NEAR(g.coord(0) + g.coord(255), 0.0, 1e-12);
}
