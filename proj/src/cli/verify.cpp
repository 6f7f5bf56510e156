// verify.cpp: oracle closure suites

#include "cvsteer/cli/verify.hpp"

#include "cvsteer/cli/format.hpp"
#include "cvsteer/criteria.hpp"
#include "cvsteer/errors.hpp"
#include "cvsteer/measures.hpp"
#include "cvsteer/oracle.hpp"
#include "cvsteer/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace cvsteer::cli {

namespace {

constexpr double kPdfTol = 1e-7;
constexpr double kEntropyTol = 1e-5;
constexpr double kInferredTol = 1e-6;
constexpr double kMomentsTol = 1e-7;
constexpr double kSymplecticTol = 1e-9;

struct Tracker {
    SuiteResult res;

    Tracker(std::string name, double tol)
    {
        res.name = std::move(name);
        res.tolerance = tol;
    }

    void add(double deviation, const std::string& where)
    {
        ++res.checks;
        if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
        if (res.checks == 1 || deviation > res.max_deviation) {
            res.max_deviation = deviation;
            res.worst = where;
        }
    }
};

const char* pair_name(oracle::QuadraturePair p) { return p == oracle::QuadraturePair::Position ? "Q" : "P"; }

Quadrature quadrature_of(oracle::QuadraturePair p)
{
    return p == oracle::QuadraturePair::Position ? Quadrature::Q : Quadrature::P;
}

void table_suites(bool pdf, bool entropy, bool inferred, std::vector<SuiteResult>& out)
{
    Tracker tp("pdf", kPdfTol);
    Tracker te("entropy", kEntropyTol);
    Tracker ti("inferred", kInferredTol);
    for (const auto& pt : standard_grid()) {
        const GaussianState s = pt.family.evolve(make_tmsv(pt.r), pt.kt);
        for (auto pair : {oracle::QuadraturePair::Position, oracle::QuadraturePair::Momentum}) {
            const auto table = oracle::pdf_from_cf(s, pair);
            const Quadrature q = quadrature_of(pair);
            const std::string where = pt.label() + ",pair=" + pair_name(pair);
            if (pdf) {
                double dev = 0.0;
                const int n = table.grid.points;
                for (int a = 0; a < n; ++a) {
                    for (int b = 0; b < n; ++b) {
                        const double exact =
                            joint_quadrature_density(s, q, table.grid.coord(a), table.grid.coord(b));
                        dev = std::max(dev, std::abs(table.values(a, b) - exact));
                    }
                }
                tp.add(dev, where);
            }
            if (entropy) {
                using oracle::EntropyKind;
                te.add(std::abs(oracle::numeric_entropy(table, EntropyKind::Joint) - joint_entropy(s, q)),
                       where + ",joint");
                for (Direction d : {Direction::AtoB, Direction::BtoA}) {
                    te.add(std::abs(oracle::numeric_entropy(table, EntropyKind::Marginal, d) -
                                    marginal_entropy(s, steered_mode(d), q)),
                           where + ",marginal");
                    te.add(std::abs(oracle::numeric_entropy(table, EntropyKind::Conditional, d) -
                                    conditional_entropy(s, d, q)),
                           where + ",conditional " + to_string(d));
                }
            }
            if (inferred) {
                for (Direction d : {Direction::AtoB, Direction::BtoA}) {
                    ti.add(std::abs(oracle::numeric_inferred_variance(table, d) - reid_inferred_variance(s, d, q)),
                           where + "," + to_string(d));
                }
            }
        }
    }
    if (pdf) out.push_back(tp.res);
    if (entropy) out.push_back(te.res);
    if (inferred) out.push_back(ti.res);
}

SuiteResult moments_suite()
{
    Tracker t("moments", kMomentsTol);
    for (const auto& pt : standard_grid()) {
        const GaussianState s = pt.family.evolve(make_tmsv(pt.r), pt.kt);
        const double dv = (oracle::numeric_covariance_matrix(s) - s.cm()).cwiseAbs().maxCoeff();
        const double dm = (oracle::numeric_mean(s) - s.mean()).cwiseAbs().maxCoeff();
        t.add(std::max(dv, dm), pt.label());
    }
    std::mt19937_64 rng(20240611);
    oracle::RandomStateOptions opts;
    opts.max_mean = 1.0;
    for (int i = 0; i < 100; ++i) {
        const GaussianState s = oracle::sample_physical_state(rng, opts);
        const double dv = (oracle::numeric_covariance_matrix(s) - s.cm()).cwiseAbs().maxCoeff();
        const double dm = (oracle::numeric_mean(s) - s.mean()).cwiseAbs().maxCoeff();
        t.add(std::max(dv, dm), "random#" + std::to_string(i));
    }
    return t.res;
}

SuiteResult symplectic_suite()
{
    Tracker t("symplectic", kSymplecticTol);
    auto check = [&](const Mat4& cm, const std::string& where) {
        const auto a = symplectic_eigenvalues(cm);
        const auto b = oracle::numeric_symplectic(cm);
        t.add(std::max(std::abs(a.larger - b.larger), std::abs(a.smaller - b.smaller)), where);
    };
    for (const auto& pt : standard_grid()) {
        const GaussianState s = pt.family.evolve(make_tmsv(pt.r), pt.kt);
        check(s.cm(), pt.label());
        check(partial_transpose(s, Mode::B), pt.label() + ",transposed");
    }
    std::mt19937_64 rng(1234567);
    for (int i = 0; i < 1000; ++i) {
        const GaussianState s = oracle::sample_physical_state(rng);
        check(s.cm(), "random#" + std::to_string(i));
        check(partial_transpose(s, Mode::B), "random#" + std::to_string(i) + ",transposed");
    }
    return t.res;
}

SuiteResult thresholds_suite()
{
    Tracker t("thresholds", kThresholdAgreement);
    auto record = [&](const ThresholdResult& res) {
        double dev = std::numeric_limits<double>::infinity();
        if (res.closed && res.closed->is_finite() && res.numeric.is_finite()) {
            dev = res.agreement / std::max(1.0, res.closed->value());
        } else if (res.closed && !res.closed->is_finite() && !res.numeric.is_finite()) {
            dev = 0.0;
        }
        t.add(dev, res.channel + ",r=" + format_number(res.r) + "," + to_string(res.quantity) + ",status=" +
                       res.status);
    };
    for (double r : {0.3, 0.5, 0.88}) {
        for (const auto& f : standard_families()) {
            if (f.side == Side::Both) {
                record(threshold(f, r, Quantity::SteerTwoWay));
                record(threshold(f, r, Quantity::Inseparability));
            } else {
                record(threshold(f, r, Quantity::SteerAtoB));
                record(threshold(f, r, Quantity::SteerBtoA));
                record(threshold(f, r, Quantity::Inseparability));
            }
        }
        record(two_way_thermal_threshold(1.0, r));
    }
    return t.res;
}

} // namespace

const std::vector<std::string>& verify_suite_names()
{
    static const std::vector<std::string> names = {"pdf", "entropy", "inferred", "moments", "symplectic", "thresholds"};
    return names;
}

std::string GridPoint::label() const
{
    return "r=" + format_number(r) + ",kt=" + format_number(kt) + "," + family.describe();
}

std::vector<ChannelFamily> standard_families()
{
    std::vector<ChannelFamily> out;
    for (Side side : {Side::B, Side::Both}) {
        for (double gamma : {0.0, 0.5, 1.0, 2.0}) out.push_back(ChannelFamily::laser(gamma, 1.0, side));
        out.push_back(ChannelFamily::thermal(1.0, 1.0, side));
    }
    return out;
}

std::vector<GridPoint> standard_grid()
{
    std::vector<GridPoint> out;
    for (double r : {0.3, 0.5, 0.88}) {
        for (int i = 0; i <= 6; ++i) {
            for (const auto& f : standard_families()) out.push_back({r, 0.1 * i, f});
        }
    }
    return out;
}

std::vector<SuiteResult> run_verify(const std::string& which)
{
    const auto& names = verify_suite_names();
    if (which != "all" && std::find(names.begin(), names.end(), which) == names.end()) {
        throw InvalidArgument("unknown verify suite '" + which + "'");
    }
    auto want = [&](const char* n) { return which == "all" || which == n; };
    std::vector<SuiteResult> out;
    if (want("pdf") || want("entropy") || want("inferred")) {
        table_suites(want("pdf"), want("entropy"), want("inferred"), out);
    }
    if (want("moments")) out.push_back(moments_suite());
    if (want("symplectic")) out.push_back(symplectic_suite());
    if (want("thresholds")) out.push_back(thresholds_suite());
    return out;
}

} // namespace cvsteer::cli
