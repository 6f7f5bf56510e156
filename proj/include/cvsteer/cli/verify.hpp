// verify.hpp: oracle-vs-closed-form suites behind `cvsteer verify`

#pragma once

#include "cvsteer/channels.hpp"

#include <string>
#include <vector>

namespace cvsteer::cli {

struct SuiteResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    int checks = 0;
    std::string worst; ///< parameters of the worst case
    bool pass() const { return checks > 0 && max_deviation < tolerance; }
};

/// pdf, entropy, inferred, moments, symplectic, thresholds.
const std::vector<std::string>& verify_suite_names();

/// A decohered TMSV of the standard grid.
struct GridPoint {
    double r;
    double kt;
    ChannelFamily family;
    std::string label() const;
};

/// r in {0.3, 0.5, 0.88} x kappa t in {0, 0.1, ..., 0.6} x {laser gamma in {0, 0.5, 1, 2},
/// thermal nbar = 1} x sides {b, two}, with kappa = 1.
std::vector<GridPoint> standard_grid();
std::vector<ChannelFamily> standard_families();

/// `which` is a suite name or "all". Throws InvalidArgument for unknown names.
std::vector<SuiteResult> run_verify(const std::string& which);

} // namespace cvsteer::cli
