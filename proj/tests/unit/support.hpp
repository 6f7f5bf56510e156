// support.hpp: shared helpers for the unit tests
#pragma once

#include "cvsteer/gaussian_state.hpp"

#include <Eigen/Dense>

#include <random>
#include <vector>

namespace cvsteer::test {

inline double max_abs_diff(const Mat4& a, const Mat4& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// Swaps modes A and B of a covariance matrix.
inline Mat4 swap_modes(const Mat4& v)
{
    Eigen::PermutationMatrix<4> p;
    p.indices() << 2, 3, 0, 1;
    return p * v * p.transpose();
}

inline std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    return xs;
}

inline double uniform(std::mt19937_64& rng, double a, double b)
{
    return std::uniform_real_distribution<double>(a, b)(rng);
}

} // namespace cvsteer::test
