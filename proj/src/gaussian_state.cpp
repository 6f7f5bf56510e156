// gaussian_state.cpp: two-mode Gaussian state core

#include "cvsteer/gaussian_state.hpp"

#include "cvsteer/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cvsteer {

namespace {

double det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

bool positive_definite(const Mat4& cm)
{
    Eigen::LLT<Mat4> llt(cm);
    return llt.info() == Eigen::Success;
}

// Inverse square root of a 2x2 symmetric positive definite matrix:
// sqrt(M) = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)).
Mat2 inverse_sqrt(const Mat2& m)
{
    const double s = std::sqrt(det2(m));
    const double t = std::sqrt(m.trace() + 2.0 * s);
    const Mat2 root = (m + s * Mat2::Identity()) / t;
    const double d = det2(root);
    Mat2 inv;
    inv << root(1, 1) / d, -root(0, 1) / d, -root(1, 0) / d, root(0, 0) / d;
    return inv;
}

} // namespace

GaussianState::GaussianState(const Vec4& mean, const Mat4& cm)
{
    if (!mean.allFinite() || !cm.allFinite()) {
        throw InvalidArgument("GaussianState: non-finite mean or covariance entry");
    }
    const double scale = std::max(1.0, cm.cwiseAbs().maxCoeff());
    const double asym = (cm - cm.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSymmetryTolerance * scale) {
        throw InvalidArgument("GaussianState: covariance matrix is not symmetric (max asymmetry " +
                              std::to_string(asym) + ")");
    }
    cm_ = 0.5 * (cm + cm.transpose());
    mean_ = mean;
    if (!positive_definite(cm_)) {
        throw InvalidArgument("GaussianState: covariance matrix is not positive definite");
    }
    const auto nu = symplectic_eigenvalues(cm_);
    if (nu.smaller < 1.0 - kPhysicalityTolerance) {
        throw InvalidArgument("GaussianState: uncertainty relation violated (smallest symplectic eigenvalue " +
                              std::to_string(nu.smaller) + ")");
    }
}

Mat2 GaussianState::block(Mode m) const
{
    const int o = m == Mode::A ? 0 : 2;
    return cm_.block<2, 2>(o, o);
}

double GaussianState::variance(Mode m, Quadrature q) const
{
    const int i = phase_space_index(m, q);
    return cm_(i, i);
}

double GaussianState::covariance(Quadrature q) const
{
    return cm_(phase_space_index(Mode::A, q), phase_space_index(Mode::B, q));
}

double GaussianState::first_moment(Mode m, Quadrature q) const
{
    return mean_(phase_space_index(m, q));
}

GaussianState make_tmsv(double r)
{
    if (!std::isfinite(r) || r < 0.0) {
        throw InvalidArgument("make_tmsv: squeezing must be finite and non-negative");
    }
    const double c = std::cosh(2.0 * r);
    const double s = std::sinh(2.0 * r);
    Mat4 cm = c * Mat4::Identity();
    cm(0, 2) = cm(2, 0) = s;
    cm(1, 3) = cm(3, 1) = -s;
    return GaussianState(cm);
}

std::complex<double> cf_eval(const GaussianState& state, const CfPoint& pt)
{
    Vec4 zeta;
    zeta << pt.p1, -pt.q1, pt.p2, -pt.q2;
    const double quad = zeta.dot(state.cm() * zeta);
    const double phase = zeta.dot(state.mean());
    return std::exp(std::complex<double>(-0.5 * quad, phase));
}

const Mat4& symplectic_form()
{
    static const Mat4 omega = [] {
        Mat4 o = Mat4::Zero();
        o(0, 1) = o(2, 3) = 1.0;
        o(1, 0) = o(3, 2) = -1.0;
        return o;
    }();
    return omega;
}

Mat4 partial_transpose(const Mat4& cm, Mode m)
{
    const int k = phase_space_index(m, Quadrature::P);
    Mat4 out = cm;
    out.row(k) *= -1.0;
    out.col(k) *= -1.0;
    return out;
}

Mat4 partial_transpose(const GaussianState& state, Mode m)
{
    return partial_transpose(state.cm(), m);
}

SymplecticSpectrum symplectic_eigenvalues(const Mat4& cm)
{
    if (!cm.allFinite() || !positive_definite(cm)) {
        throw InvalidArgument("symplectic_eigenvalues: matrix is not positive definite");
    }
    const Mat2 A = cm.block<2, 2>(0, 0);
    const Mat2 B = cm.block<2, 2>(2, 2);
    const Mat2 C = cm.block<2, 2>(0, 2);

    // Local symplectic maps S_A = sqrt(a) A^{-1/2}, S_B = sqrt(b) B^{-1/2} bring the
    // local blocks to a I and b I.
    const double a = std::sqrt(det2(A));
    const double b = std::sqrt(det2(B));
    const Mat2 sa = std::sqrt(a) * inverse_sqrt(A);
    const Mat2 sb = std::sqrt(b) * inverse_sqrt(B);
    const Mat2 c = sa * C * sb.transpose();

    // Signed singular values c1 = q + h, c2 = q - h of the correlation block.
    const double e = 0.5 * (c(0, 0) + c(1, 1));
    const double f = 0.5 * (c(0, 0) - c(1, 1));
    const double g = 0.5 * (c(1, 0) + c(0, 1));
    const double h = 0.5 * (c(1, 0) - c(0, 1));
    const double q = std::hypot(e, h);
    const double w = std::hypot(f, g);
    const double c1 = q + w;
    const double c2 = q - w;

    const double delta = a * a + b * b + 2.0 * c1 * c2;
    // Delta^2 - 4 det V = (a^2 - b^2)^2 + 4 (a c1 + b c2)(a c2 + b c1), regrouped.
    const double sum2 = (a + b) * (a + b);
    const double diff2 = (a - b) * (a - b);
    const double disc = std::max(0.0, sum2 * (diff2 + 4.0 * q * q) - 4.0 * diff2 * w * w);
    const double det_v = (a * b - c1 * c1) * (a * b - c2 * c2);

    const double big2 = 0.5 * (delta + std::sqrt(disc));
    const double big = std::sqrt(big2);
    const double small = std::sqrt(std::max(0.0, det_v)) / big;
    return {std::max(big, small), std::min(big, small)};
}

bool is_physical(const Mat4& cm, double tol)
{
    if (!cm.allFinite() || !positive_definite(cm)) return false;
    return symplectic_eigenvalues(cm).smaller >= 1.0 - tol;
}

bool is_quadrature_decoupled(const Mat4& cm, double tol)
{
    const double scale = std::max(1.0, cm.cwiseAbs().maxCoeff());
    for (int i : {0, 2}) {
        for (int j : {1, 3}) {
            if (std::abs(cm(i, j)) > tol * scale) return false;
        }
    }
    return true;
}

double marginal_quadrature_density(const GaussianState& state, Mode m, Quadrature q, double x)
{
    const double var = 0.5 * state.variance(m, q);
    const double mu = state.first_moment(m, q) / std::numbers::sqrt2;
    const double d = x - mu;
    return std::exp(-0.5 * d * d / var) / std::sqrt(2.0 * std::numbers::pi * var);
}

double joint_quadrature_density(const GaussianState& state, Quadrature q, double x1, double x2)
{
    const double v1 = 0.5 * state.variance(Mode::A, q);
    const double v2 = 0.5 * state.variance(Mode::B, q);
    const double e = 0.5 * state.covariance(q);
    const double det = v1 * v2 - e * e;
    const double d1 = x1 - state.first_moment(Mode::A, q) / std::numbers::sqrt2;
    const double d2 = x2 - state.first_moment(Mode::B, q) / std::numbers::sqrt2;
    const double form = (v2 * d1 * d1 - 2.0 * e * d1 * d2 + v1 * d2 * d2) / det;
    return std::exp(-0.5 * form) / (2.0 * std::numbers::pi * std::sqrt(det));
}

} // namespace cvsteer
