// oracle.cpp: Fourier-inversion densities, tabulated moments and entropies, dense spectra

#include "cvsteer/oracle.hpp"

#include "cvsteer/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace cvsteer::oracle {

namespace {

using cd = std::complex<double>;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int first_index(QuadraturePair pair) { return pair == QuadraturePair::Position ? 0 : 1; }

// CF as a function of zeta = (p1, -q1, p2, -q2).
cd chi_at(const GaussianState& s, const Vec4& zeta)
{
    return cf_eval(s, CfPoint{-zeta(1), zeta(0), -zeta(3), zeta(2)});
}

Vec4 unit(int j, double h)
{
    Vec4 v = Vec4::Zero();
    v(j) = h;
    return v;
}

cd first_difference(const GaussianState& s, int j, double h)
{
    return (chi_at(s, unit(j, h)) - chi_at(s, unit(j, -h))) / (2.0 * h);
}

cd second_difference(const GaussianState& s, int j, int k, double h)
{
    if (j == k) {
        return (chi_at(s, unit(j, h)) - 2.0 * chi_at(s, Vec4::Zero()) + chi_at(s, unit(j, -h))) / (h * h);
    }
    const Vec4 ej = unit(j, h);
    const Vec4 ek = unit(k, h);
    return (chi_at(s, ej + ek) - chi_at(s, ej - ek) - chi_at(s, ek - ej) + chi_at(s, -ej - ek)) / (4.0 * h * h);
}

constexpr double kStep = 1e-4;

} // namespace

Grid2D Grid2D::for_state(const GaussianState& state, int points)
{
    Grid2D g;
    g.half_width = 8.0 * std::sqrt(state.cm().diagonal().maxCoeff());
    g.points = points;
    return g;
}

double PdfTable::mass() const
{
    const double h = grid.spacing();
    return values.sum() * h * h;
}

Eigen::VectorXd PdfTable::marginal(Mode m) const
{
    const double h = grid.spacing();
    if (m == Mode::A) return values.rowwise().sum() * h;
    return values.colwise().sum().transpose() * h;
}

PdfTable pdf_from_cf(const GaussianState& state, QuadraturePair pair)
{
    return pdf_from_cf(state, pair, Grid2D::for_state(state));
}

PdfTable pdf_from_cf(const GaussianState& state, QuadraturePair pair, const Grid2D& grid)
{
    if (!power_of_two(grid.points) || grid.points < 16) {
        throw InvalidArgument("pdf_from_cf: grid points must be a power of two >= 16");
    }
    const int i1 = first_index(pair);
    const int i2 = i1 + 2;
    const Mat4& V = state.cm();
    const double sigma = std::sqrt(0.5 * std::max(V(i1, i1), V(i2, i2)));
    if (!(grid.half_width >= 6.0 * sigma)) {
        throw InvalidArgument("pdf_from_cf: half width below 6 standard deviations");
    }

    // The CF decays as exp(-lambda_min u^2 / 2) in the conjugate variables.
    const double tr = V(i1, i1) + V(i2, i2);
    const double det = V(i1, i1) * V(i2, i2) - V(i1, i2) * V(i1, i2);
    const double lmin = det / (0.5 * tr + std::sqrt(0.25 * tr * tr - det));
    const double u_max = 9.0 / std::sqrt(lmin);
    // Period of the reconstructed density is 2 pi / (sqrt2 h_u) = 2 L.
    const double h_u = std::numbers::pi / (std::numbers::sqrt2 * grid.half_width);
    const int m = 2 * static_cast<int>(std::ceil(u_max / h_u)) + 1;
    const int centre = m / 2;

    Eigen::MatrixXcd chi(m, m);
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            Vec4 zeta = Vec4::Zero();
            zeta(i1) = (j - centre) * h_u;
            zeta(i2) = (k - centre) * h_u;
            chi(j, k) = chi_at(state, zeta);
        }
    }
    const int n = grid.points;
    Eigen::MatrixXcd kernel(n, m);
    for (int a = 0; a < n; ++a) {
        const double x = grid.coord(a);
        for (int j = 0; j < m; ++j) {
            kernel(a, j) = std::polar(1.0, -std::numbers::sqrt2 * x * (j - centre) * h_u);
        }
    }
    const Eigen::MatrixXcd full = kernel * chi * kernel.transpose();

    PdfTable table;
    table.grid = grid;
    table.values = full.real() * (h_u * h_u / (2.0 * std::numbers::pi * std::numbers::pi));

    if (table.values.minCoeff() < -1e-9) {
        throw NumericError("pdf_from_cf: negative density beyond ringing tolerance");
    }
    const double total = table.mass();
    if (std::abs(total - 1.0) > 1e-6) {
        throw GridResolutionError("pdf_from_cf: reconstructed mass " + std::to_string(total));
    }
    const int band = std::max(1, n / 16);
    const double h = grid.spacing();
    double edge = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a < band || b < band || a >= n - band || b >= n - band) edge += table.values(a, b);
        }
    }
    if (edge * h * h > 1e-6) {
        throw GridResolutionError("pdf_from_cf: edge band mass " + std::to_string(edge * h * h));
    }
    return table;
}

double numeric_inferred_variance(const PdfTable& table, Direction dir)
{
    const int n = table.grid.points;
    const double h2 = table.grid.spacing() * table.grid.spacing();
    const bool a_steers = dir == Direction::AtoB;
    // x = steering outcome, y = steered outcome
    double w = 0, mx = 0, my = 0, mxx = 0, mxy = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const double p = table.values(a, b) * h2;
            const double x = table.grid.coord(a_steers ? a : b);
            const double y = table.grid.coord(a_steers ? b : a);
            w += p;
            mx += p * x;
            my += p * y;
            mxx += p * x * x;
            mxy += p * x * y;
        }
    }
    mx /= w;
    my /= w;
    const double vx = mxx / w - mx * mx;
    const double cxy = mxy / w - mx * my;
    if (!(vx > 0.0)) {
        throw DegenerateInput("numeric_inferred_variance: degenerate steering marginal");
    }
    // Normal equations for y_est = d - lambda x.
    const double lambda = -cxy / vx;
    const double d = my + lambda * mx;
    double resid = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const double x = table.grid.coord(a_steers ? a : b);
            const double y = table.grid.coord(a_steers ? b : a);
            const double e = y - d + lambda * x;
            resid += table.values(a, b) * h2 * e * e;
        }
    }
    return resid / w;
}

double numeric_entropy(const PdfTable& table, EntropyKind kind, Direction dir)
{
    if (table.values.minCoeff() < -1e-9) {
        throw NumericError("numeric_entropy: negative density beyond ringing tolerance");
    }
    const double h = table.grid.spacing();
    auto entropy_1d = [h](const Eigen::VectorXd& p) {
        double s = 0.0;
        for (double v : p) {
            if (v > 0.0) s -= v * std::log(v);
        }
        return s * h;
    };
    auto entropy_2d = [&] {
        double s = 0.0;
        for (Eigen::Index i = 0; i < table.values.size(); ++i) {
            const double v = table.values.data()[i];
            if (v > 0.0) s -= v * std::log(v);
        }
        return s * h * h;
    };
    switch (kind) {
    case EntropyKind::Marginal: return entropy_1d(table.marginal(steered_mode(dir)));
    case EntropyKind::Joint: return entropy_2d();
    case EntropyKind::Conditional: return entropy_2d() - entropy_1d(table.marginal(steering_mode(dir)));
    }
    throw InvalidArgument("numeric_entropy: unknown kind");
}

Vec4 numeric_mean(const GaussianState& state)
{
    Vec4 out;
    for (int j = 0; j < 4; ++j) {
        const cd d = (4.0 * first_difference(state, j, kStep) - first_difference(state, j, 2.0 * kStep)) / 3.0;
        out(j) = d.imag(); // -i d chi
    }
    return out;
}

double numeric_second_moment(const GaussianState& state, int j, int k)
{
    if (j < 0 || j > 3 || k < 0 || k > 3) {
        throw InvalidArgument("numeric_second_moment: index out of range");
    }
    const cd d = (4.0 * second_difference(state, j, k, kStep) - second_difference(state, j, k, 2.0 * kStep)) / 3.0;
    return -d.real();
}

Mat4 numeric_covariance_matrix(const GaussianState& state)
{
    const Vec4 mu = numeric_mean(state);
    Mat4 v;
    for (int j = 0; j < 4; ++j) {
        for (int k = j; k < 4; ++k) {
            v(j, k) = v(k, j) = numeric_second_moment(state, j, k) - mu(j) * mu(k);
        }
    }
    return v;
}

SymplecticSpectrum numeric_symplectic(const Mat4& cm)
{
    Eigen::EigenSolver<Mat4> es(symplectic_form() * cm, false);
    if (es.info() != Eigen::Success) {
        throw NumericError("numeric_symplectic: eigensolver failed");
    }
    std::array<double, 4> mod{};
    for (int i = 0; i < 4; ++i) mod[i] = std::abs(es.eigenvalues()(i));
    std::sort(mod.begin(), mod.end(), std::greater<>());
    const double tol = 1e-8 * std::max(1.0, mod[0]);
    if (std::abs(mod[0] - mod[1]) > tol || std::abs(mod[2] - mod[3]) > tol) {
        throw NumericError("numeric_symplectic: eigenvalues do not pair as +-i nu");
    }
    return {0.5 * (mod[0] + mod[1]), 0.5 * (mod[2] + mod[3])};
}

namespace {

// Real symplectic image of a 2x2 unitary acting on (a1, a2), in (Q1, P1, Q2, P2) order.
Mat4 passive(const Eigen::Matrix2cd& u)
{
    Mat4 s = Mat4::Zero();
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const double x = u(r, c).real();
            const double y = u(r, c).imag();
            s(2 * r, 2 * c) = x;
            s(2 * r, 2 * c + 1) = -y;
            s(2 * r + 1, 2 * c) = y;
            s(2 * r + 1, 2 * c + 1) = x;
        }
    }
    return s;
}

Eigen::Matrix2cd random_unitary(std::mt19937_64& rng)
{
    std::normal_distribution<double> n01;
    Eigen::Matrix2cd z;
    for (int i = 0; i < 4; ++i) z(i / 2, i % 2) = cd(n01(rng), n01(rng));
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
    return qr.householderQ();
}

} // namespace

GaussianState sample_physical_state(std::mt19937_64& rng, const RandomStateOptions& opts)
{
    std::uniform_real_distribution<double> thermal(1.0, 1.0 + opts.max_thermal);
    std::uniform_real_distribution<double> squeeze(-opts.max_squeezing, opts.max_squeezing);
    std::uniform_real_distribution<double> shift(-opts.max_mean, opts.max_mean);

    const double nu1 = thermal(rng);
    const double nu2 = thermal(rng);
    const double s1 = squeeze(rng);
    const double s2 = squeeze(rng);
    Vec4 z;
    z << std::exp(s1), std::exp(-s1), std::exp(s2), std::exp(-s2);
    const Mat4 S = passive(random_unitary(rng)) * z.asDiagonal() * passive(random_unitary(rng));
    Vec4 d;
    d << nu1, nu1, nu2, nu2;
    const Mat4 V = S * d.asDiagonal() * S.transpose();

    Vec4 mean = Vec4::Zero();
    if (opts.max_mean > 0.0) {
        for (int i = 0; i < 4; ++i) mean(i) = shift(rng);
    }
    return GaussianState(mean, 0.5 * (V + V.transpose()));
}

} // namespace cvsteer::oracle
