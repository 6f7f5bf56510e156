// gaussian_state.hpp: two-mode Gaussian states, characteristic functions, symplectic algebra
//
// Conventions used throughout the library:
//   * quadratures Q = a + a^dagger, P = (a - a^dagger)/i, so [Q, P] = 2i and the
//     vacuum covariance matrix is the identity;
//   * phase-space vectors are ordered (Q1, P1, Q2, P2); mode A is mode 1, mode B is mode 2;
//   * the characteristic function is the Weyl-symmetric chi(q, p) = tr[rho D(q, p)] with
//     D(q, p) = exp{i(pQ - qP)}.
//
// With zeta = (p1, -q1, p2, -q2) the characteristic function of a Gaussian state reads
//     chi = exp{-1/2 zeta^T V zeta + i zeta^T mean},
// which is the same quadratic form as -1/2 xi Omega V Omega^T xi^T with xi = (q1, p1, q2, p2).

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace cvsteer {

using Vec4 = Eigen::Matrix<double, 4, 1>;
using Mat4 = Eigen::Matrix<double, 4, 4>;
using Mat2 = Eigen::Matrix<double, 2, 2>;

enum class Mode { A, B };
enum class Quadrature { Q, P };

constexpr Mode other(Mode m) noexcept { return m == Mode::A ? Mode::B : Mode::A; }

/// Row/column of a quadrature in the (Q1, P1, Q2, P2) ordering.
constexpr int phase_space_index(Mode m, Quadrature q) noexcept
{
    return (m == Mode::A ? 0 : 2) + (q == Quadrature::Q ? 0 : 1);
}

/// Arguments of the characteristic function; alpha = q1 + i p1, beta = q2 + i p2.
struct CfPoint {
    double q1 = 0.0;
    double p1 = 0.0;
    double q2 = 0.0;
    double p2 = 0.0;
};

struct SymplecticSpectrum {
    double larger = 0.0;
    double smaller = 0.0;
};

/// Tolerances fixed by the library contract.
inline constexpr double kSymmetryTolerance = 1e-9;
inline constexpr double kPhysicalityTolerance = 1e-9;

/// Immutable two-mode Gaussian state: first moments plus covariance matrix.
///
/// Construction symmetrizes the covariance matrix, rejects asymmetry above
/// kSymmetryTolerance (relative to the largest entry), and requires positive
/// definiteness with both symplectic eigenvalues >= 1 - kPhysicalityTolerance.
class GaussianState {
public:
    GaussianState(const Vec4& mean, const Mat4& cm);
    explicit GaussianState(const Mat4& cm) : GaussianState(Vec4::Zero(), cm) {}

    static GaussianState vacuum() { return GaussianState(Mat4::Identity()); }

    const Vec4& mean() const noexcept { return mean_; }
    const Mat4& cm() const noexcept { return cm_; }

    /// Local 2x2 block of one mode (script-A or script-B).
    Mat2 block(Mode m) const;
    /// Correlation block C, rows from mode A and columns from mode B.
    Mat2 cross() const { return cm_.block<2, 2>(0, 2); }

    double variance(Mode m, Quadrature q) const;
    double covariance(Quadrature q) const; ///< E_{X1 X2} for X = Q or P
    double first_moment(Mode m, Quadrature q) const;

private:
    Vec4 mean_;
    Mat4 cm_;
};

/// Two-mode squeezed vacuum S(r)|00>.
GaussianState make_tmsv(double r);

/// Weyl characteristic function; real for zero-mean states.
std::complex<double> cf_eval(const GaussianState& state, const CfPoint& pt);

/// Omega = diag(J, J) with J = [[0, 1], [-1, 0]].
const Mat4& symplectic_form();

/// Flips the sign of the chosen mode's P row and column. The result is a symmetric
/// matrix that need not be a physical covariance matrix.
Mat4 partial_transpose(const Mat4& cm, Mode m);
Mat4 partial_transpose(const GaussianState& state, Mode m);

/// Both symplectic eigenvalues (moduli of eig(i Omega V)) of a symmetric positive
/// definite 4x4 matrix, from the symplectic invariant
///     2 nu^2 = Delta +- sqrt(Delta^2 - 4 det V),   Delta = det A + det B + 2 det C.
/// The discriminant is assembled after reducing V to standard form with local
/// symplectic maps, so pure states return exactly degenerate eigenvalues instead of
/// the O(sqrt(eps)) split that the textbook expression suffers near degeneracy.
SymplecticSpectrum symplectic_eigenvalues(const Mat4& cm);

/// True when cm is positive definite with smallest symplectic eigenvalue >= 1 - tol.
bool is_physical(const Mat4& cm, double tol = kPhysicalityTolerance);

/// True when no Q-P cross moments are present (every <Q_i P_j> covariance vanishes).
bool is_quadrature_decoupled(const Mat4& cm, double tol = 1e-14);

/// Closed-form Gaussian densities of the scaled quadrature values x = X / sqrt(2)
/// (the eigenvalue labels of the quadrature operators).
double marginal_quadrature_density(const GaussianState& state, Mode m, Quadrature q, double x);
double joint_quadrature_density(const GaussianState& state, Quadrature q, double x1, double x2);

} // namespace cvsteer
