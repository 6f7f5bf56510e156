// oracle.hpp: brute-force numerics used to cross-check the closed forms
//
// Nothing here calls into criteria/measures/thresholds: distributions come from Fourier
// inversion of cf_eval, moments from finite differences of cf_eval, symplectic spectra
// from a dense eigensolver.

#pragma once

#include "cvsteer/criteria.hpp"
#include "cvsteer/gaussian_state.hpp"

#include <Eigen/Dense>

#include <random>

namespace cvsteer::oracle {

/// Square grid [-L, L]^2 of n x n cell centres, spacing h = 2L / n, in scaled units x = X / sqrt 2.
struct Grid2D {
    double half_width = 8.0;
    int points = 256;

    double spacing() const { return 2.0 * half_width / points; }
    double coord(int i) const { return -half_width + (i + 0.5) * spacing(); }

    /// L = 8 sqrt(max CM diagonal), n = 256.
    static Grid2D for_state(const GaussianState& state, int points = 256);
};

enum class QuadraturePair { Position, Momentum };

/// Joint density of (x1, x2) on a grid. values(i, j) is P(coord(i), coord(j)).
struct PdfTable {
    Grid2D grid;
    Eigen::MatrixXd values;

    double mass() const;
    Eigen::VectorXd marginal(Mode m) const;
};

/// P(x1, x2) = h_u^2 / (2 pi^2) sum_jk exp{-i sqrt2 (x1 u_j + x2 u_k)} chi(u_j, u_k), where
/// u are the CF arguments conjugate to the chosen quadrature pair. The sqrt 2 in the kernel
/// converts eigenvalue labels x to quadrature values X = sqrt 2 x.
///
/// Throws InvalidArgument for a bad grid (n not a power of two, L < 6 sigma),
/// GridResolutionError if mass is off by > 1e-6 or the edge band holds > 1e-6,
/// NumericError for cells below -1e-9.
PdfTable pdf_from_cf(const GaussianState& state, QuadraturePair pair, const Grid2D& grid);
PdfTable pdf_from_cf(const GaussianState& state, QuadraturePair pair);

/// min over (lambda, d) of the tabulated mean of (x_steered - d + lambda x_steering)^2.
double numeric_inferred_variance(const PdfTable& table, Direction dir);

enum class EntropyKind { Marginal, Joint, Conditional };

/// Riemann-sum Shannon entropy. Marginal takes the steered mode of `dir`; Conditional is
/// H(joint) - H(steering marginal).
double numeric_entropy(const PdfTable& table, EntropyKind kind, Direction dir = Direction::AtoB);

/// First moments <R_j> = -i d chi / d zeta_j and symmetrized seconds <R_j R_k> = -d^2 chi /
/// d zeta_j d zeta_k at the origin, central differences (step 1e-4) with one Richardson step.
Vec4 numeric_mean(const GaussianState& state);
double numeric_second_moment(const GaussianState& state, int j, int k);
Mat4 numeric_covariance_matrix(const GaussianState& state);

/// Moduli of eig(Omega V) paired as +-i nu. Throws NumericError if a pair differs by > 1e-8.
SymplecticSpectrum numeric_symplectic(const Mat4& cm);

/// Random physical covariance matrix V = S diag(nu1, nu1, nu2, nu2) S^T with S a product of
/// passive, single-mode-squeezing and passive symplectic maps.
struct RandomStateOptions {
    double max_thermal = 3.0;
    double max_squeezing = 1.0;
    double max_mean = 0.0;
};
GaussianState sample_physical_state(std::mt19937_64& rng, const RandomStateOptions& opts = {});

} // namespace cvsteer::oracle
