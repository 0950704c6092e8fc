#pragma once

#include <optional>
#include <vector>

#include "gksl/algebra.hpp"
#include "gksl/linalg.hpp"

namespace gksl {

/// Validity report for a Gaussian exponent matrix M. Bosons need
/// M = M^T = ~M and M*E negative definite; fermions need M = -M^T = -~M.
struct ExponentReport {
    SymmetryReport symmetry;
    /// Largest eigenvalue of the Hermitian part of M*E (bosons only).
    std::optional<double> me_max_eigenvalue;
    double definiteness_threshold = -1e-10;

    bool pass() const {
        if (!symmetry.pass()) return false;
        if (me_max_eigenvalue && !(*me_max_eigenvalue <= definiteness_threshold)) return false;
        return true;
    }
};

ExponentReport validate_exponent(const ComplexMatrix& m, const ModeSystem& system,
                                 double tolerance = kSymmetryTol);

/// Gaussian state rho = exp(1/2 x^T M x + s) over the stacked operator
/// vector x, fully determined by the exponent matrix M and the
/// log-normalization s.
struct GaussianStateSpec {
    ComplexMatrix m_matrix;
    Complex s{0.0, 0.0};
    ModeSystem system;
};

/// Validating constructor. When `s` is omitted it is filled in from
/// normalization(). Throws StateError naming the violated condition.
GaussianStateSpec make_gaussian_state(const ComplexMatrix& m, const ModeSystem& system,
                                      std::optional<Complex> s = std::nullopt);

/// Log-normalization s making tr(rho) = 1:
///   boson:   s = 1/2 log|det(e^{MJ} - I)|   (requires det != 0)
///   fermion: s = -1/2 log det(e^{ME} + I)
/// The fermionic formula is applied to the state exponent passed in.
Complex normalization(const ComplexMatrix& m_matrix, const ModeSystem& system);

/// Commutator residuals ||[K_j S, e^{MS}]||_F with S = J (boson) or
/// S = E (fermion); the state is certified stationary iff all residuals
/// fall below the tolerance. Relative residuals divide by
/// ||K_j S||_F * ||e^{MS}||_F.
struct StationarityReport {
    std::vector<double> residuals;
    std::vector<double> relative_residuals;
    double tolerance = 1e-10;

    bool stationary() const {
        for (double r : residuals)
            if (!(r < tolerance)) return false;
        return true;
    }
};

StationarityReport stationarity_residuals(const GeneratorSpec& spec,
                                          const GaussianStateSpec& g,
                                          double tolerance = 1e-10);

/// Candidate stationary state with M = beta * K: M*S is then a multiple of
/// K*S, so the commutator with its own coefficient vanishes by construction.
/// Residuals against other coefficients of a multi-term generator are not
/// guaranteed. Bosons require beta*K*E negative definite.
GaussianStateSpec gibbs_candidate(const QuadraticCoefficient& coeff, double beta);

} // namespace gksl
