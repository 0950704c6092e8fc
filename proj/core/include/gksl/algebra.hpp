#pragma once

#include <random>
#include <utility>
#include <vector>

#include "gksl/linalg.hpp"

namespace gksl {

enum class Statistics { boson, fermion };

const char* to_string(Statistics s);

/// A register of n bosonic or fermionic modes. The stacked operator vector
/// has the n annihilators first and the n creators after them, so every
/// structure matrix and coefficient is 2n x 2n.
struct ModeSystem {
    int modes = 1;
    Statistics statistics = Statistics::boson;

    ModeSystem(int n, Statistics stat) : modes(n), statistics(stat) {
        if (n < 1) throw InputError("ModeSystem: mode count must be >= 1");
    }

    int dim() const { return 2 * modes; }

    friend bool operator==(const ModeSystem& a, const ModeSystem& b) {
        return a.modes == b.modes && a.statistics == b.statistics;
    }
};

/// J = [[0, -I_n], [I_n, 0]] (symplectic-like; bosonic drifts are J*K).
ComplexMatrix structure_j(const ModeSystem& system);

/// E = [[0, I_n], [I_n, 0]] (drives fermionic drifts E*K and ~-conjugation).
ComplexMatrix structure_e(const ModeSystem& system);

/// Returns (J, E) for the system.
std::pair<ComplexMatrix, ComplexMatrix> structure_matrices(const ModeSystem& system);

/// ~-conjugation of a 2n x 2n matrix: E * conj(x) * E.
ComplexMatrix tilde(const ComplexMatrix& x, const ModeSystem& system);

/// ~-conjugation of a 2n-vector: E * conj(g).
ComplexVector tilde(const ComplexVector& g, const ModeSystem& system);

/// Default absolute Frobenius tolerance for the coefficient symmetry checks.
inline constexpr double kSymmetryTol = 1e-12;

/// Deviations of a candidate coefficient from its statistics-dependent
/// symmetry class: bosons need K = K^T = ~K, fermions K = -K^T = -~K.
struct SymmetryReport {
    double transpose_deviation = 0.0;  // ||K -+ K^T||_F
    double tilde_deviation = 0.0;      // ||K -+ ~K||_F
    double tolerance = kSymmetryTol;

    bool pass() const {
        return transpose_deviation <= tolerance && tilde_deviation <= tolerance;
    }
};

SymmetryReport validate_coefficient(const ComplexMatrix& k, const ModeSystem& system,
                                    double tolerance = kSymmetryTol);

/// One coefficient matrix K_j of the generator. Construction rejects
/// matrices outside the symmetry class instead of silently projecting them;
/// use symmetrize() first if a projection is wanted.
class QuadraticCoefficient {
public:
    QuadraticCoefficient(ComplexMatrix k, ModeSystem system,
                         double tolerance = kSymmetryTol);

    const ComplexMatrix& matrix() const { return k_; }
    const ModeSystem& system() const { return system_; }

private:
    ComplexMatrix k_;
    ModeSystem system_;
};

/// Drift matrix of a coefficient: J*K for bosons, E*K for fermions.
ComplexMatrix drift_matrix(const QuadraticCoefficient& coeff);

/// The full generator: a mode system plus coefficients K_1..K_N.
struct GeneratorSpec {
    ModeSystem system;
    std::vector<QuadraticCoefficient> coefficients;

    GeneratorSpec(ModeSystem sys, std::vector<QuadraticCoefficient> coeffs);

    static GeneratorSpec from_matrices(const ModeSystem& sys,
                                       const std::vector<ComplexMatrix>& ks,
                                       double tolerance = kSymmetryTol);
};

/// Projects an arbitrary 2n x 2n matrix onto the valid symmetry class
/// (the transpose and tilde projections commute).
ComplexMatrix symmetrize(const ComplexMatrix& k, const ModeSystem& system);

/// Random valid coefficient: complex Gaussian entries pushed through
/// symmetrize(). Used by property tests and seeded CLI scenarios.
ComplexMatrix random_coefficient(const ModeSystem& system, std::mt19937_64& rng);

} // namespace gksl
