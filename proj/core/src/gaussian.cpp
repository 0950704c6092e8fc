#include "gksl/gaussian.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace gksl {

ExponentReport validate_exponent(const ComplexMatrix& m, const ModeSystem& system,
                                 double tolerance) {
    ExponentReport report;
    report.symmetry = validate_coefficient(m, system, tolerance);
    if (system.statistics == Statistics::boson) {
        const ComplexMatrix me = m * structure_e(system);
        const ComplexMatrix herm = 0.5 * (me + me.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eigs(herm, Eigen::EigenvaluesOnly);
        report.me_max_eigenvalue = eigs.eigenvalues().maxCoeff();
    }
    return report;
}

GaussianStateSpec make_gaussian_state(const ComplexMatrix& m, const ModeSystem& system,
                                      std::optional<Complex> s) {
    const ExponentReport report = validate_exponent(m, system);
    const bool boson = system.statistics == Statistics::boson;
    if (!report.symmetry.pass()) {
        std::string cond = boson ? "M = M^T = ~M" : "M = -M^T = -~M";
        throw StateError("Gaussian exponent violates " + cond +
                         " (transpose deviation " +
                         std::to_string(report.symmetry.transpose_deviation) +
                         ", tilde deviation " +
                         std::to_string(report.symmetry.tilde_deviation) + ")");
    }
    if (report.me_max_eigenvalue &&
        !(*report.me_max_eigenvalue <= report.definiteness_threshold)) {
        throw StateError("Gaussian exponent violates ME < 0: largest eigenvalue of the "
                         "Hermitian part of ME is " +
                         std::to_string(*report.me_max_eigenvalue));
    }
    GaussianStateSpec g{m, s ? *s : normalization(m, system), system};
    return g;
}

Complex normalization(const ComplexMatrix& m_matrix, const ModeSystem& system) {
    const SymmetryReport sym = validate_coefficient(m_matrix, system);
    if (!sym.pass())
        throw StateError("normalization: exponent matrix fails its symmetry class");

    if (system.statistics == Statistics::boson) {
        const ComplexMatrix mj = m_matrix * structure_j(system);
        const ComplexMatrix x = expm(mj) - identity(mj.rows());
        const Complex d = det(x);
        if (std::abs(d) < 1e-12)
            throw SingularNormalizationError(
                "normalization: det(e^{MJ} - I) = " + std::to_string(std::abs(d)) +
                " is singular (MJ has an eigenvalue at 0)");
        return Complex(0.5 * std::log(std::abs(d)), 0.0);
    }

    const ComplexMatrix me = m_matrix * structure_e(system);
    const Complex d = det(expm(me) + identity(me.rows()));
    // ME is Hermitian for valid M, so d is real and positive.
    return Complex(-0.5 * std::log(d.real()), 0.0);
}

StationarityReport stationarity_residuals(const GeneratorSpec& spec,
                                          const GaussianStateSpec& g, double tolerance) {
    if (!(spec.system == g.system))
        throw InputError("stationarity_residuals: generator and state disagree on the mode system");

    const ComplexMatrix s_matrix = spec.system.statistics == Statistics::boson
                                       ? structure_j(spec.system)
                                       : structure_e(spec.system);
    const ComplexMatrix exp_ms = expm(g.m_matrix * s_matrix);
    const double exp_norm = exp_ms.norm();

    StationarityReport report;
    report.tolerance = tolerance;
    for (const auto& coeff : spec.coefficients) {
        const ComplexMatrix ks = coeff.matrix() * s_matrix;
        const double res = comm(ks, exp_ms).norm();
        report.residuals.push_back(res);
        const double scale = ks.norm() * exp_norm;
        report.relative_residuals.push_back(scale > 0.0 ? res / scale : res);
    }
    return report;
}

GaussianStateSpec gibbs_candidate(const QuadraticCoefficient& coeff, double beta) {
    const ComplexMatrix m = beta * coeff.matrix();
    return make_gaussian_state(m, coeff.system());
}

} // namespace gksl
