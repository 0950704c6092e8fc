#include "gksl/algebra.hpp"

#include <string>

namespace gksl {

const char* to_string(Statistics s) {
    return s == Statistics::boson ? "boson" : "fermion";
}

namespace {

void require_system_shape(const ComplexMatrix& x, const ModeSystem& system, const char* op) {
    const Eigen::Index d = system.dim();
    if (x.rows() != d || x.cols() != d)
        throw ShapeError(std::string(op) + ": expected " + std::to_string(d) + "x" +
                         std::to_string(d) + " matrix, got " + std::to_string(x.rows()) +
                         "x" + std::to_string(x.cols()));
}

} // namespace

ComplexMatrix structure_j(const ModeSystem& system) {
    const int n = system.modes;
    ComplexMatrix j = ComplexMatrix::Zero(2 * n, 2 * n);
    j.block(0, n, n, n) = -ComplexMatrix::Identity(n, n);
    j.block(n, 0, n, n) = ComplexMatrix::Identity(n, n);
    return j;
}

ComplexMatrix structure_e(const ModeSystem& system) {
    const int n = system.modes;
    ComplexMatrix e = ComplexMatrix::Zero(2 * n, 2 * n);
    e.block(0, n, n, n) = ComplexMatrix::Identity(n, n);
    e.block(n, 0, n, n) = ComplexMatrix::Identity(n, n);
    return e;
}

std::pair<ComplexMatrix, ComplexMatrix> structure_matrices(const ModeSystem& system) {
    return {structure_j(system), structure_e(system)};
}

ComplexMatrix tilde(const ComplexMatrix& x, const ModeSystem& system) {
    require_system_shape(x, system, "tilde");
    const ComplexMatrix e = structure_e(system);
    return e * x.conjugate() * e;
}

ComplexVector tilde(const ComplexVector& g, const ModeSystem& system) {
    if (g.size() != system.dim())
        throw ShapeError("tilde: expected vector of length " + std::to_string(system.dim()) +
                         ", got " + std::to_string(g.size()));
    return structure_e(system) * g.conjugate();
}

SymmetryReport validate_coefficient(const ComplexMatrix& k, const ModeSystem& system,
                                    double tolerance) {
    require_system_shape(k, system, "validate_coefficient");
    const double sign = system.statistics == Statistics::boson ? 1.0 : -1.0;
    SymmetryReport report;
    report.tolerance = tolerance;
    report.transpose_deviation = (k - sign * k.transpose()).norm();
    report.tilde_deviation = (k - sign * tilde(k, system)).norm();
    return report;
}

QuadraticCoefficient::QuadraticCoefficient(ComplexMatrix k, ModeSystem system, double tolerance)
    : k_(std::move(k)), system_(system) {
    require_finite(k_, "QuadraticCoefficient");
    const SymmetryReport report = validate_coefficient(k_, system_, tolerance);
    if (report.pass()) return;

    const bool boson = system_.statistics == Statistics::boson;
    std::string msg = "coefficient violates ";
    if (report.transpose_deviation > report.tolerance) {
        msg += boson ? "K = K^T" : "K = -K^T";
        msg += " (deviation " + std::to_string(report.transpose_deviation) + ")";
    }
    if (report.tilde_deviation > report.tolerance) {
        if (report.transpose_deviation > report.tolerance) msg += " and ";
        msg += boson ? "K = ~K" : "K = -~K";
        msg += " (deviation " + std::to_string(report.tilde_deviation) + ")";
    }
    throw SymmetryError(msg);
}

ComplexMatrix drift_matrix(const QuadraticCoefficient& coeff) {
    const ModeSystem& sys = coeff.system();
    if (sys.statistics == Statistics::boson) return structure_j(sys) * coeff.matrix();
    return structure_e(sys) * coeff.matrix();
}

GeneratorSpec::GeneratorSpec(ModeSystem sys, std::vector<QuadraticCoefficient> coeffs)
    : system(sys), coefficients(std::move(coeffs)) {
    if (coefficients.empty())
        throw InputError("GeneratorSpec: at least one coefficient is required");
    for (const auto& c : coefficients)
        if (!(c.system() == system))
            throw InputError("GeneratorSpec: all coefficients must share the mode system");
}

GeneratorSpec GeneratorSpec::from_matrices(const ModeSystem& sys,
                                           const std::vector<ComplexMatrix>& ks,
                                           double tolerance) {
    std::vector<QuadraticCoefficient> coeffs;
    coeffs.reserve(ks.size());
    for (const auto& k : ks) coeffs.emplace_back(k, sys, tolerance);
    return GeneratorSpec(sys, std::move(coeffs));
}

ComplexMatrix symmetrize(const ComplexMatrix& k, const ModeSystem& system) {
    require_system_shape(k, system, "symmetrize");
    const double sign = system.statistics == Statistics::boson ? 1.0 : -1.0;
    ComplexMatrix s = 0.5 * (k + sign * k.transpose().eval());
    s = 0.5 * (s + sign * tilde(s, system));
    return s;
}

ComplexMatrix random_coefficient(const ModeSystem& system, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Eigen::Index d = system.dim();
    ComplexMatrix r(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) r(i, j) = Complex(gauss(rng), gauss(rng));
    return symmetrize(r, system);
}

} // namespace gksl
