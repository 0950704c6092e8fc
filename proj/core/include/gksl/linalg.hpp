#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "gksl/errors.hpp"

namespace gksl {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. All higher-level structures
/// (coefficients K, structure matrices J and E, Gaussian exponents M,
/// moment generators, Fock-space operators) are values of this type.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Dense complex column vector (linear-form coefficients f, moment values).
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

/// True iff every entry is finite (no NaN/Inf in either component).
bool all_finite(const ComplexMatrix& a);
bool all_finite(const ComplexVector& v);

/// Throws InputError naming `what` if the value contains NaN/Inf entries.
void require_finite(const ComplexMatrix& a, std::string_view what);
void require_finite(const ComplexVector& v, std::string_view what);

inline ComplexMatrix identity(Eigen::Index n) {
    return ComplexMatrix::Identity(n, n);
}

inline double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

inline double max_abs(const ComplexMatrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

/// Kronecker product: block (i,j) of the result is a(i,j) * b.
/// Throws SizeLimitError if the product dimensions overflow.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Commutator a*b - b*a for square matrices of equal size.
ComplexMatrix comm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Anticommutator a*b + b*a for square matrices of equal size.
ComplexMatrix anticomm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Determinant via pivoted LU. Near-singular inputs return the LU value;
/// singularity handling is the caller's concern.
Complex det(const ComplexMatrix& a);

/// Matrix exponential e^a by scaling-and-squaring with a diagonal Pade
/// approximant, order selected from the 1-norm of the input. Backward
/// error is below ~1e-13 in the relative sense for double precision.
ComplexMatrix expm(const ComplexMatrix& a);

} // namespace gksl
