#include "gksl/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace gksl {

bool all_finite(const ComplexMatrix& a) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const Complex& z = a.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

bool all_finite(const ComplexVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
    }
    return true;
}

void require_finite(const ComplexMatrix& a, std::string_view what) {
    if (!all_finite(a))
        throw InputError(std::string(what) + ": matrix contains non-finite entries");
}

void require_finite(const ComplexVector& v, std::string_view what) {
    if (!all_finite(v))
        throw InputError(std::string(what) + ": vector contains non-finite entries");
}

namespace {

void require_square(const ComplexMatrix& a, const char* op) {
    if (a.rows() != a.cols())
        throw ShapeError(std::string(op) + ": matrix must be square, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

void require_same_square(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    require_square(a, op);
    require_square(b, op);
    if (a.rows() != b.rows())
        throw ShapeError(std::string(op) + ": size mismatch, " + std::to_string(a.rows()) +
                         " vs " + std::to_string(b.rows()));
}

Eigen::Index checked_dim_product(Eigen::Index x, Eigen::Index y, const char* op) {
    const std::uint64_t p = static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(y);
    // Dense storage beyond ~2^26 entries per side is outside this library's scope.
    constexpr std::uint64_t kMaxDim = std::uint64_t(1) << 26;
    if (p > kMaxDim)
        throw SizeLimitError(std::string(op) + ": product dimension " + std::to_string(p) +
                             " exceeds the dense size limit");
    return static_cast<Eigen::Index>(p);
}

} // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index rows = checked_dim_product(a.rows(), b.rows(), "kron");
    const Eigen::Index cols = checked_dim_product(a.cols(), b.cols(), "kron");
    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix comm(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_square(a, b, "comm");
    return a * b - b * a;
}

ComplexMatrix anticomm(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_square(a, b, "anticomm");
    return a * b + b * a;
}

Complex det(const ComplexMatrix& a) {
    require_square(a, "det");
    if (a.rows() == 0) return Complex(1.0, 0.0);
    return Eigen::PartialPivLU<ComplexMatrix>(a).determinant();
}

namespace {

// Diagonal Pade approximants for the exponential; coefficients and 1-norm
// switching thresholds follow Higham's scaling-and-squaring analysis.
// After each helper, (V + U)(V - U)^{-1} approximates e^A near A = 0.

void exp_pade3(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
    static const double b[] = {120., 60., 12., 1.};
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix id = identity(a.rows());
    u = a * (b[3] * a2 + b[1] * id);
    v = b[2] * a2 + b[0] * id;
}

void exp_pade5(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
    static const double b[] = {30240., 15120., 3360., 420., 30., 1.};
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix id = identity(a.rows());
    u = a * (b[5] * a4 + b[3] * a2 + b[1] * id);
    v = b[4] * a4 + b[2] * a2 + b[0] * id;
}

void exp_pade7(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
    static const double b[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a4 * a2;
    const ComplexMatrix id = identity(a.rows());
    u = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

void exp_pade9(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
    static const double b[] = {17643225600., 8821612800., 2075673600., 302702400.,
                               30270240.,    2162160.,    110880.,     3960.,
                               90.,          1.};
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a4 * a2;
    const ComplexMatrix a8 = a6 * a2;
    const ComplexMatrix id = identity(a.rows());
    u = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

void exp_pade13(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
    static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                               1187353796428800.,  129060195264000.,   10559470521600.,
                               670442572800.,      33522128640.,       1323241920.,
                               40840800.,          960960.,            16380.,
                               182.,               1.};
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a4 * a2;
    const ComplexMatrix id = identity(a.rows());
    ComplexMatrix tmp = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
    tmp += b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id;
    u = a * tmp;
    v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
    v += b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

} // namespace

ComplexMatrix expm(const ComplexMatrix& a) {
    require_square(a, "expm");
    require_finite(a, "expm");
    const Eigen::Index n = a.rows();
    if (n == 0) return ComplexMatrix(0, 0);

    const double l1norm = a.cwiseAbs().colwise().sum().maxCoeff();

    ComplexMatrix u, v;
    int squarings = 0;
    if (l1norm < 1.495585217958292e-2) {
        exp_pade3(a, u, v);
    } else if (l1norm < 2.539398330063230e-1) {
        exp_pade5(a, u, v);
    } else if (l1norm < 9.504178996162932e-1) {
        exp_pade7(a, u, v);
    } else if (l1norm < 2.097847961257068e0) {
        exp_pade9(a, u, v);
    } else {
        const double maxnorm = 5.371920351148152;
        std::frexp(l1norm / maxnorm, &squarings);
        if (squarings < 0) squarings = 0;
        const ComplexMatrix scaled = a * Complex(std::ldexp(1.0, -squarings), 0.0);
        exp_pade13(scaled, u, v);
    }

    const ComplexMatrix numer = v + u;
    const ComplexMatrix denom = v - u;
    ComplexMatrix result = Eigen::PartialPivLU<ComplexMatrix>(denom).solve(numer);
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

} // namespace gksl
