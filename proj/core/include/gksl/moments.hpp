#pragma once

#include <cstddef>
#include <vector>

#include "gksl/algebra.hpp"
#include "gksl/linalg.hpp"

namespace gksl {

/// Cap on the moment-space dimension (2n)^m. Dense propagation above this
/// is outside scope; raise it explicitly if you know what you are doing.
struct MomentCaps {
    std::size_t max_dimension = 4096;
};

/// Checked (2n)^m. Throws SizeLimitError when the cap is exceeded.
std::size_t moment_dimension(const ModeSystem& system, int order,
                             const MomentCaps& caps = {});

/// Order-m tensor of expectation values <x_{i1} ... x_{im}> over the stacked
/// annihilation/creation vector, flattened row-major over (i_1,...,i_m),
/// each index running over 1..2n (stored 0-based).
struct MomentTensor {
    int order = 1;
    ModeSystem system;
    ComplexVector values;

    MomentTensor(int m, ModeSystem sys, ComplexVector vals,
                 const MomentCaps& caps = {});

    static MomentTensor zero(int m, const ModeSystem& sys, const MomentCaps& caps = {});

    /// Flat position of a multi-index (0-based component indices).
    std::size_t flat_index(const std::vector<int>& multi_index) const;
};

/// Renders a multi-index as the CSV column label "m<order>_<i1>_<i2>..."
/// with 1-based component indices.
std::string moment_column_label(int order, std::size_t flat, int dim);

/// Kronecker sum: sum_{i=1..m} I^{(i-1)} (x) a (x) I^{(m-i)}, size d^m.
ComplexMatrix kron_sum(const ComplexMatrix& a, int order, const MomentCaps& caps = {});

/// Moment-dynamics generator G_m. Moments evolve as y(t) = expm(t*G_m) y(0).
/// Computed as -1/2 sum_j (kron_sum(A_j, m))^2 with A_j the drift matrices;
/// terms acting on distinct tensor slots commute, so the square reproduces
/// the full double sum over slot pairs.
ComplexMatrix moment_generator(const GeneratorSpec& spec, int order,
                               const MomentCaps& caps = {});

enum class PropagationMode {
    per_time,      // one expm(t_k * G) per requested time
    uniform_step,  // expm(dt * G) once, reused along a uniform grid
};

struct PropagationOptions {
    PropagationMode mode = PropagationMode::per_time;
    MomentCaps caps{};
};

/// Closed-form propagation of y0 through the requested times. Times must be
/// sorted ascending with t_0 >= 0; y(0) equals y0 exactly when t_0 = 0.
std::vector<MomentTensor> propagate_moments(const GeneratorSpec& spec,
                                            const MomentTensor& y0,
                                            const std::vector<double>& times,
                                            const PropagationOptions& options = {});

} // namespace gksl
