#include "gksl/moments.hpp"

#include <cmath>
#include <string>

namespace gksl {

std::size_t moment_dimension(const ModeSystem& system, int order, const MomentCaps& caps) {
    if (order < 1) throw InputError("moment order must be >= 1");
    const std::size_t d = static_cast<std::size_t>(system.dim());
    std::size_t dim = 1;
    for (int l = 0; l < order; ++l) {
        dim *= d;
        if (dim > caps.max_dimension)
            throw SizeLimitError("moment dimension (2n)^m = " + std::to_string(d) + "^" +
                                 std::to_string(order) + " exceeds cap " +
                                 std::to_string(caps.max_dimension));
    }
    return dim;
}

MomentTensor::MomentTensor(int m, ModeSystem sys, ComplexVector vals, const MomentCaps& caps)
    : order(m), system(sys), values(std::move(vals)) {
    const std::size_t dim = moment_dimension(system, order, caps);
    if (static_cast<std::size_t>(values.size()) != dim)
        throw ShapeError("MomentTensor: expected " + std::to_string(dim) + " values, got " +
                         std::to_string(values.size()));
    require_finite(values, "MomentTensor");
}

MomentTensor MomentTensor::zero(int m, const ModeSystem& sys, const MomentCaps& caps) {
    const std::size_t dim = moment_dimension(sys, m, caps);
    return MomentTensor(m, sys, ComplexVector::Zero(static_cast<Eigen::Index>(dim)), caps);
}

std::size_t MomentTensor::flat_index(const std::vector<int>& multi_index) const {
    if (static_cast<int>(multi_index.size()) != order)
        throw InputError("flat_index: expected " + std::to_string(order) + " indices");
    const int d = system.dim();
    std::size_t flat = 0;
    for (int idx : multi_index) {
        if (idx < 0 || idx >= d) throw InputError("flat_index: component index out of range");
        flat = flat * static_cast<std::size_t>(d) + static_cast<std::size_t>(idx);
    }
    return flat;
}

std::string moment_column_label(int order, std::size_t flat, int dim) {
    std::vector<int> digits(static_cast<std::size_t>(order));
    for (int l = order - 1; l >= 0; --l) {
        digits[static_cast<std::size_t>(l)] = static_cast<int>(flat % static_cast<std::size_t>(dim));
        flat /= static_cast<std::size_t>(dim);
    }
    std::string label = "m" + std::to_string(order);
    for (int digit : digits) label += "_" + std::to_string(digit + 1);
    return label;
}

ComplexMatrix kron_sum(const ComplexMatrix& a, int order, const MomentCaps& caps) {
    if (a.rows() != a.cols()) throw ShapeError("kron_sum: matrix must be square");
    if (order < 1) throw InputError("kron_sum: order must be >= 1");
    const std::size_t d = static_cast<std::size_t>(a.rows());
    std::size_t dim = 1;
    for (int l = 0; l < order; ++l) {
        dim *= d;
        if (dim > caps.max_dimension)
            throw SizeLimitError("kron_sum: d^m = " + std::to_string(d) + "^" +
                                 std::to_string(order) + " exceeds cap " +
                                 std::to_string(caps.max_dimension));
    }

    ComplexMatrix sum = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
    for (int slot = 0; slot < order; ++slot) {
        std::size_t left = 1, right = 1;
        for (int l = 0; l < slot; ++l) left *= d;
        for (int l = slot + 1; l < order; ++l) right *= d;
        ComplexMatrix term = kron(identity(static_cast<Eigen::Index>(left)), a);
        term = kron(term, identity(static_cast<Eigen::Index>(right)));
        sum += term;
    }
    return sum;
}

ComplexMatrix moment_generator(const GeneratorSpec& spec, int order, const MomentCaps& caps) {
    const std::size_t dim = moment_dimension(spec.system, order, caps);
    ComplexMatrix g = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                          static_cast<Eigen::Index>(dim));
    for (const auto& coeff : spec.coefficients) {
        const ComplexMatrix sum = kron_sum(drift_matrix(coeff), order, caps);
        g -= 0.5 * (sum * sum);
    }
    return g;
}

namespace {

void require_valid_times(const std::vector<double>& times) {
    if (times.empty()) throw InputError("propagate_moments: empty time list");
    if (!(times.front() >= 0.0))
        throw InputError("propagate_moments: first time must be >= 0");
    for (std::size_t k = 0; k + 1 < times.size(); ++k)
        if (!(times[k] <= times[k + 1]))
            throw InputError("propagate_moments: times must be sorted ascending");
    for (double t : times)
        if (!std::isfinite(t)) throw InputError("propagate_moments: non-finite time");
}

bool uniform_spacing(const std::vector<double>& times, double& dt) {
    if (times.size() < 2) {
        dt = 0.0;
        return true;
    }
    dt = times[1] - times[0];
    const double scale = std::max(1.0, std::abs(times.back()));
    for (std::size_t k = 0; k + 1 < times.size(); ++k)
        if (std::abs((times[k + 1] - times[k]) - dt) > 1e-12 * scale) return false;
    return true;
}

} // namespace

std::vector<MomentTensor> propagate_moments(const GeneratorSpec& spec, const MomentTensor& y0,
                                            const std::vector<double>& times,
                                            const PropagationOptions& options) {
    if (!(y0.system == spec.system))
        throw InputError("propagate_moments: moment tensor and generator spec disagree on the mode system");
    require_valid_times(times);

    const ComplexMatrix g = moment_generator(spec, y0.order, options.caps);

    std::vector<MomentTensor> out;
    out.reserve(times.size());

    if (options.mode == PropagationMode::uniform_step) {
        double dt = 0.0;
        if (!uniform_spacing(times, dt))
            throw InputError("propagate_moments: uniform_step mode requires a uniform time grid");
        ComplexVector y = y0.values;
        if (times.front() > 0.0) y = expm(times.front() * g) * y;
        const ComplexMatrix step = times.size() > 1 && dt > 0.0
                                       ? expm(dt * g)
                                       : identity(g.rows());
        for (std::size_t k = 0; k < times.size(); ++k) {
            if (k > 0 && dt > 0.0) y = step * y;
            out.emplace_back(y0.order, y0.system, y, options.caps);
        }
        return out;
    }

    for (double t : times) {
        if (t == 0.0) {
            out.push_back(y0);
            continue;
        }
        ComplexVector y = expm(t * g) * y0.values;
        out.emplace_back(y0.order, y0.system, std::move(y), options.caps);
    }
    return out;
}

} // namespace gksl
