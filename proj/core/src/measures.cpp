#include "monolab/measures.hpp"

#include "monolab/errors.hpp"

#include <cmath>
#include <string>

namespace monolab {

namespace {

constexpr double kNegativityClamp = 1e-9;

void require_proper_cut(const IndexSubset& side_a, const PartyDims& dims, const char* op) {
    if (side_a.empty()) throw validation_error(std::string(op) + ": side A must be nonempty");
    if (side_a.members().back() >= dims.count())
        throw validation_error(std::string(op) + ": party index out of range");
    if (side_a.size() == dims.count())
        throw validation_error(std::string(op) + ": side A must be a proper subset of the parties");
}

double clamp_negativity(double doubled, const char* op) {
    if (doubled >= 0.0) return doubled;
    if (doubled >= -kNegativityClamp) return 0.0; // eigensolver noise on PPT states
    throw numeric_error(std::string(op) + ": negativity " + std::to_string(doubled) +
                        " below the round-off clamp");
}

} // namespace

double negativity(const ComplexMatrix& rho, const PartyDims& dims, const IndexSubset& side_a,
                  Convention conv) {
    if (!rho.is_square() || rho.rows() != dims.side())
        throw shape_error("negativity: matrix side does not match party dims");
    require_proper_cut(side_a, dims, "negativity");
    if (rho.hermiticity_defect() > ComplexMatrix::kHermTol)
        throw validation_error("negativity: matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-8)
        throw validation_error("negativity: matrix trace is not 1");
    const auto spectrum = hermitian_eigenvalues(rho);
    if (spectrum.front() < -1e-8)
        throw validation_error("negativity: matrix is not positive semidefinite (eigenvalue " +
                               std::to_string(spectrum.front()) + ")");

    const double tn = trace_norm_hermitian(partial_transpose(rho, dims, side_a));
    return apply_convention(clamp_negativity(tn - 1.0, "negativity"), conv);
}

double pure_negativity(const PureState& psi, const IndexSubset& side_a, Convention conv) {
    require_proper_cut(side_a, psi.dims(), "pure_negativity");
    const double st = sqrt_trace(reduced(psi, side_a));
    return apply_convention(clamp_negativity(st * st - 1.0, "pure_negativity"), conv);
}

double cren_wclass_one_vs_rest(const WClassParams& params, Convention conv) {
    const double omega1 = params.omega1();
    return apply_convention(2.0 * std::sqrt((1.0 - omega1) * omega1), conv);
}

double cren_wclass_pair(const WClassParams& params, std::size_t partner, Convention conv) {
    if (partner == 0 || partner >= params.n())
        throw validation_error("cren_wclass_pair: partner must be a party index in [1, n-1]");
    const double omega1 = params.omega1();
    return apply_convention(2.0 * std::sqrt((1.0 - omega1) * params.party_weight(partner)), conv);
}

} // namespace monolab
