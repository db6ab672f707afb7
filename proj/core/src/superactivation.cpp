#include "monolab/superactivation.hpp"

#include "monolab/errors.hpp"

#include <cmath>
#include <string>

namespace monolab {

namespace {

constexpr std::size_t kFullDensitySideCap = 4096; // Jacobi cost bound for the full path
constexpr double kResidualSlack = 1e-12;

double geometric_copy_value(double base, int m) {
    return 0.5 * (std::pow(base, static_cast<double>(m)) - 1.0);
}

} // namespace

double copies_cren_one_vs_rest(const WClassParams& params, int m) {
    if (m < 0) throw validation_error("copies_cren_one_vs_rest: copy count must be >= 0");
    const double omega1 = params.omega1();
    return geometric_copy_value(1.0 + 4.0 * std::sqrt((1.0 - omega1) * omega1), m);
}

double copies_cren_pair(const WClassParams& params, std::size_t partner, int m) {
    if (partner == 0 || partner >= params.n())
        throw validation_error("copies_cren_pair: partner must be a party index in [1, n-1]");
    if (m < 0) throw validation_error("copies_cren_pair: copy count must be >= 0");
    const double omega1 = params.omega1();
    const double base = 1.0 + 4.0 * std::sqrt((1.0 - omega1) * params.party_weight(partner));
    return geometric_copy_value(base, m);
}

CopySweepResult copies_residual(const WClassParams& params, int m) {
    if (m < 1) throw validation_error("copies_residual: copy count must be >= 1");
    CopySweepResult out;
    out.m = m;
    out.q_joint_m = copies_cren_one_vs_rest(params, m);
    out.q_pairs_m.reserve(params.n() - 1);
    double pair_sum = 0.0;
    for (std::size_t partner = 1; partner < params.n(); ++partner) {
        out.q_pairs_m.push_back(copies_cren_pair(params, partner, m));
        pair_sum += out.q_pairs_m.back();
    }
    out.residual_m = out.q_joint_m - pair_sum;
    return out;
}

MinimalCopies minimal_copies(const WClassParams& params, int m_max) {
    if (m_max < 1) throw validation_error("minimal_copies: m_max must be >= 1");
    double last = 0.0;
    for (int m = 1; m <= m_max; ++m) {
        last = copies_residual(params, m).residual_m;
        if (last >= -kResidualSlack) return {m, last};
    }
    return {std::nullopt, last};
}

double f_surface(int n, int m) {
    if (n < 3) throw validation_error("f_surface: need at least 3 parties");
    if (m < 1) throw validation_error("f_surface: copy count must be >= 1");
    const double nn = static_cast<double>(n);
    const double joint = std::pow(1.0 + 4.0 * std::sqrt(nn - 1.0) / nn, static_cast<double>(m));
    const double pair = std::pow(1.0 + 4.0 / nn, static_cast<double>(m));
    return 0.5 * (joint - (nn - 1.0) * pair + nn - 2.0);
}

RegularizedSequence regularized_sequence(double single_copy_base, int m_max) {
    if (single_copy_base < 1.0)
        throw validation_error("regularized_sequence: geometric base must be >= 1");
    return regularized_sequence(
        [single_copy_base](int m) { return geometric_copy_value(single_copy_base, m); }, m_max);
}

RegularizedSequence regularized_sequence(const std::function<double(int)>& q_of_m, int m_max) {
    if (m_max < 2) throw validation_error("regularized_sequence: need m_max >= 2");
    RegularizedSequence out;
    out.values.reserve(static_cast<std::size_t>(m_max));
    for (int m = 1; m <= m_max; ++m) out.values.emplace_back(m, q_of_m(m) / m);
    const std::size_t k = out.values.size();
    out.diverging = k >= 3 && out.values[k - 1].second > 1.05 * out.values[k - 2].second &&
                    out.values[k - 2].second > 1.05 * out.values[k - 3].second;
    return out;
}

double brute_force_copy_negativity(const PureState& psi, const IndexSubset& side_a, int m,
                                   Convention conv) {
    if (m < 1) throw validation_error("brute_force_copy_negativity: copy count must be >= 1");
    if (side_a.empty())
        throw validation_error("brute_force_copy_negativity: side A must be nonempty");
    if (side_a.members().back() >= psi.dims().count())
        throw validation_error("brute_force_copy_negativity: party index out of range");
    if (side_a.size() == psi.dims().count())
        throw validation_error("brute_force_copy_negativity: side A must be a proper subset");

    double doubled = 0.0;
    if (side_a.size() == 1) {
        // Schmidt fast path: eigenvalues of the one-copy reduction, tensored m times.
        const double st = sqrt_trace(kron_power(reduced(psi, side_a), static_cast<std::size_t>(m)));
        doubled = st * st - 1.0;
    } else {
        const CopiedState copied = tensor_copies(psi, static_cast<std::size_t>(m));
        if (copied.state.dim() > kFullDensitySideCap)
            throw capacity_error("brute_force_copy_negativity: full density path is capped at side " +
                                 std::to_string(kFullDensitySideCap));
        const ComplexMatrix rho = density(copied.state);
        const ComplexMatrix pt =
            partial_transpose(rho, copied.state.dims(), copied.group_positions(side_a));
        doubled = trace_norm_hermitian(pt) - 1.0;
    }
    if (doubled < 0.0) {
        if (doubled < -1e-9)
            throw numeric_error("brute_force_copy_negativity: value below the round-off clamp");
        doubled = 0.0;
    }
    return apply_convention(doubled, conv);
}

} // namespace monolab
