#pragma once

#include "monolab/states.hpp"
#include "monolab/tensor.hpp"

namespace monolab {

/// Negativity normalization. The two variants differ by an exact factor 2:
///   standard: N = (||rho^{T_A}|| - 1) / 2
///   doubled:  N = ||rho^{T_A}|| - 1
/// Worked closed forms in this library (W-class, copy formulas) are stated in
/// the doubled variant, so that is the default everywhere.
enum class Convention { standard, doubled };

inline constexpr Convention kDefaultConvention = Convention::doubled;

inline double apply_convention(double doubled_value, Convention conv) {
    return conv == Convention::doubled ? doubled_value : doubled_value / 2.0;
}

/// Negativity of a density matrix across side_a vs the rest, via the trace
/// norm of the partial transpose. Validates that rho is a density matrix.
double negativity(const ComplexMatrix& rho, const PartyDims& dims, const IndexSubset& side_a,
                  Convention conv = kDefaultConvention);

/// Negativity of a pure state across side_a, via the Schmidt form
/// (Tr sqrt(rho_A))^2 - 1. Agrees with negativity(density(psi), ...).
double pure_negativity(const PureState& psi, const IndexSubset& side_a,
                       Convention conv = kDefaultConvention);

/// Convex-roof extended negativity of a W-class state across party 0 vs the
/// rest: 2 sqrt((1 - Omega1) Omega1) in the doubled variant.
double cren_wclass_one_vs_rest(const WClassParams& params, Convention conv = kDefaultConvention);

/// Convex-roof extended negativity of the (party 0, partner) reduction:
/// 2 sqrt((1 - Omega1) * sum_i |a_{partner,i}|^2). partner is 0-based in [1, n-1].
double cren_wclass_pair(const WClassParams& params, std::size_t partner,
                        Convention conv = kDefaultConvention);

} // namespace monolab
