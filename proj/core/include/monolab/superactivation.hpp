#pragma once

#include "monolab/measures.hpp"
#include "monolab/states.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace monolab {

/// Closed-form m-copy values of a W-class state (doubled convention):
/// joint 1/2 [(1 + 4 sqrt((1-Omega1) Omega1))^m - 1] and the pair analogue
/// with the partner weight under the square root. These are the geometric
/// model; brute_force_copy_negativity is the definitional trace-norm route,
/// and the two are reported side by side because they disagree for m >= 2.
double copies_cren_one_vs_rest(const WClassParams& params, int m);
double copies_cren_pair(const WClassParams& params, std::size_t partner, int m);

struct CopySweepResult {
    int m;
    double q_joint_m;
    std::vector<double> q_pairs_m;
    double residual_m; // q_joint_m - sum(q_pairs_m)
};

CopySweepResult copies_residual(const WClassParams& params, int m);

/// Smallest copy count with nonnegative residual, if any up to m_max.
struct MinimalCopies {
    std::optional<int> m_star;
    double last_residual; // residual at m_star, or at m_max when absent
};

MinimalCopies minimal_copies(const WClassParams& params, int m_max = 64);

/// Residual of the uniform n-party family under m copies:
/// 1/2 [(1 + 4 sqrt(n-1)/n)^m - (n-1)(1 + 4/n)^m + n - 2].
double f_surface(int n, int m);

/// Per-copy values value(m) = Q(m)/m for m = 1..m_max, with a divergence
/// flag set when the last three values grow by more than 5% per step.
struct RegularizedSequence {
    std::vector<std::pair<int, double>> values;
    bool diverging;
};

/// Geometric model Q(m) = 1/2 (b^m - 1) with base b = 1 + 2N >= 1.
RegularizedSequence regularized_sequence(double single_copy_base, int m_max);

/// General form for caller-supplied per-m totals (e.g. additive Q(m) = m q).
RegularizedSequence regularized_sequence(const std::function<double(int)>& q_of_m, int m_max);

/// Negativity of psi^{tensor m} across the regrouped cut (all copies of
/// side_a vs the rest). Single-party cuts take the Schmidt fast path through
/// sqrt_trace of the Kronecker power of the one-copy reduction; wider cuts
/// build the full density matrix and partial-transpose it (side <= 4096).
double brute_force_copy_negativity(const PureState& psi, const IndexSubset& side_a, int m,
                                   Convention conv = kDefaultConvention);

} // namespace monolab
