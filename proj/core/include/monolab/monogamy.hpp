#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace monolab {

/// One joint correlation across the one-vs-rest cut plus the pairwise values
/// against every other party. All entries nonnegative; the joint value must
/// dominate every pair (nonincreasing under partial trace) up to 1e-9 slack.
struct CorrelationProfile {
    double q_joint;
    std::vector<double> q_pairs;

    CorrelationProfile(double joint, std::vector<double> pairs);
};

struct PowerSolverConfig {
    double tol = 1e-10;      // saturation tolerance on sum x_j^gamma = 1
    double gamma_cap = 64.0; // reported instead of +inf for unbounded profiles
    int bisection_max_iter = 200;
};

enum class PowerStatus {
    ok,         // finite saturating power found
    degenerate, // no nonzero pairwise terms; value 0 by convention
    unbounded,  // no finite saturating power; value = gamma_cap
};

struct PowerResult {
    double value;
    PowerStatus status;
};

/// q_joint^x - sum_j q_pairs[j]^x. Positive iff monogamous at power x.
double residual(const CorrelationProfile& profile, double x);

/// Smallest power at which the normalized pairs saturate sum x_j^g = 1
/// (the monogamy onset). Monotone bisection with bracket doubling.
PowerResult critical_power(const CorrelationProfile& profile, const PowerSolverConfig& cfg = {});

/// Largest power saturating sum x_j^d = 1 (the polygamy ceiling). Same root
/// as critical_power for profiles with all normalized pairs inside (0, 1).
PowerResult polygamy_power(const CorrelationProfile& profile, const PowerSolverConfig& cfg = {});

bool is_monogamous(const CorrelationProfile& profile, double x);
bool is_polygamous(const CorrelationProfile& profile, double y);

/// Sampled max of critical powers / min of polygamy powers over a profile
/// family. These are estimates over the samples, not the true sup/inf.
struct AlphaBetaEstimate {
    double alpha_hat;
    double beta_hat;
    std::size_t alpha_skipped;
    std::size_t alpha_unbounded;
    std::size_t beta_skipped;
    std::size_t beta_unbounded;
};

AlphaBetaEstimate estimate_alpha_beta(std::span<const CorrelationProfile> profiles,
                                      const PowerSolverConfig& cfg = {});

/// (1+t)^x - 1 - (2^x - 1) t^x for t in [0,1], x >= 1. Nonnegative.
double lemma_gap(double t, double x);

/// Tripartite tighter bound at t = s * alpha:
///   lhs = q_joint^t, rhs = p_max^t + (2^s - 1) p_min^t.
/// Requires a two-pair profile monogamous at power alpha.
struct TighterBound {
    double lhs;
    double rhs;
    bool holds;
};

TighterBound tighter_bound_tripartite(const CorrelationProfile& profile, double alpha, double s);

/// Weighted multipartite lower bound at t = s * alpha over pairs for parties
/// 2..n (q_pairs has n-1 entries): weights (2^s-1)^(j-2) for j = 2..split_m,
/// (2^s-1)^split_m for j = split_m+1..n-1, and (2^s-1)^(split_m-1) for j = n.
/// The ordering hypotheses behind the bound involve joint cuts not present in
/// the input; callers assert them, the value is computed unconditionally.
double tighter_bound_multipartite(std::span<const double> q_pairs, double alpha, double s,
                                  std::size_t split_m);

} // namespace monolab
