#include "monolab/monogamy.hpp"

#include "monolab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace monolab {

namespace {

constexpr double kIneqSlack = 1e-12; // absolute slack for inequality checks at order 1
constexpr double kUnitTol = 1e-12;   // normalized pair this close to 1 counts as 1

struct NormalizedPairs {
    std::vector<double> inside; // normalized pairs strictly inside (0, 1)
    std::size_t at_one = 0;     // pairs equal to the joint value
};

NormalizedPairs normalize(const CorrelationProfile& profile) {
    if (profile.q_joint <= 0.0)
        throw validation_error("power solver: q_joint must be positive");
    NormalizedPairs np;
    for (double q : profile.q_pairs) {
        if (q <= 0.0) continue;
        const double x = q / profile.q_joint;
        if (x >= 1.0 - kUnitTol)
            ++np.at_one;
        else
            np.inside.push_back(x);
    }
    return np;
}

double pair_power_sum(const NormalizedPairs& np, double gamma) {
    double s = static_cast<double>(np.at_one);
    for (double x : np.inside) s += std::pow(x, gamma);
    return s;
}

// Unique root of sum x_j^gamma = 1 when all x_j in (0,1) and there are at
// least two terms. Bisection to near-machine interval width so the residual
// at the returned root stays well inside the inequality slack.
PowerResult saturating_root(const NormalizedPairs& np, const PowerSolverConfig& cfg) {
    double lo = 0.0;
    double hi = 1.0;
    while (pair_power_sum(np, hi) > 1.0) {
        if (hi >= cfg.gamma_cap) return {cfg.gamma_cap, PowerStatus::unbounded};
        lo = hi;
        hi = std::min(hi * 2.0, cfg.gamma_cap);
    }
    for (int it = 0; it < cfg.bisection_max_iter && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (pair_power_sum(np, mid) > 1.0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    if (std::abs(pair_power_sum(np, root) - 1.0) > cfg.tol)
        throw numeric_error("power solver: bisection did not reach the saturation tolerance");
    return {root, PowerStatus::ok};
}

void require_solver_config(const PowerSolverConfig& cfg) {
    if (cfg.tol <= 0.0) throw validation_error("PowerSolverConfig: tol must be positive");
    if (cfg.gamma_cap <= 1.0) throw validation_error("PowerSolverConfig: gamma_cap must exceed 1");
    if (cfg.bisection_max_iter < 1) throw validation_error("PowerSolverConfig: need iterations");
}

} // namespace

CorrelationProfile::CorrelationProfile(double joint, std::vector<double> pairs)
    : q_joint(joint), q_pairs(std::move(pairs)) {
    if (!(q_joint >= 0.0)) throw validation_error("CorrelationProfile: q_joint must be >= 0");
    for (double q : q_pairs) {
        if (!(q >= 0.0)) throw validation_error("CorrelationProfile: pairwise values must be >= 0");
        if (q > q_joint + 1e-9)
            throw validation_error("CorrelationProfile: pair value " + std::to_string(q) +
                                   " exceeds the joint value " + std::to_string(q_joint) +
                                   " (correlations cannot grow under partial trace)");
    }
}

double residual(const CorrelationProfile& profile, double x) {
    double r = std::pow(profile.q_joint, x);
    for (double q : profile.q_pairs) r -= std::pow(q, x);
    return r;
}

PowerResult critical_power(const CorrelationProfile& profile, const PowerSolverConfig& cfg) {
    require_solver_config(cfg);
    const NormalizedPairs np = normalize(profile);
    if (np.at_one == 0 && np.inside.empty()) return {0.0, PowerStatus::degenerate};
    if (np.at_one >= 2 || (np.at_one == 1 && !np.inside.empty()))
        return {cfg.gamma_cap, PowerStatus::unbounded}; // sum stays above 1 for every power
    if (np.at_one == 1) return {0.0, PowerStatus::ok};  // sum is identically 1
    if (np.inside.size() == 1) return {0.0, PowerStatus::ok};
    return saturating_root(np, cfg);
}

PowerResult polygamy_power(const CorrelationProfile& profile, const PowerSolverConfig& cfg) {
    require_solver_config(cfg);
    const NormalizedPairs np = normalize(profile);
    if (np.at_one == 0 && np.inside.empty()) return {0.0, PowerStatus::degenerate};
    if (np.at_one >= 1) return {cfg.gamma_cap, PowerStatus::unbounded}; // >= 1 for every power
    if (np.inside.size() == 1) return {0.0, PowerStatus::ok};
    return saturating_root(np, cfg);
}

bool is_monogamous(const CorrelationProfile& profile, double x) {
    if (profile.q_joint == 0.0) return true; // all pairs are zero by the profile invariant
    double s = 0.0;
    for (double q : profile.q_pairs)
        if (q > 0.0) s += std::pow(q / profile.q_joint, x);
    return 1.0 - s >= -kIneqSlack;
}

bool is_polygamous(const CorrelationProfile& profile, double y) {
    if (profile.q_joint == 0.0) return true;
    double s = 0.0;
    for (double q : profile.q_pairs)
        if (q > 0.0) s += std::pow(q / profile.q_joint, y);
    return 1.0 - s <= kIneqSlack;
}

AlphaBetaEstimate estimate_alpha_beta(std::span<const CorrelationProfile> profiles,
                                      const PowerSolverConfig& cfg) {
    if (profiles.empty()) throw validation_error("estimate_alpha_beta: no profiles");
    AlphaBetaEstimate est{0.0, 0.0, 0, 0, 0, 0};
    bool have_alpha = false, have_beta = false;
    for (const CorrelationProfile& p : profiles) {
        const PowerResult g = critical_power(p, cfg);
        if (g.status == PowerStatus::degenerate) {
            ++est.alpha_skipped;
        } else {
            if (g.status == PowerStatus::unbounded) ++est.alpha_unbounded;
            est.alpha_hat = have_alpha ? std::max(est.alpha_hat, g.value) : g.value;
            have_alpha = true;
        }
        const PowerResult d = polygamy_power(p, cfg);
        if (d.status == PowerStatus::degenerate) {
            ++est.beta_skipped;
        } else {
            if (d.status == PowerStatus::unbounded) ++est.beta_unbounded;
            est.beta_hat = have_beta ? std::min(est.beta_hat, d.value) : d.value;
            have_beta = true;
        }
    }
    if (!have_alpha || !have_beta)
        throw validation_error("estimate_alpha_beta: every sample was degenerate");
    return est;
}

double lemma_gap(double t, double x) {
    if (!(t >= 0.0 && t <= 1.0)) throw validation_error("lemma_gap: t must lie in [0, 1]");
    if (!(x >= 1.0)) throw validation_error("lemma_gap: x must be >= 1");
    return std::pow(1.0 + t, x) - 1.0 - (std::pow(2.0, x) - 1.0) * std::pow(t, x);
}

TighterBound tighter_bound_tripartite(const CorrelationProfile& profile, double alpha, double s) {
    if (profile.q_pairs.size() != 2)
        throw validation_error("tighter_bound_tripartite: profile must have exactly two pairs");
    if (!(alpha > 0.0)) throw validation_error("tighter_bound_tripartite: alpha must be positive");
    if (!(s >= 1.0)) throw validation_error("tighter_bound_tripartite: s must be >= 1");
    if (!is_monogamous(profile, alpha))
        throw validation_error("tighter_bound_tripartite: profile is not monogamous at power alpha");

    const double p1 = std::max(profile.q_pairs[0], profile.q_pairs[1]);
    const double p2 = std::min(profile.q_pairs[0], profile.q_pairs[1]);
    const double t = s * alpha;
    TighterBound out;
    out.lhs = std::pow(profile.q_joint, t);
    out.rhs = std::pow(p1, t) + (std::pow(2.0, s) - 1.0) * std::pow(p2, t);
    out.holds = out.lhs >= out.rhs - kIneqSlack;
    return out;
}

double tighter_bound_multipartite(std::span<const double> q_pairs, double alpha, double s,
                                  std::size_t split_m) {
    const std::size_t n = q_pairs.size() + 1; // pairs cover parties 2..n
    if (n < 4) throw validation_error("tighter_bound_multipartite: need at least 4 parties");
    if (split_m < 2 || split_m > n - 2)
        throw validation_error("tighter_bound_multipartite: split index must lie in [2, n-2]");
    if (!(alpha > 0.0)) throw validation_error("tighter_bound_multipartite: alpha must be positive");
    if (!(s >= 1.0)) throw validation_error("tighter_bound_multipartite: s must be >= 1");
    for (double q : q_pairs)
        if (!(q >= 0.0)) throw validation_error("tighter_bound_multipartite: pairs must be >= 0");

    const double t = s * alpha;
    const double w = std::pow(2.0, s) - 1.0;
    double sum = 0.0;
    for (std::size_t j = 2; j <= split_m; ++j)
        sum += std::pow(q_pairs[j - 2], t) * std::pow(w, static_cast<double>(j - 2));
    for (std::size_t j = split_m + 1; j <= n - 1; ++j)
        sum += std::pow(q_pairs[j - 2], t) * std::pow(w, static_cast<double>(split_m));
    sum += std::pow(q_pairs[n - 2], t) * std::pow(w, static_cast<double>(split_m - 1));
    return sum;
}

} // namespace monolab
