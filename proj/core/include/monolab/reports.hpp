#pragma once

#include "monolab/family.hpp"
#include "monolab/measures.hpp"
#include "monolab/monogamy.hpp"
#include "monolab/states.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monolab {

// All CSV output: header line, comma-separated fields, floating values with
// 12 significant digits, LF line endings. Deterministic for fixed inputs.

/// One row of a copy sweep (commands fig1/fig2): closed-form joint and pair
/// sums, their residual, the trace-norm oracle where it fits the caps, and
/// the gap between the closed-form model and the oracle.
struct CopySweepRow {
    int m;
    double joint;
    double pair_sum;
    double residual;
    std::optional<double> oracle_joint;
    std::optional<double> model_gap;
};

std::vector<CopySweepRow> copy_sweep_rows(const WClassParams& params, int m_max,
                                          Convention conv = kDefaultConvention);
std::string copy_sweep_csv(std::span<const CopySweepRow> rows);

/// One cell of the uniform-family residual surface (command fig3), with the
/// per-n crossing copy count within the swept range.
struct FSurfaceRow {
    int n;
    int m;
    double f;
    std::optional<int> m_star;
};

std::vector<FSurfaceRow> f_surface_rows(int n_max, int m_max);
std::string f_surface_csv(std::span<const FSurfaceRow> rows);

/// m=1 correlation profiles of the supported families (doubled by default).
CorrelationProfile wclass_profile(const WClassParams& params, Convention conv = kDefaultConvention);
CorrelationProfile ghz_profile(const GHZClassParams& params, Convention conv = kDefaultConvention);

struct ThresholdReport {
    std::string family;
    int m_max;
    std::optional<int> m_star;
    std::optional<double> residual_before; // at m_star - 1 when m_star >= 2
    double residual_last;                  // at m_star, or at m_max when absent
    PowerResult gamma1;                    // critical power of the m=1 profile

    std::string render() const;
};

ThresholdReport threshold_report(const FamilySpec& spec, int m_max,
                                 Convention conv = kDefaultConvention);

struct PowerReport {
    std::string family;
    CorrelationProfile profile;
    PowerResult gamma;
    PowerResult delta;
    double residual_at_gamma;

    std::string render() const;
};

PowerReport power_report(const FamilySpec& spec, Convention conv = kDefaultConvention);

struct TighterReport {
    std::string family;
    double alpha;
    double s;
    double t;
    std::size_t split_m; // 0 for the tripartite form
    double lhs;
    double rhs;
    bool holds;
    bool conditional; // multipartite ordering hypotheses are caller-asserted

    std::string render() const;
};

TighterReport tighter_report(const FamilySpec& spec, double alpha, double s,
                             Convention conv = kDefaultConvention);

/// Closed-form vs definitional cross-checks for one family.
struct OracleCheck {
    std::string name;
    double expected;
    double actual;
    double tol;
    bool pass;
};

struct OracleReport {
    std::string family;
    std::vector<OracleCheck> checks;
    bool all_pass;

    std::string render() const;
};

OracleReport oracle_report(const FamilySpec& spec, int m_max, Convention conv = kDefaultConvention);

/// Shared numeric formatting for CSV and reports: %.12g.
std::string format_g12(double value);

} // namespace monolab
