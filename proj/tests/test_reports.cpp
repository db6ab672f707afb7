#include <monolab/errors.hpp>
#include <monolab/family.hpp>
#include <monolab/reports.hpp>
#include <monolab/superactivation.hpp>

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace monolab;

TEST_CASE("family config: parsing and defaults") {
    const FamilySpec w3 = parse_family_config("family = w3\n");
    CHECK(w3.family == FamilyKind::w3);
    CHECK(wclass_from_spec(w3).n() == 3);

    const FamilySpec wc = parse_family_config(
        "# two-party qutrit family\n"
        "family = wclass\n"
        "n = 2\n"
        "d = 3\n"
        "coefficients = 0.5,0 0.5,0 0.5,0 0,0.5\n");
    const WClassParams params = wclass_from_spec(wc);
    CHECK(params.n() == 2);
    CHECK(params.d() == 3);
    CHECK(params.coefficients()[1][1] == cplx{0.0, 0.5});

    const FamilySpec ghz = parse_family_config("family=ghz\nn=4\nd=2\n");
    CHECK(ghz_from_spec(ghz).schmidt().size() == 2);

    CHECK_THROWS_AS(parse_family_config("n = 3\n"), validation_error);       // family missing
    CHECK_THROWS_AS(parse_family_config("family = beast\n"), validation_error);
    CHECK_THROWS_AS(parse_family_config("family = w3\nwidth = 2\n"), validation_error);
    CHECK_THROWS_AS(parse_family_config("family = wclass\ncoefficients = 1;0\n"),
                    validation_error);
    CHECK_THROWS_AS(
        ghz_from_spec(parse_family_config("family = ghz\ncoefficients = 0.7,0.1 0.7,0\n")),
        validation_error);
    // wrong coefficient count for the table shape
    CHECK_THROWS_AS(
        wclass_from_spec(parse_family_config("family = wclass\nn = 3\nd = 2\ncoefficients = 1,0\n")),
        validation_error);
}

TEST_CASE("copy sweep rows: closed forms, oracle column and the model gap") {
    const auto rows = copy_sweep_rows(WClassParams::uniform(3, 2), 4, Convention::doubled);
    REQUIRE(rows.size() == 4);

    CHECK(rows[0].m == 1);
    CHECK(std::abs(rows[0].joint - 0.9428090415820634) < 1e-12);
    CHECK(std::abs(rows[0].pair_sum - 4.0 / 3.0) < 1e-12);
    CHECK(std::abs(rows[0].residual - (-0.39052429175126997)) < 1e-12);
    REQUIRE(rows[0].oracle_joint.has_value());
    CHECK(std::abs(*rows[0].oracle_joint - rows[0].joint) < 1e-9);
    CHECK(std::abs(*rows[0].model_gap) < 1e-9);

    REQUIRE(rows[1].oracle_joint.has_value());
    CHECK(std::abs(*rows[1].model_gap - 8.0 / 9.0) < 1e-9); // surfaced, not suppressed

    CHECK(rows[2].residual < 0.0);
    CHECK(rows[3].residual > 0.0);

    // first nonnegative residual at m = 4
    int first = 0;
    for (const auto& r : rows)
        if (r.residual >= 0.0) {
            first = r.m;
            break;
        }
    CHECK(first == 4);
}

TEST_CASE("copy sweep rows: standard convention halves every column") {
    const auto doubled = copy_sweep_rows(WClassParams::uniform(3, 2), 3, Convention::doubled);
    const auto standard = copy_sweep_rows(WClassParams::uniform(3, 2), 3, Convention::standard);
    for (std::size_t i = 0; i < doubled.size(); ++i) {
        CHECK(standard[i].joint == doubled[i].joint / 2.0);
        CHECK(standard[i].pair_sum == doubled[i].pair_sum / 2.0);
        CHECK(standard[i].residual == doubled[i].residual / 2.0);
    }
}

TEST_CASE("CSV: deterministic bytes, header and layout") {
    const auto rows = copy_sweep_rows(WClassParams::uniform(3, 2), 5, Convention::doubled);
    const std::string a = copy_sweep_csv(rows);
    const std::string b = copy_sweep_csv(copy_sweep_rows(WClassParams::uniform(3, 2), 5));
    CHECK(a == b);
    CHECK(a.substr(0, a.find('\n')) == "m,joint,pair_sum,residual,oracle_joint,model_gap");
    CHECK(a.find("\r") == std::string::npos);

    std::istringstream lines(a);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    CHECK(line.substr(0, 2) == "1,");
    CHECK(line.find("0.942809041582") != std::string::npos);

    const auto grid = f_surface_rows(5, 6);
    const std::string csv = f_surface_csv(grid);
    CHECK(csv.substr(0, csv.find('\n')) == "n,m,f,m_star");
    CHECK(f_surface_csv(f_surface_rows(5, 6)) == csv);
}

TEST_CASE("fig1 residual column equals the fig3 n=3 column") {
    const auto sweep = copy_sweep_rows(WClassParams::uniform(3, 2), 8, Convention::doubled);
    const auto grid = f_surface_rows(4, 8);
    for (const auto& cell : grid) {
        if (cell.n != 3) continue;
        const auto& row = sweep[static_cast<std::size_t>(cell.m - 1)];
        CHECK(std::abs(row.residual - cell.f) <= 1e-12 * std::max(1.0, std::abs(cell.f)));
    }
}

TEST_CASE("f_surface rows: per-n crossing column") {
    const auto grid = f_surface_rows(5, 10);
    for (const auto& cell : grid) {
        REQUIRE(cell.m_star.has_value());
        CHECK(*cell.m_star == 4);
        if (cell.m < *cell.m_star) CHECK(cell.f < 0.0);
        if (cell.m >= *cell.m_star) CHECK(cell.f >= 0.0);
    }
    const auto short_grid = f_surface_rows(3, 2);
    for (const auto& cell : short_grid) CHECK_FALSE(cell.m_star.has_value());
}

TEST_CASE("threshold report: W3, W5 and GHZ families") {
    FamilySpec w3;
    w3.family = FamilyKind::w3;
    const ThresholdReport r3 = threshold_report(w3, 64);
    REQUIRE(r3.m_star.has_value());
    CHECK(*r3.m_star == 4);
    REQUIRE(r3.residual_before.has_value());
    CHECK(*r3.residual_before < 0.0);
    CHECK(r3.residual_last >= 0.0);
    CHECK(r3.gamma1.value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r3.render().find("m* = 4") != std::string::npos);

    FamilySpec w5;
    w5.family = FamilyKind::wclass;
    w5.n = 5;
    w5.d = 2;
    const ThresholdReport r5 = threshold_report(w5, 64);
    REQUIRE(r5.m_star.has_value());
    CHECK(*r5.m_star == 4);

    FamilySpec ghz;
    ghz.family = FamilyKind::ghz;
    ghz.n = 3;
    ghz.d = 2;
    const ThresholdReport rg = threshold_report(ghz, 64);
    REQUIRE(rg.m_star.has_value());
    CHECK(*rg.m_star == 1);
    CHECK(rg.gamma1.status == PowerStatus::degenerate);
    CHECK(rg.render().find("m* = 1") != std::string::npos);
}

TEST_CASE("power and tighter reports") {
    FamilySpec w3;
    w3.family = FamilyKind::w3;
    const PowerReport pw = power_report(w3);
    CHECK(pw.gamma.value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(pw.delta.value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(std::abs(pw.residual_at_gamma) < 1e-9);

    const TighterReport tw = tighter_report(w3, 2.0, 2.0);
    CHECK(tw.holds);
    CHECK_FALSE(tw.conditional);
    CHECK(std::abs(tw.lhs - 64.0 / 81.0) < 1e-12);
    CHECK(std::abs(tw.lhs - tw.rhs) <= 1e-12);

    FamilySpec w5;
    w5.family = FamilyKind::wclass;
    w5.n = 5;
    const TighterReport t5 = tighter_report(w5, 2.0, 2.0);
    CHECK(t5.conditional);
    CHECK(t5.split_m == 2);
    CHECK(t5.render().find("conditional") != std::string::npos);
}

TEST_CASE("oracle report: closed forms vs definitional routes") {
    FamilySpec w3;
    w3.family = FamilyKind::w3;
    const OracleReport rep = oracle_report(w3, 3);
    CHECK(rep.all_pass);
    CHECK(rep.checks.size() >= 6);
    CHECK(rep.render().find("all oracle checks passed") != std::string::npos);
    // the documented model gap is present as an info line
    CHECK(rep.render().find("documented gap") != std::string::npos);

    FamilySpec ghz;
    ghz.family = FamilyKind::ghz;
    ghz.n = 4;
    const OracleReport gz = oracle_report(ghz, 2);
    CHECK(gz.all_pass);
}
