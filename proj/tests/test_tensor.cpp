#include <monolab/config.hpp>
#include <monolab/errors.hpp>
#include <monolab/states.hpp>
#include <monolab/tensor.hpp>

#include "support/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace monolab;
using testsupport::random_density;
using testsupport::random_hermitian;

namespace {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    REQUIRE(a.rows() == b.rows());
    REQUIRE(a.cols() == b.cols());
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

struct ElementCapGuard {
    std::size_t saved = element_cap();
    ~ElementCapGuard() { set_element_cap(saved); }
};

} // namespace

TEST_CASE("kron: identities and scaling") {
    CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4)) == 0.0);

    ComplexMatrix scalar(1, 1);
    scalar(0, 0) = 2.0;
    ComplexMatrix m(2, 3);
    m(0, 0) = cplx{1, 2};
    m(1, 2) = cplx{0, -1};
    const ComplexMatrix scaled = kron(scalar, m);
    CHECK(scaled(0, 0) == cplx{2, 4});
    CHECK(scaled(1, 2) == cplx{0, -2});
}

TEST_CASE("kron: Pauli X tensor Z block pattern") {
    ComplexMatrix x(2, 2), z(2, 2);
    x(0, 1) = x(1, 0) = 1.0;
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const ComplexMatrix xz = kron(x, z);
    // [[0, Z], [Z, 0]]
    ComplexMatrix expected(4, 4);
    expected(0, 2) = 1.0;
    expected(1, 3) = -1.0;
    expected(2, 0) = 1.0;
    expected(3, 1) = -1.0;
    CHECK(max_abs_diff(xz, expected) == 0.0);
}

TEST_CASE("kron: element cap is enforced") {
    ElementCapGuard guard;
    set_element_cap(128);
    const ComplexMatrix a = ComplexMatrix::identity(8);
    CHECK_THROWS_AS(kron(a, a), capacity_error);
    CHECK_NOTHROW(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)));
    CHECK_THROWS_AS(set_element_cap(1), validation_error);
}

TEST_CASE("kron_power") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(kron_power(i2, 3).rows() == 8);
    CHECK_THROWS_AS(kron_power(i2, 0), validation_error);
}

TEST_CASE("partial_trace: product state factors out") {
    std::mt19937 rng(11);
    const ComplexMatrix rho_a = random_density(2, rng);
    const ComplexMatrix rho_b = random_density(3, rng);
    const ComplexMatrix joint = kron(rho_a, rho_b);
    const PartyDims dims{2, 3};
    CHECK(max_abs_diff(partial_trace(joint, dims, IndexSubset{0}), rho_a) < 1e-14);
    CHECK(max_abs_diff(partial_trace(joint, dims, IndexSubset{1}), rho_b) < 1e-14);
}

TEST_CASE("partial_trace: Bell and W3 reductions") {
    const GHZClassParams bell(2, 2, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    const ComplexMatrix bell_rho = density(build_ghz_class(bell));
    const ComplexMatrix half_id = partial_trace(bell_rho, PartyDims{2, 2}, IndexSubset{0});
    CHECK(std::abs(half_id(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(half_id(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(half_id(0, 1)) < 1e-15);

    const ComplexMatrix w3 = density(build_wclass(WClassParams::uniform(3, 2)));
    const ComplexMatrix red = partial_trace(w3, PartyDims{2, 2, 2}, IndexSubset{0});
    CHECK(red(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(red(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(red(0, 1)) < 1e-15);
}

TEST_CASE("partial_trace: keeping every party returns the input") {
    std::mt19937 rng(12);
    const ComplexMatrix rho = random_density(6, rng);
    CHECK(max_abs_diff(partial_trace(rho, PartyDims{2, 3}, IndexSubset{0, 1}), rho) == 0.0);
}

TEST_CASE("partial_trace: shape errors") {
    const ComplexMatrix rho = ComplexMatrix::identity(4);
    CHECK_THROWS_AS(partial_trace(rho, PartyDims{2, 3}, IndexSubset{0}), shape_error);
    CHECK_THROWS_AS(partial_trace(rho, PartyDims{2, 2}, IndexSubset{2}), validation_error);
    CHECK_THROWS_AS(partial_trace(rho, PartyDims{2, 2}, IndexSubset{std::vector<std::size_t>{}}),
                    validation_error);
}

TEST_CASE("partial_transpose: involution and product spectrum") {
    std::mt19937 rng(13);
    const PartyDims dims{2, 3};
    const ComplexMatrix rho = random_density(6, rng);
    const ComplexMatrix once = partial_transpose(rho, dims, IndexSubset{0});
    CHECK(max_abs_diff(partial_transpose(once, dims, IndexSubset{0}), rho) == 0.0);

    const ComplexMatrix rho_a = random_density(2, rng);
    const ComplexMatrix rho_b = random_density(3, rng);
    const ComplexMatrix prod = kron(rho_a, rho_b);
    const auto before = hermitian_eigenvalues(prod);
    const auto after = hermitian_eigenvalues(partial_transpose(prod, dims, IndexSubset{0}));
    for (std::size_t i = 0; i < before.size(); ++i)
        CHECK(std::abs(before[i] - after[i]) < 1e-10);
}

TEST_CASE("partial_transpose: preserves trace and hermiticity") {
    std::mt19937 rng(14);
    for (auto dims : {PartyDims{2, 2}, PartyDims{2, 3}}) {
        const ComplexMatrix h = random_hermitian(dims.side(), rng);
        const ComplexMatrix pt = partial_transpose(h, dims, IndexSubset{0});
        CHECK(std::abs(pt.trace() - h.trace()) < 1e-14);
        CHECK(pt.hermiticity_defect() < 1e-14);
    }
}

TEST_CASE("partial_transpose: Bell state spectrum") {
    const GHZClassParams bell(2, 2, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    const ComplexMatrix pt =
        partial_transpose(density(build_ghz_class(bell)), PartyDims{2, 2}, IndexSubset{0});
    const auto eig = hermitian_eigenvalues(pt);
    REQUIRE(eig.size() == 4);
    CHECK(eig[0] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(eig[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(eig[3] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues: small exact cases") {
    CHECK(hermitian_eigenvalues(ComplexMatrix::identity(3)) == std::vector<double>{1.0, 1.0, 1.0});

    ComplexMatrix diag(3, 3);
    diag(0, 0) = 5.0;
    diag(1, 1) = -2.0;
    diag(2, 2) = 0.0;
    CHECK(hermitian_eigenvalues(diag) == std::vector<double>{-2.0, 0.0, 5.0});

    ComplexMatrix flip(2, 2);
    flip(0, 1) = flip(1, 0) = 1.0;
    const auto eig = hermitian_eigenvalues(flip);
    CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(eig[1] == doctest::Approx(1.0).epsilon(1e-14));

    ComplexMatrix cplx_case(2, 2);
    cplx_case(0, 0) = 2.0;
    cplx_case(1, 1) = 2.0;
    cplx_case(0, 1) = cplx{0.0, 1.0};
    cplx_case(1, 0) = cplx{0.0, -1.0};
    const auto ceig = hermitian_eigenvalues(cplx_case);
    CHECK(ceig[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ceig[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues: validates input") {
    ComplexMatrix bad(2, 2);
    bad(0, 1) = 1.0; // missing conjugate partner
    CHECK_THROWS_AS(hermitian_eigenvalues(bad), validation_error);
    CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3)), shape_error);

    // a defect below the caller's tolerance is symmetrized away
    ComplexMatrix nearly(2, 2);
    nearly(0, 0) = 1.0;
    nearly(1, 1) = 2.0;
    nearly(0, 1) = cplx{0.5, 1e-7};
    nearly(1, 0) = cplx{0.5, 1e-7}; // conj defect 2e-7
    CHECK_THROWS_AS(hermitian_eigenvalues(nearly), validation_error);
    CHECK_NOTHROW(hermitian_eigenvalues(nearly, 1e-6));
}

TEST_CASE("hermitian_eigenvalues: rotations survive extreme scales") {
    // The rotations shrink off-diagonal entries all the way to exact zero,
    // so even 1e200-scale input converges below the absolute threshold.
    ComplexMatrix huge(3, 3);
    huge(0, 0) = 1e200;
    huge(1, 1) = -1e200;
    huge(2, 2) = 0.5e200;
    huge(0, 1) = huge(1, 0) = 0.3e200;
    huge(0, 2) = cplx{0.0, 0.7e200};
    huge(2, 0) = cplx{0.0, -0.7e200};
    huge(1, 2) = huge(2, 1) = 0.1e200;
    const auto eig = hermitian_eigenvalues(huge);
    double sum = 0.0;
    for (double e : eig) sum += e;
    CHECK(std::abs(sum - 0.5e200) <= 1e-12 * 1e200);
}

TEST_CASE("hermitian_eigenvalues: sum matches trace on random input") {
    std::mt19937 rng(15);
    for (std::size_t n : {2u, 5u, 9u}) {
        const ComplexMatrix h = random_hermitian(n, rng);
        const auto eig = hermitian_eigenvalues(h);
        double sum = 0.0;
        for (double e : eig) sum += e;
        CHECK(std::abs(sum - h.trace().real()) < 1e-10 * static_cast<double>(n));
    }
}

TEST_CASE("trace_norm_hermitian: known values") {
    std::mt19937 rng(16);
    CHECK(trace_norm_hermitian(random_density(5, rng)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(trace_norm_hermitian(ComplexMatrix(3, 3)) == 0.0);

    const GHZClassParams bell(2, 2, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    const ComplexMatrix pt =
        partial_transpose(density(build_ghz_class(bell)), PartyDims{2, 2}, IndexSubset{0});
    CHECK(trace_norm_hermitian(pt) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("trace_norm multiplicativity under kron") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 8); // side <= 9
        const ComplexMatrix x = random_hermitian(n, rng);
        const double tn = trace_norm_hermitian(x);
        const double tn2 = trace_norm_hermitian(kron(x, x));
        CHECK(std::abs(tn2 - tn * tn) <= 1e-8 * std::max(1.0, tn * tn));
    }
}

TEST_CASE("sqrt_trace: known values and PSD validation") {
    // rank-1 projector
    const ComplexMatrix proj = density(build_wclass(WClassParams::uniform(3, 2)));
    CHECK(sqrt_trace(proj) == doctest::Approx(1.0).epsilon(1e-10));

    ComplexMatrix diag(2, 2);
    diag(0, 0) = 2.0 / 3.0;
    diag(1, 1) = 1.0 / 3.0;
    CHECK(sqrt_trace(diag) == doctest::Approx(1.39384685011735180).epsilon(1e-14));

    for (std::size_t d : {2u, 3u, 5u}) {
        ComplexMatrix mixed(d, d);
        for (std::size_t i = 0; i < d; ++i) mixed(i, i) = 1.0 / static_cast<double>(d);
        CHECK(sqrt_trace(mixed) ==
              doctest::Approx(std::sqrt(static_cast<double>(d))).epsilon(1e-13));
    }

    ComplexMatrix indefinite(2, 2);
    indefinite(0, 0) = 1.0;
    indefinite(1, 1) = -1e-6;
    CHECK_THROWS_AS(sqrt_trace(indefinite), validation_error);
}

TEST_CASE("sqrt_trace multiplicativity under kron") {
    std::mt19937 rng(18);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix rho = random_density(3, rng);
        const ComplexMatrix sigma = random_density(4, rng);
        CHECK(std::abs(sqrt_trace(kron(rho, sigma)) - sqrt_trace(rho) * sqrt_trace(sigma)) < 1e-10);
    }
}

TEST_CASE("PartyDims and IndexSubset validation") {
    CHECK_THROWS_AS((PartyDims{1, 2}), validation_error);
    CHECK_THROWS_AS(PartyDims(std::vector<std::size_t>{}), validation_error);
    CHECK_THROWS_AS((IndexSubset{0, 0}), validation_error);
    CHECK((PartyDims{2, 3, 4}).stride(0) == 12);
    CHECK((PartyDims{2, 3, 4}).stride(2) == 1);
    CHECK((IndexSubset{2, 0}).members() == std::vector<std::size_t>{0, 2});
}
