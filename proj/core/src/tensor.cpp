#include "monolab/tensor.hpp"

#include "monolab/config.hpp"
#include "monolab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace monolab {

PartyDims::PartyDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw validation_error("PartyDims requires at least one party");
    for (std::size_t d : dims_) {
        if (d < 2) throw validation_error("every local dimension must be >= 2");
        if (d > element_cap() / side_) throw capacity_error("composite dimension exceeds the element cap");
        side_ *= d;
    }
}

std::size_t PartyDims::stride(std::size_t party) const {
    if (party >= dims_.size()) throw validation_error("party index out of range");
    std::size_t s = 1;
    for (std::size_t k = party + 1; k < dims_.size(); ++k) s *= dims_[k];
    return s;
}

IndexSubset::IndexSubset(std::vector<std::size_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw validation_error("IndexSubset members must be distinct");
}

bool IndexSubset::contains(std::size_t party) const {
    return std::binary_search(members_.begin(), members_.end(), party);
}

std::vector<std::size_t> IndexSubset::complement(const PartyDims& dims) const {
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < dims.count(); ++p)
        if (!contains(p)) rest.push_back(p);
    return rest;
}

namespace {

void require_square_on(const ComplexMatrix& rho, const PartyDims& dims, const char* op) {
    if (!rho.is_square()) throw shape_error(std::string(op) + ": matrix must be square");
    if (rho.rows() != dims.side())
        throw shape_error(std::string(op) + ": matrix side " + std::to_string(rho.rows()) +
                          " does not match party dims product " + std::to_string(dims.side()));
}

void require_valid_subset(const IndexSubset& subset, const PartyDims& dims, const char* op) {
    if (subset.empty()) throw validation_error(std::string(op) + ": subset must be nonempty");
    if (subset.members().back() >= dims.count())
        throw validation_error(std::string(op) + ": party index out of range");
}

// Composite-index offsets of all digit combinations of the given parties.
std::vector<std::size_t> subset_offsets(const PartyDims& dims, const std::vector<std::size_t>& parties) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t p : parties) {
        const std::size_t stride = dims.stride(p);
        const std::size_t d = dims.dims()[p];
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * d);
        for (std::size_t base : offsets)
            for (std::size_t digit = 0; digit < d; ++digit) next.push_back(base + digit * stride);
        offsets.swap(next);
    }
    return offsets;
}

} // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() == 0 || b.rows() == 0) throw shape_error("kron: empty operand");
    if (a.rows() > element_cap() / b.rows() || a.cols() > element_cap() / b.cols())
        throw capacity_error("kron: result exceeds the element cap");
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols()); // re-checks total entries
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix kron_power(const ComplexMatrix& a, std::size_t m) {
    if (m == 0) throw validation_error("kron_power: exponent must be >= 1");
    ComplexMatrix out = a;
    for (std::size_t k = 1; k < m; ++k) out = kron(out, a);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const PartyDims& dims, const IndexSubset& keep) {
    require_square_on(rho, dims, "partial_trace");
    require_valid_subset(keep, dims, "partial_trace");

    const auto kept_offsets = subset_offsets(dims, keep.members());
    const auto traced_offsets = subset_offsets(dims, keep.complement(dims));
    const std::size_t k = kept_offsets.size();

    ComplexMatrix out(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            cplx sum{};
            for (std::size_t t : traced_offsets) sum += rho(kept_offsets[r] + t, kept_offsets[c] + t);
            out(r, c) = sum;
        }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const PartyDims& dims,
                                const IndexSubset& subset) {
    require_square_on(rho, dims, "partial_transpose");
    require_valid_subset(subset, dims, "partial_transpose");

    const std::size_t side = dims.side();
    // Split every composite index into subset digits and the rest:
    // i = sub[i] + rest[i]. The transpose swaps the subset parts of row/col.
    std::vector<std::size_t> sub(side, 0);
    for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t p : subset.members()) {
            const std::size_t stride = dims.stride(p);
            sub[i] += ((i / stride) % dims.dims()[p]) * stride;
        }
    }

    ComplexMatrix out(side, side);
    for (std::size_t r = 0; r < side; ++r) {
        const std::size_t rest_r = r - sub[r];
        for (std::size_t c = 0; c < side; ++c)
            out(sub[c] + rest_r, sub[r] + (c - sub[c])) = rho(r, c);
    }
    return out;
}

namespace {

double offdiag_frobenius(const std::vector<cplx>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) sum += std::norm(a[r * n + c]);
    return std::sqrt(2.0 * sum);
}

// One complex Jacobi rotation zeroing a[p][q]. The 2x2 unitary is a phase
// times a real rotation; only rows/cols p and q of the full matrix change.
void jacobi_rotate(std::vector<cplx>& a, std::size_t n, std::size_t p, std::size_t q) {
    const cplx apq = a[p * n + q];
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cplx u = apq / r;

    const double app = a[p * n + p].real();
    const double aqq = a[q * n + q].real();
    const double tau = (aqq - app) / (2.0 * r);
    double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const cplx us = u * s;         // row-side coefficient
    const cplx cus = std::conj(us); // column-side coefficient

    // rows: row_p <- c*row_p - us*row_q ; row_q <- s*row_p + u*c*row_q
    cplx* rowp = a.data() + p * n;
    cplx* rowq = a.data() + q * n;
    const cplx uc = u * c;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx rp = rowp[k], rq = rowq[k];
        rowp[k] = c * rp - us * rq;
        rowq[k] = s * rp + uc * rq;
    }
    // columns: col_p <- c*col_p - conj(us)*col_q ; col_q <- s*col_p + conj(u)*c*col_q
    const cplx cuc = std::conj(uc);
    for (std::size_t k = 0; k < n; ++k) {
        cplx& cp = a[k * n + p];
        cplx& cq = a[k * n + q];
        const cplx vp = cp, vq = cq;
        cp = c * vp - cus * vq;
        cq = s * vp + cuc * vq;
    }

    // The rotation annihilates the pivot and keeps the diagonal real.
    a[p * n + q] = cplx{};
    a[q * n + p] = cplx{};
    a[p * n + p] = cplx{a[p * n + p].real(), 0.0};
    a[q * n + q] = cplx{a[q * n + q].real(), 0.0};
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double herm_tol) {
    if (!h.is_square()) throw shape_error("hermitian_eigenvalues: matrix must be square");
    const double defect = h.hermiticity_defect();
    if (defect > herm_tol)
        throw validation_error("hermitian_eigenvalues: matrix is not Hermitian (defect " +
                               std::to_string(defect) + ")");

    const std::size_t n = h.rows();
    std::vector<cplx> a(h.entries().begin(), h.entries().end());
    // Symmetrize away the sub-tolerance defect so rotations see exact Hermitian data.
    for (std::size_t r = 0; r < n; ++r) {
        a[r * n + r] = cplx{a[r * n + r].real(), 0.0};
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx v = 0.5 * (a[r * n + c] + std::conj(a[c * n + r]));
            a[r * n + c] = v;
            a[c * n + r] = std::conj(v);
        }
    }

    const double threshold = 1e-12 * static_cast<double>(n);
    const double skip = threshold / static_cast<double>(n);
    constexpr int kMaxSweeps = 100;

    bool converged = n == 1 || offdiag_frobenius(a, n) <= threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a[p * n + q]) > skip) jacobi_rotate(a, n, p, q);
        converged = offdiag_frobenius(a, n) <= threshold;
    }
    if (!converged) throw numeric_error("hermitian_eigenvalues: Jacobi sweeps did not converge");

    std::vector<double> eig(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = a[i * n + i].real();
        sum += eig[i];
    }
    const double tr = h.trace().real();
    if (std::abs(sum - tr) > 1e-8 * static_cast<double>(n) * std::max(1.0, std::abs(tr)))
        throw numeric_error("hermitian_eigenvalues: eigenvalue sum drifted from the trace");

    std::sort(eig.begin(), eig.end());
    return eig;
}

double trace_norm_hermitian(const ComplexMatrix& h) {
    double sum = 0.0;
    for (double ev : hermitian_eigenvalues(h)) sum += std::abs(ev);
    return sum;
}

double sqrt_trace(const ComplexMatrix& rho) {
    double sum = 0.0;
    for (double ev : hermitian_eigenvalues(rho)) {
        if (ev < -1e-8)
            throw validation_error("sqrt_trace: matrix is not positive semidefinite (eigenvalue " +
                                   std::to_string(ev) + ")");
        // Round-off scatters exact-zero eigenvalues of rank-deficient inputs
        // to ~1e-16 of either sign; the square root would amplify them to
        // 1e-8, so clamp the noise band, not just the negative side.
        if (ev > 1e-14) sum += std::sqrt(ev);
    }
    return sum;
}

} // namespace monolab
