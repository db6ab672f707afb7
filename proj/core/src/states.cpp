#include "monolab/states.hpp"

#include "monolab/config.hpp"
#include "monolab/errors.hpp"

#include <cmath>
#include <string>

namespace monolab {

namespace {
constexpr double kNormTol = 1e-10;

double squared_norm(std::span<const cplx> v) {
    double n2 = 0.0;
    for (const cplx& x : v) n2 += std::norm(x);
    return n2;
}

std::vector<std::size_t> digit_offsets(const PartyDims& dims, const std::vector<std::size_t>& parties) {
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

PureState::PureState(PartyDims dims, std::vector<cplx> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != dims_.side())
        throw shape_error("PureState: amplitude count " + std::to_string(amplitudes_.size()) +
                          " does not match dims product " + std::to_string(dims_.side()));
    const double n2 = squared_norm(amplitudes_);
    if (std::abs(n2 - 1.0) > kNormTol)
        throw validation_error("PureState: squared norm " + std::to_string(n2) + " is not 1");
}

WClassParams::WClassParams(std::size_t n, std::size_t d, std::vector<std::vector<cplx>> coefficients)
    : n_(n), d_(d), a_(std::move(coefficients)) {
    if (n_ < 2) throw validation_error("WClassParams: need at least 2 parties");
    if (d_ < 2) throw validation_error("WClassParams: local dimension must be >= 2");
    if (a_.size() != n_) throw validation_error("WClassParams: coefficient table must have n rows");
    double total = 0.0;
    for (const auto& row : a_) {
        if (row.size() != d_ - 1)
            throw validation_error("WClassParams: each row must have d-1 letters");
        total += squared_norm(row);
    }
    if (std::abs(total - 1.0) > kNormTol)
        throw validation_error("WClassParams: coefficients are not normalized (sum " +
                               std::to_string(total) + ")");
}

WClassParams WClassParams::uniform(std::size_t n, std::size_t d) {
    if (n < 2 || d < 2) throw validation_error("WClassParams::uniform: need n >= 2 and d >= 2");
    const double amp = 1.0 / std::sqrt(static_cast<double>(n * (d - 1)));
    return WClassParams(n, d, std::vector<std::vector<cplx>>(n, std::vector<cplx>(d - 1, amp)));
}

double WClassParams::party_weight(std::size_t s) const {
    if (s >= n_) throw validation_error("WClassParams: party index out of range");
    return squared_norm(a_[s]);
}

GHZClassParams::GHZClassParams(std::size_t n, std::size_t local_dim, std::vector<double> schmidt)
    : n_(n), d_(local_dim), schmidt_(std::move(schmidt)) {
    if (n_ < 2) throw validation_error("GHZClassParams: need at least 2 parties");
    if (d_ < 2) throw validation_error("GHZClassParams: local dimension must be >= 2");
    if (schmidt_.empty()) throw validation_error("GHZClassParams: need at least one Schmidt term");
    double total = 0.0;
    for (double l : schmidt_) {
        if (l <= 0.0) throw validation_error("GHZClassParams: Schmidt coefficients must be positive");
        total += l * l;
    }
    if (std::abs(total - 1.0) > kNormTol)
        throw validation_error("GHZClassParams: Schmidt coefficients are not normalized");
}

GHZClassParams GHZClassParams::uniform(std::size_t n, std::size_t local_dim) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(local_dim));
    return GHZClassParams(n, local_dim, std::vector<double>(local_dim, amp));
}

PureState build_wclass(const WClassParams& params) {
    PartyDims dims(std::vector<std::size_t>(params.n(), params.d()));
    std::vector<cplx> amp(dims.side(), cplx{});
    for (std::size_t s = 0; s < params.n(); ++s) {
        const std::size_t stride = dims.stride(s);
        for (std::size_t i = 1; i < params.d(); ++i)
            amp[i * stride] = params.coefficients()[s][i - 1];
    }
    return PureState(std::move(dims), std::move(amp));
}

PureState build_ghz_class(const GHZClassParams& params) {
    if (params.schmidt().size() > params.local_dim())
        throw validation_error("build_ghz_class: more Schmidt terms than the local dimension");
    PartyDims dims(std::vector<std::size_t>(params.n(), params.local_dim()));
    // |i i ... i> has composite index i * (1 + d + d^2 + ...).
    std::size_t repunit = 0;
    for (std::size_t p = 0; p < params.n(); ++p) repunit += dims.stride(p);
    std::vector<cplx> amp(dims.side(), cplx{});
    for (std::size_t i = 0; i < params.schmidt().size(); ++i)
        amp[i * repunit] = params.schmidt()[i];
    return PureState(std::move(dims), std::move(amp));
}

ComplexMatrix density(const PureState& psi) {
    const std::size_t d = psi.dim();
    ComplexMatrix rho(d, d); // capacity-checked
    for (std::size_t r = 0; r < d; ++r) {
        const cplx ar = psi.amplitudes()[r];
        if (ar == cplx{}) continue;
        for (std::size_t c = 0; c < d; ++c) rho(r, c) = ar * std::conj(psi.amplitudes()[c]);
    }
    return rho;
}

ComplexMatrix reduced(const PureState& psi, const IndexSubset& keep) {
    if (keep.empty()) throw validation_error("reduced: kept subset must be nonempty");
    if (keep.members().back() >= psi.dims().count())
        throw validation_error("reduced: party index out of range");

    // Gram matrix of the kept-index slices; equals partial_trace(density(psi)).
    const auto kept = digit_offsets(psi.dims(), keep.members());
    const auto rest = digit_offsets(psi.dims(), keep.complement(psi.dims()));

    const std::size_t k = kept.size();
    ComplexMatrix out(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            cplx sum{};
            for (std::size_t t : rest)
                sum += psi.amplitudes()[kept[r] + t] * std::conj(psi.amplitudes()[kept[c] + t]);
            out(r, c) = sum;
        }
    return out;
}

std::vector<std::size_t> CopiedState::party_positions(std::size_t party) const {
    if (party >= parties_per_copy) throw validation_error("party index out of range");
    std::vector<std::size_t> pos(copies);
    for (std::size_t c = 0; c < copies; ++c) pos[c] = c * parties_per_copy + party;
    return pos;
}

IndexSubset CopiedState::group_positions(const IndexSubset& parties) const {
    std::vector<std::size_t> pos;
    pos.reserve(parties.size() * copies);
    for (std::size_t p : parties.members()) {
        const auto group = party_positions(p);
        pos.insert(pos.end(), group.begin(), group.end());
    }
    return IndexSubset(std::move(pos));
}

CopiedState tensor_copies(const PureState& psi, std::size_t m) {
    if (m == 0) throw validation_error("tensor_copies: copy count must be >= 1");
    const std::size_t d = psi.dim();
    std::size_t total = 1;
    for (std::size_t c = 0; c < m; ++c) {
        if (total > element_cap() / d)
            throw capacity_error("tensor_copies: amplitude vector exceeds the element cap");
        total *= d;
    }

    std::vector<cplx> amp{cplx{1.0, 0.0}};
    amp.reserve(total);
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<cplx> next(amp.size() * d);
        for (std::size_t i = 0; i < amp.size(); ++i) {
            if (amp[i] == cplx{}) continue;
            for (std::size_t j = 0; j < d; ++j) next[i * d + j] = amp[i] * psi.amplitudes()[j];
        }
        amp.swap(next);
    }

    std::vector<std::size_t> dims;
    dims.reserve(psi.dims().count() * m);
    for (std::size_t c = 0; c < m; ++c)
        dims.insert(dims.end(), psi.dims().dims().begin(), psi.dims().dims().end());

    return CopiedState{PureState(PartyDims(std::move(dims)), std::move(amp)), psi.dims().count(), m};
}

} // namespace monolab
