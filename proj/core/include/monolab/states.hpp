#pragma once

#include "monolab/complex_matrix.hpp"
#include "monolab/tensor.hpp"

#include <cstddef>
#include <vector>

namespace monolab {

/// Unit-norm pure state over a multipartite system.
class PureState {
public:
    PureState(PartyDims dims, std::vector<cplx> amplitudes); // checks length and unit norm

    const PartyDims& dims() const noexcept { return dims_; }
    std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }

private:
    PartyDims dims_;
    std::vector<cplx> amplitudes_;
};

/// Coefficient table a_{si} of an n-party, d-level W-class state: party s
/// carries letter i (1..d-1), all other parties carry 0. Rows are parties
/// (0-based), columns are letters 1..d-1.
class WClassParams {
public:
    WClassParams(std::size_t n, std::size_t d, std::vector<std::vector<cplx>> coefficients);

    /// All coefficients equal; every party carries total weight 1/n.
    static WClassParams uniform(std::size_t n, std::size_t d);

    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return d_; }
    const std::vector<std::vector<cplx>>& coefficients() const noexcept { return a_; }

    /// Total weight sum_i |a_{si}|^2 carried by party s.
    double party_weight(std::size_t s) const;
    double omega1() const { return 1.0 - party_weight(0); }
    double omega2() const { return 1.0 - party_weight(0) - party_weight(1); }

private:
    std::size_t n_;
    std::size_t d_;
    std::vector<std::vector<cplx>> a_;
};

/// Schmidt data of a GHZ-class state: amplitude schmidt[i] on |i i ... i>.
class GHZClassParams {
public:
    GHZClassParams(std::size_t n, std::size_t local_dim, std::vector<double> schmidt);

    static GHZClassParams uniform(std::size_t n, std::size_t local_dim);

    std::size_t n() const noexcept { return n_; }
    std::size_t local_dim() const noexcept { return d_; }
    const std::vector<double>& schmidt() const noexcept { return schmidt_; }

private:
    std::size_t n_;
    std::size_t d_;
    std::vector<double> schmidt_;
};

PureState build_wclass(const WClassParams& params);
PureState build_ghz_class(const GHZClassParams& params);

/// Rank-1 projector |psi><psi|.
ComplexMatrix density(const PureState& psi);

/// Reduced density matrix on the kept parties (the rest traced out).
ComplexMatrix reduced(const PureState& psi, const IndexSubset& keep);

/// psi^{tensor m} with dims concatenated copy-major: party p of copy c sits
/// at output position c * parties_per_copy + p. Bipartition operations
/// consume the position map instead of permuting amplitudes.
struct CopiedState {
    PureState state;
    std::size_t parties_per_copy;
    std::size_t copies;

    std::vector<std::size_t> party_positions(std::size_t party) const;
    IndexSubset group_positions(const IndexSubset& parties) const;
};

CopiedState tensor_copies(const PureState& psi, std::size_t m);

} // namespace monolab
