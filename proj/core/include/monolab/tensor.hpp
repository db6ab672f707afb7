#pragma once

#include "monolab/complex_matrix.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace monolab {

/// Ordered local dimensions of a multipartite system. Composite indices are
/// row-major with party 0 slowest-varying; this convention is fixed repo-wide.
class PartyDims {
public:
    explicit PartyDims(std::vector<std::size_t> dims);
    PartyDims(std::initializer_list<std::size_t> dims) : PartyDims(std::vector<std::size_t>(dims)) {}

    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t count() const noexcept { return dims_.size(); }
    std::size_t dim(std::size_t party) const { return dims_.at(party); }
    std::size_t side() const noexcept { return side_; }

    /// Stride of a party in the composite index (product of later dims).
    std::size_t stride(std::size_t party) const;

private:
    std::vector<std::size_t> dims_;
    std::size_t side_ = 1;
};

/// Set of party indices (0-based, sorted, unique) selecting one side of a
/// bipartition or the kept block of a partial trace.
class IndexSubset {
public:
    IndexSubset(std::initializer_list<std::size_t> members)
        : IndexSubset(std::vector<std::size_t>(members)) {}
    explicit IndexSubset(std::vector<std::size_t> members);

    const std::vector<std::size_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(std::size_t party) const;

    /// Parties of `dims` not in this subset, in order.
    std::vector<std::size_t> complement(const PartyDims& dims) const;

private:
    std::vector<std::size_t> members_;
};

/// Kronecker product a ⊗ b. Throws capacity_error past the element cap.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// m-fold Kronecker power, m >= 1.
ComplexMatrix kron_power(const ComplexMatrix& a, std::size_t m);

/// Trace out every party not in `keep`; result is ordered as in dims.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const PartyDims& dims, const IndexSubset& keep);

/// Transpose the tensor indices of the parties in `subset`.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const PartyDims& dims,
                                const IndexSubset& subset);

/// All eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi
/// rotations; off-diagonal Frobenius threshold 1e-12 * side, 100-sweep cap.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h,
                                          double herm_tol = ComplexMatrix::kHermTol);

/// Trace norm of a Hermitian matrix: sum of |eigenvalues|.
double trace_norm_hermitian(const ComplexMatrix& h);

/// Tr sqrt(rho) for a PSD matrix. Eigenvalues below -1e-8 are rejected;
/// round-off inside (-1e-8, 1e-14) is clamped to zero before the root.
double sqrt_trace(const ComplexMatrix& rho);

} // namespace monolab
