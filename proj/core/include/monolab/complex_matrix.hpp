#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace monolab {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. The universal carrier for states and
/// operators; Hermitian-only operations check symmetry against kHermTol.
class ComplexMatrix {
public:
    static constexpr double kHermTol = 1e-10;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols); // zero-filled, cap-checked

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const cplx> entries() const noexcept { return data_; }
    std::span<cplx> entries() noexcept { return data_; }

    cplx trace() const;
    ComplexMatrix adjoint() const;

    /// max |a_ij - conj(a_ji)| over all entries (0 for exactly Hermitian input).
    double hermiticity_defect() const;
    bool is_hermitian(double tol = kHermTol) const { return is_square() && hermiticity_defect() <= tol; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

} // namespace monolab
