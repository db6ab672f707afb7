#include "monolab/complex_matrix.hpp"

#include "monolab/config.hpp"
#include "monolab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace monolab {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw shape_error("matrix dimensions must be positive");
    if (cols > element_cap() / rows)
        throw capacity_error("matrix with " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " entries exceeds the element cap " + std::to_string(element_cap()));
    data_.assign(rows * cols, cplx{});
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw shape_error("trace of a non-square matrix");
    cplx t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) throw shape_error("hermiticity defect of a non-square matrix");
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

} // namespace monolab
