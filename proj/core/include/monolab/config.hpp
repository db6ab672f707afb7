#pragma once

#include <cstddef>

namespace monolab {

// Process-wide cap on the number of entries of any single matrix or
// amplitude vector. Bounds the brute-force copy computations to desk scale.
inline constexpr std::size_t kDefaultElementCap = std::size_t{1} << 26;

std::size_t element_cap() noexcept;

/// Override the element cap (the CLI wires MONOGAMY_LAB_ELEM_CAP to this).
void set_element_cap(std::size_t cap);

} // namespace monolab
