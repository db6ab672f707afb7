#pragma once

#include "monolab/states.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace monolab {

enum class FamilyKind { w3, wclass, ghz };

/// State-family description as read from a key=value config file. Keys:
/// family (w3 | wclass | ghz), n, d, coefficients (flat list of "re,im"
/// pairs, whitespace-separated). Empty coefficients mean the uniform family.
struct FamilySpec {
    FamilyKind family = FamilyKind::wclass;
    std::size_t n = 3;
    std::size_t d = 2;
    std::vector<cplx> coefficients;

    std::string describe() const;
};

FamilySpec parse_family_config(std::string_view text);

/// Coefficient table for a w3/wclass spec (row-major over parties, d-1
/// letters per party). Rejects ghz specs.
WClassParams wclass_from_spec(const FamilySpec& spec);

/// Schmidt data for a ghz spec; coefficients must be real and positive.
GHZClassParams ghz_from_spec(const FamilySpec& spec);

} // namespace monolab
