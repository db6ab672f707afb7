#include "monolab/family.hpp"

#include "monolab/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

namespace monolab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t parse_count(std::string_view value, const char* key) {
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || out == 0)
        throw validation_error(std::string("family config: bad value for ") + key);
    return out;
}

double parse_real(std::string_view value) {
    // from_chars for double is flaky on older libstdc++; strtod on a copy.
    const std::string buf(value);
    char* end = nullptr;
    const double out = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || buf.empty())
        throw validation_error("family config: bad coefficient component '" + buf + "'");
    return out;
}

cplx parse_coefficient(std::string_view token) {
    const std::size_t comma = token.find(',');
    if (comma == std::string_view::npos)
        throw validation_error("family config: coefficient must be 're,im', got '" +
                               std::string(token) + "'");
    return {parse_real(trim(token.substr(0, comma))), parse_real(trim(token.substr(comma + 1)))};
}

} // namespace

std::string FamilySpec::describe() const {
    switch (family) {
        case FamilyKind::w3: return "w3";
        case FamilyKind::ghz:
            return "ghz n=" + std::to_string(n) + " d=" + std::to_string(d) +
                   (coefficients.empty() ? " uniform" : "");
        case FamilyKind::wclass:
        default:
            return "wclass n=" + std::to_string(n) + " d=" + std::to_string(d) +
                   (coefficients.empty() ? " uniform" : "");
    }
}

FamilySpec parse_family_config(std::string_view text) {
    FamilySpec spec;
    bool saw_family = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty() || line.front() == '#') continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw validation_error("family config: expected key=value, got '" + std::string(line) + "'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "family") {
            if (value == "w3") spec.family = FamilyKind::w3;
            else if (value == "wclass") spec.family = FamilyKind::wclass;
            else if (value == "ghz") spec.family = FamilyKind::ghz;
            else throw validation_error("family config: unknown family '" + std::string(value) + "'");
            saw_family = true;
        } else if (key == "n") {
            spec.n = parse_count(value, "n");
        } else if (key == "d") {
            spec.d = parse_count(value, "d");
        } else if (key == "coefficients") {
            spec.coefficients.clear();
            std::size_t tpos = 0;
            while (tpos < value.size()) {
                while (tpos < value.size() && std::isspace(static_cast<unsigned char>(value[tpos])))
                    ++tpos;
                if (tpos >= value.size()) break;
                std::size_t tend = tpos;
                while (tend < value.size() && !std::isspace(static_cast<unsigned char>(value[tend])))
                    ++tend;
                spec.coefficients.push_back(parse_coefficient(value.substr(tpos, tend - tpos)));
                tpos = tend;
            }
        } else {
            throw validation_error("family config: unknown key '" + std::string(key) + "'");
        }
    }
    if (!saw_family) throw validation_error("family config: missing 'family' key");
    if (spec.family == FamilyKind::w3) {
        spec.n = 3;
        spec.d = 2;
    }
    return spec;
}

WClassParams wclass_from_spec(const FamilySpec& spec) {
    if (spec.family == FamilyKind::ghz)
        throw validation_error("family config: expected a W-class family, got ghz");
    if (spec.family == FamilyKind::w3) return WClassParams::uniform(3, 2);
    if (spec.coefficients.empty()) return WClassParams::uniform(spec.n, spec.d);

    const std::size_t expected = spec.n * (spec.d - 1);
    if (spec.coefficients.size() != expected)
        throw validation_error("family config: wclass with n=" + std::to_string(spec.n) +
                               " d=" + std::to_string(spec.d) + " needs " + std::to_string(expected) +
                               " coefficients, got " + std::to_string(spec.coefficients.size()));
    std::vector<std::vector<cplx>> table(spec.n, std::vector<cplx>(spec.d - 1));
    for (std::size_t s = 0; s < spec.n; ++s)
        for (std::size_t i = 0; i + 1 < spec.d; ++i)
            table[s][i] = spec.coefficients[s * (spec.d - 1) + i];
    return WClassParams(spec.n, spec.d, std::move(table));
}

GHZClassParams ghz_from_spec(const FamilySpec& spec) {
    if (spec.family != FamilyKind::ghz)
        throw validation_error("family config: expected a ghz family");
    if (spec.coefficients.empty()) return GHZClassParams::uniform(spec.n, spec.d);

    std::vector<double> schmidt;
    schmidt.reserve(spec.coefficients.size());
    for (const cplx& c : spec.coefficients) {
        if (std::abs(c.imag()) > 1e-12)
            throw validation_error("family config: ghz Schmidt coefficients must be real");
        schmidt.push_back(c.real());
    }
    return GHZClassParams(spec.n, spec.d, std::move(schmidt));
}

} // namespace monolab
