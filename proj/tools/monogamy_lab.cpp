// monogamy_lab: copy sweeps, residual surfaces, superactivation thresholds,
// critical powers and oracle cross-checks for negativity-based correlation
// profiles, written as CSV or plain-text reports.

#include "monolab/config.hpp"
#include "monolab/errors.hpp"
#include "monolab/family.hpp"
#include "monolab/measures.hpp"
#include "monolab/reports.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitIo = 2;

monolab::FamilySpec load_family(const std::string& coeffs_path, bool n_set, std::size_t n,
                                bool d_set, std::size_t d) {
    monolab::FamilySpec spec; // defaults to the uniform wclass family
    if (!coeffs_path.empty()) {
        std::ifstream in(coeffs_path);
        if (!in) throw std::ios_base::failure("cannot open coefficients file: " + coeffs_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) throw std::ios_base::failure("cannot read coefficients file: " + coeffs_path);
        spec = monolab::parse_family_config(buf.str());
    }
    // Flags override the file for the family size.
    if (n_set) spec.n = n;
    if (d_set) spec.d = d;
    return spec;
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!std::cout) throw std::ios_base::failure("writing to stdout failed");
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + out_path);
    out << payload;
    out.flush();
    if (!out) throw std::ios_base::failure("writing output file failed: " + out_path);
}

void apply_element_cap_env() {
    if (const char* env = std::getenv("MONOGAMY_LAB_ELEM_CAP")) {
        char* end = nullptr;
        const unsigned long long cap = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw monolab::validation_error("MONOGAMY_LAB_ELEM_CAP is not a positive integer");
        monolab::set_element_cap(static_cast<std::size_t>(cap));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum correlation monogamy laboratory"};

    std::string command;
    std::size_t n = 3, d = 2;
    int m_max = -1; // per-command default
    double s = 2.0, alpha = 2.0;
    std::string convention = "doubled";
    std::string coeffs_path, out_path;

    app.add_option("--command", command, "one of: fig1 fig2 fig3 threshold power tighter oracle")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "threshold", "power", "tighter", "oracle"}));
    auto* n_opt = app.add_option("--n", n, "party count (fig3: largest n of the grid)");
    auto* d_opt = app.add_option("--d", d, "local dimension");
    app.add_option("--m-max", m_max,
                   "copy sweep bound (defaults: fig1/fig2 8, fig3 20, threshold 64, oracle 3)");
    app.add_option("--s", s, "exponent s >= 1 of the tighter bound");
    app.add_option("--alpha", alpha, "monogamy power fed into the tighter bound");
    app.add_option("--convention", convention, "negativity normalization")
        ->check(CLI::IsMember({"standard", "doubled"}));
    app.add_option("--coeffs", coeffs_path, "family config file (key=value; see README)");
    app.add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        apply_element_cap_env();
        const monolab::Convention conv = convention == "standard" ? monolab::Convention::standard
                                                                  : monolab::Convention::doubled;

        std::string payload;
        if (command == "fig1") {
            const auto rows = monolab::copy_sweep_rows(monolab::WClassParams::uniform(3, 2),
                                                       m_max > 0 ? m_max : 8, conv);
            payload = monolab::copy_sweep_csv(rows);
        } else if (command == "fig2") {
            const auto rows = monolab::copy_sweep_rows(monolab::WClassParams::uniform(5, 2),
                                                       m_max > 0 ? m_max : 8, conv);
            payload = monolab::copy_sweep_csv(rows);
        } else if (command == "fig3") {
            const int n_max = n_opt->count() > 0 ? static_cast<int>(n) : 12;
            const auto rows = monolab::f_surface_rows(n_max, m_max > 0 ? m_max : 20);
            payload = monolab::f_surface_csv(rows);
        } else {
            const monolab::FamilySpec spec =
                load_family(coeffs_path, n_opt->count() > 0, n, d_opt->count() > 0, d);
            if (command == "threshold") {
                payload = monolab::threshold_report(spec, m_max > 0 ? m_max : 64, conv).render();
            } else if (command == "power") {
                payload = monolab::power_report(spec, conv).render();
            } else if (command == "tighter") {
                payload = monolab::tighter_report(spec, alpha, s, conv).render();
            } else { // oracle
                const monolab::OracleReport rep =
                    monolab::oracle_report(spec, m_max > 0 ? m_max : 3, conv);
                payload = rep.render();
                write_output(out_path, payload);
                return rep.all_pass ? kExitOk : kExitInput;
            }
        }
        write_output(out_path, payload);
        return kExitOk;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const monolab::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
