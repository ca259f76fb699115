#pragma once

#include "valinv/toric.hpp"
#include "valinv/volume_curve.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace valinv::cli {

enum ExitCode : int { ok = 0, internal = 1, invariant_violation = 2, input_error = 3, unsupported_model = 4 };

struct RunConfig {
    std::string command;
    std::string model = "p2";
    bool anticanonical = false;
    std::vector<double> p_grid;  // command-specific default when empty
    bool p_given = false;
    unsigned bound = 5;
    std::vector<unsigned> m_grid{1, 2, 4, 8, 16};
    double tol = 1e-9;
    std::string format = "csv";
    std::uint64_t seed = 0;
    std::string out;  // empty: the output stream
    std::string kind = "moments";
    RVector t_grid;
    bool t_given = false;
    std::vector<long> v;  // valuation for moment scans; e_1 when empty
    std::string curve;    // volume curve JSON to verify
};

/// Built-in name (p2, p1xp1, p2-anticanonical, hirzebruch-<a>, pn:<n>) or a
/// JSON file {"dim": n, "vertices": [[...], ...]}; -K replaces P when asked.
ToricModel load_model(const std::string& spec, bool anticanonical);
/// {"dim": n, "breakpoints": [...], "pieces": [[c0, c1, ...], ...]}, entries
/// integers or "a/b" strings; validated by the VolumeCurve constructor.
VolumeCurve load_curve(const std::string& path);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Parses argv with CLI11 and runs; returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace valinv::cli
