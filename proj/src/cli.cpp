#include "valinv/cli.hpp"

#include "valinv/error.hpp"
#include "valinv/invariants.hpp"
#include "valinv/sampling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace valinv::cli {
namespace {

using nlohmann::json;

std::string num(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

std::string vec(const RVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + to_string(v[i]);
    return s;
}

json vec_json(const RVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

bool integral(double p) { return p >= 1 && p == std::floor(p) && p < 1e6; }

// numbers or "a/b" strings
Rational rational_of(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number()) return parse_rational(num(j.get<double>()));
    fail(ErrorKind::input, "expected a number or rational string");
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::input, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorKind::input, path + ": " + e.what());
    }
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

ToricValuation valuation_of(const ToricModel& tm, const std::vector<long>& v) {
    RVector r(tm.dim(), Rational(0));
    if (v.empty()) {
        r[0] = 1;
    } else {
        if (v.size() != tm.dim()) fail(ErrorKind::input, "--v needs " + std::to_string(tm.dim()) + " entries");
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    }
    return make_valuation(tm, r);
}

void require_q_gorenstein(const ToricModel& tm) {
    if (!tm.q_gorenstein()) fail(ErrorKind::unsupported, "model is not Q-Gorenstein; log discrepancies are undefined");
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& t, std::ostream& out) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << '\n';
    }
}

json table_json(const Table& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        json o = json::object();
        for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = r[i];
        rows.push_back(o);
    }
    return rows;
}

std::string delta_text(const DeltaSearch& d) {
    return d.value_pow && d.p == 1.0 ? to_string(*d.value_pow) : num(d.value);
}

int invariants(const RunConfig& cfg, std::ostream& out) {
    const ToricModel tm = load_model(cfg.model, cfg.anticanonical);
    require_q_gorenstein(tm);
    const std::vector<double> grid = cfg.p_given ? cfg.p_grid : std::vector<double>{1.0};
    const auto candidates = candidate_table(tm, cfg.bound);
    const InvariantReport rep = delta_family(tm, grid, cfg.bound);
    const bool fano = tm.anticanonical_ratio().has_value();

    Table t{{"p", "delta_upper", "argmin", "alpha_upper", "threshold", "verdict"}, {}};
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const DeltaSearch& d = rep.deltas[i];
        std::string threshold, verdict;
        json jr{{"p", grid[i]},
                {"delta_upper", d.value},
                {"argmin", vec_json(d.argmin)},
                {"alpha_upper", to_string(rep.alpha_upper)}};
        if (d.value_pow) jr["delta_pow"] = to_string(*d.value_pow);
        if (fano) {
            const auto kv = kstability_verdict(tm, candidates, grid[i], cfg.tol);
            threshold = num(kv.threshold);
            verdict = to_string(kv.verdict);
            jr["threshold"] = kv.threshold;
            jr["verdict"] = verdict;
            jr["delta_upper_anticanonical"] = kv.delta_upper;
            jr["h"] = kv.h;
        }
        json table = json::array();
        for (const auto& row : d.table) {
            json e{{"v", vec_json(row.v)}, {"A", to_string(row.log_discrepancy)}, {"ratio", row.ratio}};
            if (row.s_p_exact)
                e["S_p"] = to_string(*row.s_p_exact);
            else
                e["S_p"] = row.s_p;
            table.push_back(e);
        }
        jr["table"] = table;
        rows.push_back(jr);
        t.rows.push_back({num(grid[i]), delta_text(d), vec(d.argmin), to_string(rep.alpha_upper), threshold, verdict});
    }
    if (cfg.format == "json") {
        json doc{{"command", "invariants"},
                 {"model", cfg.model},
                 {"dim", tm.dim()},
                 {"bound", cfg.bound},
                 {"upper_bounds", true},
                 {"rows", rows},
                 {"violations", rep.violations}};
        if (rep.alpha_sandwich) doc["alpha_sandwich"] = *rep.alpha_sandwich;
        out << doc.dump(2) << '\n';
    } else {
        write_csv(t, out);
    }
    return rep.ok() ? ok : invariant_violation;
}

struct Check {
    std::string property;
    bool pass = true;
    std::string witness;
};

void record(std::vector<Check>& checks, const std::string& property, const std::string& witness) {
    for (auto& c : checks)
        if (c.property == property) {
            if (c.pass) {
                c.pass = false;
                c.witness = witness;
            }
            return;
        }
    checks.push_back({property, false, witness});
}

void curve_checks(const VolumeCurve& c, const std::string& tag, std::vector<Check>& checks) {
    const unsigned n = c.dim();
    for (unsigned p = 1; p <= 6; ++p) {
        const auto b = barycenter_bounds_exact(c, p);
        const Rational s = s_p(c, p);
        if (!(b.lower <= s && s <= b.upper)) record(checks, "barycenter-bounds", tag + " p=" + std::to_string(p));
    }
    double prev = 0.0;
    for (int i = 0; i <= 18; ++i) {
        const double p = 1.0 + 0.5 * i;
        const double h = h_stat(c, p);
        if (i > 0 && h < prev * (1 - 1e-10)) record(checks, "h-monotone", tag + " p=" + num(p));
        prev = h;
    }
    for (unsigned p = 1; p < 12; ++p) {
        const Rational lhs = Rational(Integer(n + p), Integer(n)) * s_p(c, p);
        const Rational rhs = Rational(Integer(n + p + 1), Integer(n)) * s_p(c, p + 1);
        // exact for integer p: H(p)^{p(p+1)} <= H(p+1)^{p(p+1)}
        if (pow(lhs, p + 1) > pow(rhs, p)) record(checks, "h-monotone", tag + " p=" + std::to_string(p));
    }
    if (!c.degenerate()) {
        const double lo = n, hi = n + 10.0;
        for (int i = 1; i < 40; ++i) {
            const double s = lo + (hi - lo) * i / 40.0, step = (hi - lo) / 40.0;
            const double a = std::log(k_stat(c, s - step)), m = std::log(k_stat(c, s)),
                         z = std::log(k_stat(c, s + step));
            if (2 * m > a + z + 1e-9 * std::max(1.0, std::abs(m))) record(checks, "k-log-convex", tag + " s=" + num(s));
        }
    }
}

int verify(const RunConfig& cfg, std::ostream& out) {
    std::vector<Check> checks;
    for (const char* name : {"volume-curve", "barycenter-bounds", "h-monotone", "k-log-convex", "rounding-sandwich",
                             "compatible-basis", "legendre-involution", "growth-bound", "moment-identity"})
        checks.push_back({name, true, ""});

    std::vector<std::pair<std::string, VolumeCurve>> curves;
    std::optional<ToricModel> tm;
    if (!cfg.curve.empty()) {
        try {
            curves.emplace_back("curve", load_curve(cfg.curve));
        } catch (const InvariantViolation& e) {
            record(checks, "volume-curve", e.property() + " at " + e.witness());
        }
    } else {
        tm = load_model(cfg.model, cfg.anticanonical);
        for (auto& c : candidate_table(*tm, std::min(cfg.bound, 2u)))
            curves.emplace_back("v=(" + vec(c.valuation.v) + ")", c.curve);
    }
    for (const auto& [tag, c] : curves) curve_checks(c, tag, checks);

    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < 20; ++i) {
        const auto f = random_flag_filtration(static_cast<std::size_t>(uniform_int(rng, 1, 5)),
                                              static_cast<unsigned>(uniform_int(rng, 1, 4)), rng);
        for (double p : {1.0, 1.5, 3.0})
            if (!rounding_sandwich(f, p).certified)
                record(checks, "rounding-sandwich", "flag#" + std::to_string(i) + " p=" + num(p));
    }
    for (int i = 0; i < 5; ++i) {
        const auto f = random_flag_filtration(static_cast<std::size_t>(uniform_int(rng, 1, 4)), 2, rng);
        const unsigned p = static_cast<unsigned>(uniform_int(rng, 1, 3));
        const Rational best = s_m_p(f, p);
        const bool attains = basis_value(f, compatible_basis(*f.flag()), p) == best;
        if (!attains || sup_over_bases_oracle(f, p, 200, rng()) > best)
            record(checks, "compatible-basis", "flag#" + std::to_string(i) + " p=" + std::to_string(p));
    }
    for (int i = 0; i < 20; ++i) {
        const TestCurve1D tc = random_test_curve(rng);
        const GeodesicRay1D gr = legendre(tc);
        if (!(inverse_legendre(gr, tc.lambda_max()) == tc)) record(checks, "legendre-involution", "curve#" + std::to_string(i));
        if (!growth_bound_holds(gr, tc.lambda_max())) record(checks, "growth-bound", "curve#" + std::to_string(i));
    }

    if (tm && tm->q_gorenstein() && tm->polytope().is_lattice()) {
        unsigned m_max = 1;
        for (unsigned m : cfg.m_grid) m_max = std::max(m_max, m);
        const auto tv = make_valuation(*tm, RVector{[&] {
            RVector e(tm->dim(), Rational(0));
            e[0] = 1;
            return e;
        }()});
        for (double p : {1.0, 2.0}) {
            const auto rep = verify_moment_identity(*tm, tv, p, m_max);
            if (!rep.converging) record(checks, "moment-identity", "p=" + num(p) + " m=" + std::to_string(m_max));
        }
    }

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;
    if (cfg.format == "json") {
        json results = json::array();
        for (const auto& c : checks)
            results.push_back({{"property", c.property}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
        out << json{{"command", "verify"}, {"seed", cfg.seed}, {"passed", all}, {"results", results}}.dump(2) << '\n';
    } else {
        Table t{{"property", "status", "witness"}, {}};
        for (const auto& c : checks) t.rows.push_back({c.property, c.pass ? "pass" : "fail", c.witness});
        write_csv(t, out);
    }
    return all ? ok : invariant_violation;
}

int scan(const RunConfig& cfg, std::ostream& out) {
    const ToricModel tm = load_model(cfg.model, cfg.anticanonical);
    require_q_gorenstein(tm);
    Table t;
    if (cfg.kind == "moments") {
        const std::vector<double> grid =
            cfg.p_given ? cfg.p_grid : std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        const VolumeCurve c = volume_curve_of(tm, valuation_of(tm, cfg.v));
        t.columns = {"p", "s_p", "h_stat", "beta_normalized"};
        for (double p : grid) {
            if (p < 1) fail(ErrorKind::domain, "p must be >= 1");
            t.rows.push_back({num(p), integral(p) ? to_string(s_p(c, static_cast<unsigned>(p))) : num(s_p_real(c, p)),
                              num(h_stat(c, p)), num(beta_normalized_stat(c, p))});
        }
    } else if (cfg.kind == "delta") {
        const std::vector<double> grid = cfg.p_given ? cfg.p_grid : std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8};
        const auto candidates = candidate_table(tm, cfg.bound);
        t.columns = {"p", "delta_upper", "argmin"};
        for (double p : grid) {
            const auto d = delta_p_search(candidates, p);
            t.rows.push_back({num(p), delta_text(d), vec(d.argmin)});
        }
    } else if (cfg.kind == "continuity") {
        const double p = cfg.p_given && !cfg.p_grid.empty() ? cfg.p_grid.front() : 1.0;
        RVector grid = cfg.t_grid;
        if (!cfg.t_given)
            for (int i = 0; i <= 4; ++i) grid.push_back(make_rational(i, 8));
        t.columns = {"t", "delta_upper", "argmin"};
        const auto rows = continuity_scan(tm, p, cfg.bound, grid);
        for (std::size_t i = 0; i < rows.size(); ++i)
            t.rows.push_back({to_string(grid[i]), delta_text(rows[i]), vec(rows[i].argmin)});
    } else {
        fail(ErrorKind::input, "unknown scan kind '" + cfg.kind + "' (moments, delta, continuity)");
    }
    if (cfg.format == "json")
        out << json{{"command", "scan"}, {"kind", cfg.kind}, {"model", cfg.model}, {"columns", t.columns},
                    {"rows", table_json(t)}}
                   .dump(2)
            << '\n';
    else
        write_csv(t, out);
    return ok;
}

int exit_code_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::invariant: return invariant_violation;
        case ErrorKind::input:
        case ErrorKind::domain:
        case ErrorKind::semantic:
        case ErrorKind::structure: return input_error;
        case ErrorKind::unsupported: return unsupported_model;
        default: return internal;
    }
}

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::domain: return "domain";
        case ErrorKind::range: return "range";
        case ErrorKind::accuracy: return "accuracy";
        case ErrorKind::invariant: return "invariant";
        case ErrorKind::structure: return "structure";
        case ErrorKind::input: return "input";
        case ErrorKind::unsupported: return "unsupported";
        case ErrorKind::semantic: return "semantic";
    }
    return "internal";
}

void report(const RunConfig& cfg, std::ostream& err, const std::string& kind, const std::string& message,
            const std::string& witness = "") {
    if (cfg.format == "json") {
        json e{{"kind", kind}, {"message", message}};
        if (!witness.empty()) e["witness"] = witness;
        err << json{{"error", e}}.dump() << '\n';
    } else {
        err << "valinv: " << kind << " error: " << message << '\n';
    }
}

}  // namespace

ToricModel load_model(const std::string& spec, bool anticanonical) {
    ToricModel tm = [&] {
        if (spec.size() > 5 && spec.ends_with(".json")) {
            const json j = read_json(spec);
            if (!j.contains("dim") || !j.contains("vertices")) fail(ErrorKind::input, spec + ": needs dim and vertices");
            const auto dim = j.at("dim").get<unsigned>();
            std::vector<RVector> pts;
            for (const auto& v : j.at("vertices")) {
                RVector p;
                for (const auto& x : v) p.push_back(rational_of(x));
                if (p.size() != dim) fail(ErrorKind::input, spec + ": vertex of wrong dimension");
                pts.push_back(std::move(p));
            }
            return ToricModel::from_polytope(RationalPolytope::from_vertices(dim, std::move(pts)));
        }
        return ToricModel::builtin(spec);
    }();
    return anticanonical ? tm.anticanonical() : tm;
}

VolumeCurve load_curve(const std::string& path) {
    const json j = read_json(path);
    try {
        RVector breaks;
        for (const auto& b : j.at("breakpoints")) breaks.push_back(rational_of(b));
        std::vector<Polynomial> pieces;
        for (const auto& piece : j.at("pieces")) {
            RVector coeffs;
            for (const auto& c : piece) coeffs.push_back(rational_of(c));
            pieces.emplace_back(std::move(coeffs));
        }
        return VolumeCurve(j.at("dim").get<unsigned>(), PiecewisePolynomial(std::move(breaks), std::move(pieces)));
    } catch (const json::exception& e) {
        fail(ErrorKind::input, path + ": " + e.what());
    }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.format != "csv" && cfg.format != "json") fail(ErrorKind::input, "--format must be csv or json");
        if (cfg.bound == 0) fail(ErrorKind::input, "--bound must be positive");
        for (double p : cfg.p_grid)
            if (!(p >= 1) || !std::isfinite(p)) fail(ErrorKind::input, "p-grid entries must be finite and >= 1");
        for (unsigned m : cfg.m_grid)
            if (m == 0) fail(ErrorKind::input, "m-grid entries must be positive");

        std::ofstream file;
        if (!cfg.out.empty()) {
            file.open(cfg.out);
            if (!file) fail(ErrorKind::input, "cannot write " + cfg.out);
        }
        std::ostream& sink = cfg.out.empty() ? out : file;
        if (cfg.command == "invariants") return invariants(cfg, sink);
        if (cfg.command == "verify") return verify(cfg, sink);
        if (cfg.command == "scan") return scan(cfg, sink);
        fail(ErrorKind::input, "unknown command '" + cfg.command + "'");
    } catch (const InvariantViolation& e) {
        report(cfg, err, "invariant", e.what(), e.witness());
        return invariant_violation;
    } catch (const Error& e) {
        report(cfg, err, kind_name(e.kind()), e.what());
        return exit_code_of(e.kind());
    } catch (const std::exception& e) {
        report(cfg, err, "internal", e.what());
        return internal;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Valuative invariants of polarized toric varieties"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string p_text, m_text, t_text, v_text;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--model", cfg.model, "built-in name (p2, p2-anticanonical, p1xp1, pn:N, hirzebruch-A) or JSON file");
        sub->add_flag("--anticanonical", cfg.anticanonical, "replace the polarization by -K");
        sub->add_option("--p", p_text, "comma-separated p grid");
        sub->add_option("--bound", cfg.bound, "sup-norm bound B of the valuation search");
        sub->add_option("--m", m_text, "comma-separated quantization levels");
        sub->add_option("--tol", cfg.tol, "relative tolerance of verdicts");
        sub->add_option("--format", cfg.format, "csv or json");
        sub->add_option("--seed", cfg.seed, "seed of the random suites");
        sub->add_option("--out", cfg.out, "write the result to a file");
    };
    auto* inv = app.add_subcommand("invariants", "delta^(p) upper bounds, alpha and verdicts");
    common(inv);
    auto* ver = app.add_subcommand("verify", "run the property suite");
    common(ver);
    ver->add_option("--curve", cfg.curve, "check a volume curve JSON file instead of the model");
    auto* sc = app.add_subcommand("scan", "tabulate statistics over a grid");
    common(sc);
    sc->add_option("--kind", cfg.kind, "moments, delta or continuity");
    sc->add_option("--t", t_text, "comma-separated rational shifts of the first facet");
    sc->add_option("--v", v_text, "comma-separated integral valuation vector");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        report(cfg, err, "input", e.what());
        return input_error;
    }
    for (auto* sub : {inv, ver, sc})
        if (sub->parsed()) cfg.command = sub->get_name();

    try {
        if (sc->count("--p") || inv->count("--p") || ver->count("--p")) {
            cfg.p_given = true;
            for (const auto& s : split(p_text)) cfg.p_grid.push_back(to_double(parse_rational(s)));
        }
        if (!m_text.empty()) {
            cfg.m_grid.clear();
            for (const auto& s : split(m_text)) cfg.m_grid.push_back(static_cast<unsigned>(std::stoul(s)));
        }
        if (sc->count("--t")) {
            cfg.t_given = true;
            for (const auto& s : split(t_text)) cfg.t_grid.push_back(parse_rational(s));
        }
        for (const auto& s : split(v_text)) cfg.v.push_back(std::stol(s));
    } catch (const Error& e) {
        report(cfg, err, "input", e.what());
        return input_error;
    } catch (const std::logic_error& e) {
        report(cfg, err, "input", std::string("malformed list: ") + e.what());
        return input_error;
    }
    return run(cfg, out, err);
}

}  // namespace valinv::cli
