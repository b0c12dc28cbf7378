#include "zeroloc/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "zeroloc/report.hpp"

namespace zeroloc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitCase = 3;
constexpr int kExitSolver = 4;

Complex parse_complex(const std::string& text) {
    std::size_t comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            std::size_t used = 0;
            const double re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {re, 0.0};
        }
        std::size_t used = 0;
        const std::string re_part = text.substr(0, comma);
        const std::string im_part = text.substr(comma + 1);
        const double re = std::stod(re_part, &used);
        if (used != re_part.size()) throw std::invalid_argument(text);
        const double im = std::stod(im_part, &used);
        if (used != im_part.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::exception&) {
        throw std::invalid_argument("not a complex number (use re or re,im): " + text);
    }
}

// CLI coefficients arrive in descending powers; storage is ascending.
AnalyticPoly parse_poly_descending(const std::vector<std::string>& tokens) {
    std::vector<Complex> asc(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i)
        asc[tokens.size() - 1 - i] = parse_complex(tokens[i]);
    return AnalyticPoly{std::move(asc)};
}

struct InstanceOptions {
    std::vector<std::string> trinomial;  // n k c
    std::vector<std::string> analytic;   // descending coefficients
    std::vector<std::string> h_coeffs;   // descending
    std::vector<std::string> g_coeffs;   // descending
};

void add_instance_options(CLI::App* cmd, InstanceOptions& opts) {
    cmd->add_option("--trinomial", opts.trinomial,
                    "Trinomial instance: n k c (c as re or re,im)")
        ->expected(3);
    cmd->add_option("--analytic", opts.analytic,
                    "Analytic polynomial, coefficients in descending powers");
    cmd->add_option("--h", opts.h_coeffs, "Analytic part of f = h + conj(g), descending powers");
    cmd->add_option("--g", opts.g_coeffs, "Conjugated part of f = h + conj(g), descending powers");
}

Instance build_instance(const InstanceOptions& opts, bool allow_analytic) {
    const bool has_tri = !opts.trinomial.empty();
    const bool has_ana = !opts.analytic.empty();
    const bool has_harm = !opts.h_coeffs.empty();
    const int forms = int(has_tri) + int(has_ana) + int(has_harm);
    if (forms != 1)
        throw std::invalid_argument(
            "exactly one of --trinomial, --analytic, --h/--g must be given");
    if (!opts.g_coeffs.empty() && !has_harm)
        throw std::invalid_argument("--g requires --h");

    if (has_tri) {
        std::size_t used = 0;
        const int n = std::stoi(opts.trinomial[0], &used);
        if (used != opts.trinomial[0].size())
            throw std::invalid_argument("bad n: " + opts.trinomial[0]);
        const int k = std::stoi(opts.trinomial[1], &used);
        if (used != opts.trinomial[1].size())
            throw std::invalid_argument("bad k: " + opts.trinomial[1]);
        return {HarmonicTrinomial{n, k, parse_complex(opts.trinomial[2])}};
    }
    if (has_harm) {
        AnalyticPoly h = parse_poly_descending(opts.h_coeffs);
        AnalyticPoly g = opts.g_coeffs.empty() ? AnalyticPoly::zero()
                                               : parse_poly_descending(opts.g_coeffs);
        return {HarmonicPoly{std::move(h), std::move(g)}};
    }
    if (!allow_analytic)
        throw std::invalid_argument("this command needs --trinomial or --h/--g");
    return {parse_poly_descending(opts.analytic)};
}

struct ConfigOptions {
    SolverConfig cfg;
    double contain_tol = 1e-6;
};

void add_config_options(CLI::App* cmd, ConfigOptions& c) {
    cmd->add_option("--grid-density", c.cfg.grid_density, "Seed points per unit length");
    cmd->add_option("--newton-tol", c.cfg.newton_tol, "Residual tolerance (times scale)");
    cmd->add_option("--max-newton-iters", c.cfg.max_newton_iters, "Newton iteration cap");
    cmd->add_option("--dedup-radius", c.cfg.dedup_radius, "Relative root merge distance");
    cmd->add_option("--search-radius-factor", c.cfg.search_radius_factor,
                    "Inflation of the inclusion disk for seeding");
    cmd->add_option("--singular-threshold", c.cfg.singular_threshold,
                    "|jacobian det| below which a zero is singular");
    cmd->add_option("--contain-tol", c.contain_tol, "Containment boundary tolerance");
}

std::string region_text(const Region& r) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return std::string("|z| ") + (v.closed ? "<= " : "< ") + format_double(v.radius);
            } else if constexpr (std::is_same_v<T, Annulus>) {
                return format_double(v.inner) + (v.inner_closed ? " <= " : " < ") +
                       std::string("|z|") + (v.outer_closed ? " <= " : " < ") +
                       format_double(v.outer);
            } else {
                std::string s = "union(";
                for (std::size_t i = 0; i < v.members.size(); ++i) {
                    if (i > 0) s += "; ";
                    s += region_text(v.members[i]);
                }
                return s + ")";
            }
        },
        r.value());
}

void print_bound_reports(std::ostream& out, const std::vector<BoundReport>& reports) {
    for (const BoundReport& b : reports) {
        out << "  " << method_name(b.method) << ": " << region_text(b.region);
        if (!b.intermediate.empty()) {
            out << "  [";
            bool first = true;
            for (const auto& [k, v] : b.intermediate) {
                if (!first) out << ", ";
                out << k << "=" << format_double(v);
                first = false;
            }
            out << "]";
        }
        for (const std::string& f : b.flags) out << "  (" << f << ")";
        out << '\n';
    }
}

void print_zeros(std::ostream& out, const std::vector<RootRecord>& zeros) {
    out << "zeros (" << zeros.size() << "):\n";
    for (const RootRecord& z : zeros) {
        out << "  re=" << format_double(z.z.real()) << "  im=" << format_double(z.z.imag())
            << "  residual=" << format_double(z.residual) << "  "
            << orientation_name(z.orientation) << '\n';
    }
}

int cmd_bounds(const Instance& inst, bool json, std::ostream& out) {
    std::vector<BoundReport> reports;
    std::optional<RealInterval> interval;

    if (inst.is_trinomial()) {
        reports = all_trinomial_bounds(std::get<HarmonicTrinomial>(inst.value));
    } else if (inst.is_analytic()) {
        const auto& p = std::get<AnalyticPoly>(inst.value);
        reports = all_analytic_bounds(p);
        const bool all_real = std::all_of(p.coeffs().begin(), p.coeffs().end(),
                                          [](Complex c) { return c.imag() == 0.0; });
        if (all_real && p.degree() >= 1) {
            std::vector<double> rc(p.coeffs().size());
            for (std::size_t i = 0; i < rc.size(); ++i) rc[i] = p.coeffs()[i].real();
            interval = cauchy_interval(RealPoly{std::move(rc)});
        }
    } else {
        reports = {harmonic_disk(std::get<HarmonicPoly>(inst.value))};
    }

    if (json) {
        nlohmann::json j;
        j["instance"] = inst.to_json();
        nlohmann::json arr = nlohmann::json::array();
        for (const BoundReport& b : reports) arr.push_back(to_json(b));
        j["regions"] = arr;
        if (interval)
            j["cauchy_interval"] = {{"lo", interval->lo}, {"hi", interval->hi}};
        out << j.dump(2) << '\n';
    } else {
        out << "instance: " << inst.describe() << '\n';
        if (interval)
            out << "  cauchy: real zeros in [" << format_double(interval->lo) << ", "
                << format_double(interval->hi) << "]\n";
        print_bound_reports(out, reports);
    }
    return kExitOk;
}

HarmonicPoly instance_harmonic(const Instance& inst) {
    if (inst.is_trinomial()) return std::get<HarmonicTrinomial>(inst.value).to_harmonic();
    return std::get<HarmonicPoly>(inst.value);
}

int cmd_solve(const Instance& inst, const ConfigOptions& c, bool json, std::ostream& out) {
    const HarmonicPoly hp = instance_harmonic(inst);
    const std::vector<RootRecord> zeros = find_all_zeros(hp, c.cfg);
    if (json) {
        nlohmann::json j;
        j["instance"] = inst.to_json();
        nlohmann::json arr = nlohmann::json::array();
        for (const RootRecord& z : zeros) arr.push_back(to_json(z));
        j["zeros"] = arr;
        out << j.dump(2) << '\n';
    } else {
        out << "instance: " << inst.describe() << '\n';
        print_zeros(out, zeros);
    }
    return kExitOk;
}

int cmd_wind(const Instance& inst, double radius, const ConfigOptions& c, bool json,
             std::ostream& out) {
    const HarmonicPoly hp = instance_harmonic(inst);
    const WindingResult w = winding_number(hp, radius, c.cfg);
    if (json) {
        nlohmann::json j;
        j["instance"] = inst.to_json();
        j["radius"] = radius;
        j["result"] = to_json(w);
        out << j.dump(2) << '\n';
    } else {
        out << "instance: " << inst.describe() << '\n'
            << "winding at |z|=" << format_double(radius) << ": " << w.winding
            << "  (min |f| on contour " << format_double(w.min_modulus_on_contour)
            << ", samples " << w.samples_used << ")\n";
    }
    return kExitOk;
}

int cmd_verify(const Instance& inst, const ConfigOptions& c, bool json, std::ostream& out) {
    const VerificationReport rep = run_verification(inst, c.cfg, c.contain_tol);
    if (json) {
        out << to_json(rep).dump(2) << '\n';
    } else {
        out << "instance: " << rep.instance.describe() << '\n';
        print_bound_reports(out, rep.regions);
        print_zeros(out, rep.zeros);
        std::size_t inside = 0;
        for (const auto& row : rep.containment)
            if (std::all_of(row.begin(), row.end(), [](bool b) { return b; })) ++inside;
        out << "containment: " << inside << "/" << rep.zeros.size()
            << " zeros inside every region\n";
        if (rep.consistency) {
            const auto& cons = *rep.consistency;
            out << "consistency: winding=" << cons.winding
                << " sense_preserving=" << cons.sense_preserving
                << " sense_reversing=" << cons.sense_reversing << " -> "
                << (cons.matched ? "matched" : "MISMATCH") << '\n';
        }
        if (rep.count_check) {
            const auto& cc = *rep.count_check;
            out << "count: found " << cc.found << ", expected "
                << (cc.exact ? std::string("exactly ") + std::to_string(cc.expected_min)
                             : "[" + std::to_string(cc.expected_min) + ", " +
                                   std::to_string(cc.expected_max) + "]")
                << " -> " << (cc.ok ? "ok" : "VIOLATION") << '\n';
        }
        out << "verdict: " << (rep.pass ? "pass" : "fail") << '\n';
    }
    return rep.pass ? kExitOk : kExitViolation;
}

int cmd_sweep(int n, int k, double c_start, double c_end, int steps, const ConfigOptions& c,
              bool json, std::ostream& out) {
    const std::vector<SweepRow> rows = sweep_trinomial(n, k, c_start, c_end, steps, c.cfg,
                                                       c.contain_tol);
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const SweepRow& r : rows) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
    } else {
        write_sweep_csv(out, rows);
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero-inclusion regions and numerical zero finding for complex-valued "
                 "harmonic polynomials"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "Emit machine-readable JSON");

    InstanceOptions inst_opts;
    ConfigOptions cfg_opts;

    auto* bounds_cmd = app.add_subcommand("bounds", "Compute every applicable inclusion region");
    add_instance_options(bounds_cmd, inst_opts);

    auto* solve_cmd = app.add_subcommand("solve", "Find all zeros numerically");
    add_instance_options(solve_cmd, inst_opts);
    add_config_options(solve_cmd, cfg_opts);

    auto* wind_cmd = app.add_subcommand("wind", "Winding number on a circle");
    add_instance_options(wind_cmd, inst_opts);
    add_config_options(wind_cmd, cfg_opts);
    double radius = 0.0;
    wind_cmd->add_option("--radius", radius, "Contour radius")->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "Solve, then check every zero against every region");
    add_instance_options(verify_cmd, inst_opts);
    add_config_options(verify_cmd, cfg_opts);

    auto* sweep_cmd = app.add_subcommand("sweep", "Zero counts and regions over a range of c");
    int sweep_n = 0, sweep_k = 0, sweep_steps = 0;
    double c_start = 0.0, c_end = 0.0;
    sweep_cmd->add_option("--n", sweep_n, "Trinomial degree n")->required();
    sweep_cmd->add_option("--k", sweep_k, "Conjugated exponent k")->required();
    sweep_cmd->add_option("--c-start", c_start, "First c value")->required();
    sweep_cmd->add_option("--c-end", c_end, "Last c value")->required();
    sweep_cmd->add_option("--steps", sweep_steps, "Number of rows (>= 2)")->required();
    add_config_options(sweep_cmd, cfg_opts);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("zeroloc");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    }

    try {
        if (bounds_cmd->parsed()) return cmd_bounds(build_instance(inst_opts, true), json, out);
        if (solve_cmd->parsed())
            return cmd_solve(build_instance(inst_opts, false), cfg_opts, json, out);
        if (wind_cmd->parsed())
            return cmd_wind(build_instance(inst_opts, false), radius, cfg_opts, json, out);
        if (verify_cmd->parsed())
            return cmd_verify(build_instance(inst_opts, false), cfg_opts, json, out);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_n, sweep_k, c_start, c_end, sweep_steps, cfg_opts, json, out);
        err << "parse error: no subcommand selected\n";
        return kExitParse;
    } catch (const InvalidTrinomialError& e) {
        err << "InvalidTrinomial: " << e.what() << '\n';
        return kExitCase;
    } catch (const CaseMismatchError& e) {
        err << "CaseMismatch: " << e.what() << '\n';
        return kExitCase;
    } catch (const DegreeZeroError& e) {
        err << "DegreeZero: " << e.what() << '\n';
        return kExitCase;
    } catch (const ZeroOnContourError& e) {
        err << "ZeroOnContour: " << e.what() << '\n';
        return kExitSolver;
    } catch (const NonIntegerWindingError& e) {
        err << "NonIntegerWinding: " << e.what() << '\n';
        return kExitSolver;
    } catch (const SingularZeroPresentError& e) {
        err << "SingularZeroPresent: " << e.what() << '\n';
        return kExitSolver;
    } catch (const CapacityExceededError& e) {
        err << "CapacityExceeded: " << e.what() << '\n';
        return kExitSolver;
    } catch (const NoConvergenceError& e) {
        err << "NoConvergence: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::invalid_argument& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitSolver;
    }
}

}  // namespace zeroloc
