#include "zeroloc/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace zeroloc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string complex_text(Complex c) {
    if (c.imag() == 0.0) return format_double(c.real());
    return format_double(c.real()) + (c.imag() < 0 ? "-" : "+") +
           format_double(std::abs(c.imag())) + "i";
}

nlohmann::json coeffs_json(const AnalyticPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& c : p.coeffs()) arr.push_back({c.real(), c.imag()});
    return arr;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string Instance::describe() const {
    if (const auto* t = std::get_if<HarmonicTrinomial>(&value)) {
        return "trinomial n=" + std::to_string(t->n()) + " k=" + std::to_string(t->k()) +
               " c=" + complex_text(t->c());
    }
    if (const auto* h = std::get_if<HarmonicPoly>(&value)) {
        return "harmonic deg_h=" + std::to_string(h->analytic_degree()) +
               " deg_g=" + (h->g().is_zero() ? "none" : std::to_string(h->conjugate_degree()));
    }
    const auto& a = std::get<AnalyticPoly>(value);
    return "analytic deg=" + std::to_string(a.degree());
}

nlohmann::json Instance::to_json() const {
    nlohmann::json j;
    if (const auto* t = std::get_if<HarmonicTrinomial>(&value)) {
        j["type"] = "trinomial";
        j["n"] = t->n();
        j["k"] = t->k();
        j["c"] = {t->c().real(), t->c().imag()};
    } else if (const auto* h = std::get_if<HarmonicPoly>(&value)) {
        j["type"] = "harmonic";
        j["h_coeffs_ascending"] = coeffs_json(h->h());
        j["g_coeffs_ascending"] = coeffs_json(h->g());
    } else {
        j["type"] = "analytic";
        j["coeffs_ascending"] = coeffs_json(std::get<AnalyticPoly>(value));
    }
    return j;
}

bool VerificationReport::all_contained() const {
    for (const auto& row : containment)
        for (bool cell : row)
            if (!cell) return false;
    return true;
}

VerificationReport run_verification(const Instance& inst, const SolverConfig& cfg,
                                    double contain_tol) {
    VerificationReport rep;
    rep.instance = inst;

    const HarmonicPoly hp = inst.is_trinomial()
                                ? std::get<HarmonicTrinomial>(inst.value).to_harmonic()
                                : std::get<HarmonicPoly>(inst.value);

    auto t0 = Clock::now();
    if (inst.is_trinomial())
        rep.regions = all_trinomial_bounds(std::get<HarmonicTrinomial>(inst.value));
    else
        rep.regions = {harmonic_disk(hp)};
    rep.timings_ms["bounds"] = ms_since(t0);

    t0 = Clock::now();
    rep.zeros = find_all_zeros(hp, cfg);
    rep.timings_ms["solve"] = ms_since(t0);

    rep.containment.resize(rep.zeros.size());
    for (std::size_t i = 0; i < rep.zeros.size(); ++i) {
        rep.containment[i].reserve(rep.regions.size());
        for (const BoundReport& b : rep.regions)
            rep.containment[i].push_back(b.region.contains(rep.zeros[i].z, contain_tol));
    }

    t0 = Clock::now();
    rep.consistency = signed_count_consistency(hp, rep.zeros, cfg);
    rep.timings_ms["consistency"] = ms_since(t0);

    if (inst.is_trinomial()) {
        const auto& t = std::get<HarmonicTrinomial>(inst.value);
        const Complex c = t.c();
        if (c.imag() == 0.0 && c.real() > 0.0) {
            CountCheck cc;
            cc.found = static_cast<int>(rep.zeros.size());
            if (c.real() < 1.0) {
                cc.exact = true;
                cc.expected_min = cc.expected_max = t.n();
            } else {
                cc.expected_min = t.n();
                cc.expected_max = t.n() + 2 * t.k();
            }
            cc.ok = cc.found >= cc.expected_min && cc.found <= cc.expected_max;
            rep.count_check = cc;
        }
    }

    rep.pass = rep.all_contained() && rep.consistency->matched &&
               (!rep.count_check || rep.count_check->ok);
    return rep;
}

std::vector<SweepRow> sweep_trinomial(int n, int k, double c_start, double c_end, int steps,
                                      const SolverConfig& cfg, double contain_tol) {
    if (!(c_start > 0.0) || !(c_start < c_end))
        throw std::invalid_argument("sweep: requires 0 < c_start < c_end");
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        SweepRow row;
        row.c = c_start + (c_end - c_start) * static_cast<double>(i) / (steps - 1);
        try {
            const HarmonicTrinomial t{n, k, Complex{row.c, 0.0}};
            const BoundReport incl = trinomial_inclusion_region(t);
            row.disk_radius = incl.intermediate.at("R");
            if (auto it = incl.intermediate.find("beta1"); it != incl.intermediate.end())
                row.inner = it->second;
            if (auto it = incl.intermediate.find("beta2"); it != incl.intermediate.end())
                row.outer = it->second;

            const HarmonicPoly hp = t.to_harmonic();
            const std::vector<RootRecord> zeros = find_all_zeros(hp, cfg);
            row.count = static_cast<int>(zeros.size());
            row.all_contained = true;
            for (const RootRecord& z : zeros)
                row.all_contained =
                    row.all_contained && incl.region.contains(z.z, contain_tol);

            const ConsistencyReport cons = signed_count_consistency(hp, zeros, cfg);
            row.signed_count = cons.sense_preserving - cons.sense_reversing;
            row.winding = cons.winding;
            if (!cons.matched) row.status = "winding_mismatch";
        } catch (const Error& e) {
            row.status = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "c,count,signed_count,inner,outer,disk_radius,all_contained,status\n";
    for (const SweepRow& r : rows) {
        os << format_double(r.c) << ',' << r.count << ',' << r.signed_count << ','
           << format_double(r.inner) << ',' << format_double(r.outer) << ','
           << format_double(r.disk_radius) << ',' << (r.all_contained ? 1 : 0) << ',' << r.status
           << '\n';
    }
}

nlohmann::json to_json(const Region& r) {
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return {{"kind", "disk"},
                        {"inner", 0.0},
                        {"outer", v.radius},
                        {"inner_closed", true},
                        {"outer_closed", v.closed}};
            } else if constexpr (std::is_same_v<T, Annulus>) {
                return {{"kind", "annulus"},
                        {"inner", v.inner},
                        {"outer", v.outer},
                        {"inner_closed", v.inner_closed},
                        {"outer_closed", v.outer_closed}};
            } else {
                nlohmann::json members = nlohmann::json::array();
                for (const Region& sub : v.members) members.push_back(to_json(sub));
                return {{"kind", "union"}, {"members", members}};
            }
        },
        r.value());
}

nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json j;
    j["method"] = method_name(r.method);
    j["region"] = to_json(r.region);
    j["intermediate"] = r.intermediate;
    j["flags"] = r.flags;
    return j;
}

nlohmann::json to_json(const RootRecord& r) {
    return {{"re", r.z.real()},
            {"im", r.z.imag()},
            {"residual", r.residual},
            {"orientation", orientation_name(r.orientation)}};
}

nlohmann::json to_json(const WindingResult& r) {
    return {{"winding", r.winding},
            {"min_modulus_on_contour", r.min_modulus_on_contour},
            {"samples_used", r.samples_used}};
}

nlohmann::json to_json(const ConsistencyReport& r) {
    return {{"winding", r.winding},
            {"sense_preserving", r.sense_preserving},
            {"sense_reversing", r.sense_reversing},
            {"radius", r.radius},
            {"matched", r.matched}};
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["instance"] = r.instance.to_json();

    nlohmann::json regions = nlohmann::json::array();
    for (const BoundReport& b : r.regions) regions.push_back(to_json(b));
    j["regions"] = regions;

    nlohmann::json zeros = nlohmann::json::array();
    for (const RootRecord& z : r.zeros) zeros.push_back(to_json(z));
    j["zeros"] = zeros;

    nlohmann::json checks;
    checks["containment"] = r.containment;
    if (r.consistency) checks["consistency"] = to_json(*r.consistency);
    if (r.count_check)
        checks["count"] = {{"found", r.count_check->found},
                           {"expected_min", r.count_check->expected_min},
                           {"expected_max", r.count_check->expected_max},
                           {"exact", r.count_check->exact},
                           {"ok", r.count_check->ok}};
    checks["timings_ms"] = r.timings_ms;
    j["checks"] = checks;

    j["verdict"] = r.pass ? "pass" : "fail";
    return j;
}

nlohmann::json to_json(const SweepRow& r) {
    return {{"c", r.c},
            {"count", r.count},
            {"signed_count", r.signed_count},
            {"winding", r.winding},
            {"inner", r.inner},
            {"outer", r.outer},
            {"disk_radius", r.disk_radius},
            {"all_contained", r.all_contained},
            {"status", r.status}};
}

}  // namespace zeroloc
