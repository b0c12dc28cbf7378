#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "zeroloc/bounds.hpp"
#include "zeroloc/solver.hpp"

namespace zeroloc {

/// A parsed problem instance: a structural trinomial, a general harmonic
/// polynomial, or an analytic polynomial.
struct Instance {
    std::variant<HarmonicTrinomial, HarmonicPoly, AnalyticPoly> value;

    bool is_trinomial() const { return std::holds_alternative<HarmonicTrinomial>(value); }
    bool is_harmonic() const { return std::holds_alternative<HarmonicPoly>(value); }
    bool is_analytic() const { return std::holds_alternative<AnalyticPoly>(value); }

    std::string describe() const;
    nlohmann::json to_json() const;
};

struct CountCheck {
    int found = 0;
    int expected_min = 0;
    int expected_max = 0;
    bool exact = false;  // true when the count must equal expected_min
    bool ok = false;
};

struct VerificationReport {
    Instance instance;
    std::vector<BoundReport> regions;
    std::vector<RootRecord> zeros;
    std::vector<std::vector<bool>> containment;  // [zero][region]
    std::optional<ConsistencyReport> consistency;
    std::optional<CountCheck> count_check;
    bool pass = false;
    std::map<std::string, double> timings_ms;

    bool all_contained() const;
};

/// Bounds + solver + containment matrix + signed-count consistency for a
/// trinomial or harmonic instance.
VerificationReport run_verification(const Instance& inst, const SolverConfig& cfg,
                                    double contain_tol = 1e-6);

struct SweepRow {
    double c = 0.0;
    int count = -1;
    int signed_count = 0;
    int winding = 0;
    double inner = std::numeric_limits<double>::quiet_NaN();
    double outer = std::numeric_limits<double>::quiet_NaN();
    double disk_radius = std::numeric_limits<double>::quiet_NaN();
    bool all_contained = false;
    std::string status = "ok";
};

/// One row per c over an inclusive linear grid; solver failures mark the
/// row's status instead of aborting the sweep.
std::vector<SweepRow> sweep_trinomial(int n, int k, double c_start, double c_end, int steps,
                                      const SolverConfig& cfg, double contain_tol = 1e-6);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// JSON encodings (field names are part of the CLI output contract).
nlohmann::json to_json(const Region& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const RootRecord& r);
nlohmann::json to_json(const WindingResult& r);
nlohmann::json to_json(const ConsistencyReport& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const SweepRow& r);

/// Decimal text for a double that parses back to the identical bits.
std::string format_double(double v);

}  // namespace zeroloc
