#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zeroloc/poly.hpp"

namespace zeroloc {

enum class Orientation { SensePreserving, SenseReversing, Singular };

std::string orientation_name(Orientation o);

struct RootRecord {
    Complex z;
    double residual = 0.0;  // |f(z)|
    Orientation orientation = Orientation::Singular;
    double jacobian_det = 0.0;  // |h'(z)|^2 - |g'(z)|^2
};

struct SolverConfig {
    double grid_density = 40.0;         // seed points per unit length
    double newton_tol = 1e-10;          // residual tolerance, times coefficient scale
    int max_newton_iters = 60;
    double dedup_radius = 1e-6;         // relative merge distance for duplicates
    double search_radius_factor = 1.1;  // inflation of the inclusion disk
    double singular_threshold = 1e-8;   // |jacobian det| below => Singular
};

enum class NewtonFailure { Diverged, Stalled, SingularJacobian };

struct NewtonOutcome {
    std::optional<RootRecord> root;
    std::optional<NewtonFailure> failure;

    bool ok() const { return root.has_value(); }
};

/// Damped Newton on the 2x2 real system equivalent to f(z) = 0. Harmonic f
/// is not analytic, so the step solves the real Jacobian assembled from the
/// Wirtinger derivatives. Accepts when |f| <= newton_tol * (1 + sum of
/// coefficient moduli).
NewtonOutcome newton_refine(const HarmonicPoly& p, Complex seed, const SolverConfig& cfg = {});

/// All zeros found from a uniform Newton seed grid over the square
/// circumscribing search_radius_factor times the inclusion disk, merged by
/// dedup_radius and sorted by (re, im). Requires deg h > deg g. Throws
/// CapacityExceededError when distinct roots exceed n^2.
std::vector<RootRecord> find_all_zeros(const HarmonicPoly& p, const SolverConfig& cfg = {});

struct WindingResult {
    int winding = 0;
    double min_modulus_on_contour = 0.0;
    std::size_t samples_used = 0;
};

/// Total change of arg f along the positively oriented circle |z| = radius,
/// divided by 2*pi. Sampling is refined adaptively until every argument
/// increment is below pi/2; for harmonic maps with non-degenerate zeros the
/// value equals (sense-preserving - sense-reversing) zeros enclosed.
WindingResult winding_number(const HarmonicPoly& p, double radius, const SolverConfig& cfg = {});

struct ConsistencyReport {
    int winding = 0;
    int sense_preserving = 0;
    int sense_reversing = 0;
    double radius = 0.0;            // contour used for the winding count
    double min_modulus_on_contour = 0.0;
    std::size_t samples_used = 0;
    bool matched = false;           // winding == sense_preserving - sense_reversing
};

/// Cross-checks the winding count on a circle enclosing the inclusion disk
/// against the signed count of found zeros. Throws SingularZeroPresentError
/// when any zero is orientation-degenerate (the signed argument principle
/// does not apply there).
ConsistencyReport signed_count_consistency(const HarmonicPoly& p, const SolverConfig& cfg = {});
ConsistencyReport signed_count_consistency(const HarmonicPoly& p,
                                           std::span<const RootRecord> zeros,
                                           const SolverConfig& cfg = {});

}  // namespace zeroloc
