#pragma once

#include <map>
#include <string>
#include <vector>

#include "zeroloc/poly.hpp"
#include "zeroloc/real_roots.hpp"
#include "zeroloc/region.hpp"

namespace zeroloc {

enum class Method {
    Cauchy,
    Marden,
    DehmerAnalytic,
    Rouche,
    HarmonicDisk,
    TrinomialDisk,
    KennedyRing,
    KennedyRingAlt,
    AlphaRing,
    BetaAnnulus,
    TrinomialInclusion,
};

std::string method_name(Method m);

/// A computed zero-inclusion region together with the named intermediate
/// quantities (M, r, ring radii, ...) for auditing, and status flags such
/// as "annulus_unsupported" or "lower_bound_undefined".
struct BoundReport {
    Method method;
    Region region;
    std::map<std::string, double> intermediate;
    std::vector<std::string> flags;

    bool has_flag(const std::string& f) const;
};

struct RealInterval {
    double lo;
    double hi;
};

/// [-(M+1), M+1] with M = max_{j<n} |a_j / a_n|; contains all real zeros.
RealInterval cauchy_interval(const RealPoly& p);

/// Unique positive root of |a_0| + |a_1| x + ... + |a_{n-1}| x^{n-1} - |a_n| x^n;
/// all zeros lie in the closed disk of that radius. Returns 0 for a pure
/// power a_n z^n (all zeros at the origin).
double marden_radius(const AnalyticPoly& p);

/// sqrt(1 + sum_{j<n} |b_j|^2) for monic input; all zeros lie strictly
/// inside except the pure-power case where the radius is 1 and the only
/// zero is the origin. Non-monic input is normalized when allowed.
double rouche_radius(const AnalyticPoly& p, bool normalize_to_monic = true);

/// Closed disk of radius max(1, r) with M = max_{j<n} |a_j / a_n| and r the
/// positive root != 1 of x^{n+1} - (1+M) x^n + M = 0.
BoundReport dehmer_disk(const AnalyticPoly& p);

/// Closed disk of radius max(1, r) for f = h + conj(g) with deg h > deg g,
/// where M = max_{j<n} (|a_j| + |b_j|) / |a_n|.
BoundReport harmonic_disk(const HarmonicPoly& p);

/// Specialization of the harmonic disk for p_c: M = max(1, |c|).
BoundReport trinomial_disk(const HarmonicTrinomial& t);

/// Closed annulus [x1, x2] for z^n + a z^k + b (and its harmonic
/// equivalent): x1, x2 are the unique positive roots of
/// x^n + |a| x^k - |b| and x^n - |a| x^k - |b|.
Region kennedy_ring(int n, int k, Complex a, Complex b);

/// Open annulus (y1, y2) with y_{1,2}^(n-k) = |b|^((n-k)/n) -/+ |a| in
/// closed form. When |b|^((n-k)/n) <= |a| the lower bound does not exist
/// and a union holding only the open disk of radius y2 is returned.
Region kennedy_ring_alt(int n, int k, Complex a, Complex b);

/// Closed annulus [alpha1, alpha2] for real 0 < c < 1; alpha1, alpha2 are
/// the positive roots of x^n + c x^k - 1 and x^n - c x^k - 1. The trinomial
/// has exactly n distinct zeros in this regime.
Region alpha_ring(const HarmonicTrinomial& t);

enum class TrinomialCase { A, B, C };

/// Closed-form annular bounds by case:
///   A (real 0 < c < 1): open annulus ((1-c)^(1/(n-k)), (1+c)^(1/(n-k)))
///     containing all zeros;
///   B (real c >= 1): zeros with |z| >= 1 lie in the closed annulus
///     [(c-1)^(1/(n-k)), (1+c)^(1/(n-k))]; smaller zeros are admitted via
///     an open unit-disk union member;
///   C (any c with |c| >= 1): case B with |c| in place of c.
Region beta_annulus(const HarmonicTrinomial& t, TrinomialCase which);

/// Tightest representable composite: the case-selected beta annulus
/// intersected with the trinomial disk. For complex c with |c| < 1 no
/// annular bound is available and the disk is returned with the
/// "annulus_unsupported" flag.
BoundReport trinomial_inclusion_region(const HarmonicTrinomial& t);

// Report-shaped variants carrying the solved radii as named intermediates.
BoundReport marden_report(const AnalyticPoly& p);
BoundReport rouche_report(const AnalyticPoly& p, bool normalize_to_monic = true);
BoundReport kennedy_ring_report(int n, int k, Complex a, Complex b);
BoundReport kennedy_ring_alt_report(int n, int k, Complex a, Complex b);
BoundReport alpha_ring_report(const HarmonicTrinomial& t);
BoundReport beta_annulus_report(const HarmonicTrinomial& t, TrinomialCase which);

/// Every bound applicable to the trinomial, in a fixed emission order.
std::vector<BoundReport> all_trinomial_bounds(const HarmonicTrinomial& t);

/// Marden, Rouche and the analytic disk for an analytic polynomial.
std::vector<BoundReport> all_analytic_bounds(const AnalyticPoly& p);

}  // namespace zeroloc
