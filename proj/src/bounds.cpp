#include "zeroloc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zeroloc {

namespace {

bool is_real(Complex c) { return c.imag() == 0.0; }

void require_trinomial_shape(int n, int k, Complex a, Complex b) {
    if (n < 3) throw InvalidTrinomialError("trinomial ring: n must be >= 3");
    if (k < 1 || k > n - 1) throw InvalidTrinomialError("trinomial ring: 1 <= k <= n-1 required");
    if (std::gcd(n, k) != 1) throw InvalidTrinomialError("trinomial ring: gcd(n, k) must be 1");
    if (a == Complex{0.0, 0.0} || b == Complex{0.0, 0.0})
        throw InvalidTrinomialError("trinomial ring: a and b must be nonzero");
}

// Positive root of x^n + s*A*x^k - B (s = +1 or -1); exactly one sign
// change, hence exactly one positive root.
double trinomial_positive_root(int n, int k, double A, double B, double s) {
    auto f = [&](double x) {
        double xk = 1.0, xn = 1.0;
        for (int i = 0; i < k; ++i) xk *= x;
        xn = xk;
        for (int i = k; i < n; ++i) xn *= x;
        return xn + s * A * xk - B;
    };
    double hi;
    if (s > 0.0) {
        hi = std::pow(B, 1.0 / n);  // f(B^(1/n)) = A * B^(k/n) > 0
        if (f(hi) <= 0.0) hi = hi * 2.0 + 1.0;
    } else {
        hi = 1.0 + std::max(A, B);
        int guard = 0;
        while (f(hi) <= 0.0) {
            hi = hi * 2.0 + 1.0;
            if (++guard > 64) throw NoConvergenceError("trinomial ring: no upper bracket");
        }
    }
    return solve_bracketed(f, RootBracket::around(f, 0.0, hi));
}

std::map<std::string, double> disk_intermediates(double M, double r, double R) {
    return {{"M", M}, {"r", r}, {"R", R}};
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::Cauchy: return "cauchy";
        case Method::Marden: return "marden";
        case Method::DehmerAnalytic: return "dehmer_analytic";
        case Method::Rouche: return "rouche";
        case Method::HarmonicDisk: return "harmonic_disk";
        case Method::TrinomialDisk: return "trinomial_disk";
        case Method::KennedyRing: return "kennedy_ring";
        case Method::KennedyRingAlt: return "kennedy_ring_alt";
        case Method::AlphaRing: return "alpha_ring";
        case Method::BetaAnnulus: return "beta_annulus";
        case Method::TrinomialInclusion: return "trinomial_inclusion";
    }
    return "unknown";
}

bool BoundReport::has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

RealInterval cauchy_interval(const RealPoly& p) {
    if (p.degree() < 1) throw DegreeZeroError("cauchy_interval: degree must be >= 1");
    const double an = std::abs(p.coeffs().back());
    double M = 0.0;
    for (int j = 0; j < p.degree(); ++j)
        M = std::max(M, std::abs(p.coeffs()[static_cast<std::size_t>(j)]) / an);
    return {-(M + 1.0), M + 1.0};
}

double marden_radius(const AnalyticPoly& p) {
    const int n = p.degree();
    if (n < 1 || p.is_zero()) throw DegreeZeroError("marden_radius: degree must be >= 1");

    std::vector<double> m(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) m[static_cast<std::size_t>(j)] = std::abs(p.coeff(j));

    int j0 = -1;
    for (int j = 0; j < n; ++j)
        if (m[static_cast<std::size_t>(j)] != 0.0) {
            j0 = j;
            break;
        }
    if (j0 < 0) return 0.0;  // pure power a_n z^n: every zero at the origin

    double M = 0.0;
    for (int j = 0; j < n; ++j) M = std::max(M, m[static_cast<std::size_t>(j)] / m.back());

    // Deflate x^j0 so the constant term of the defining equation is positive.
    auto f = [&](double x) {
        double acc = -m.back();
        for (int j = n - 1; j >= j0; --j) acc = acc * x + m[static_cast<std::size_t>(j)];
        return acc;
    };
    double hi = M + 1.0;
    int guard = 0;
    while (f(hi) >= 0.0) {
        hi = hi * 2.0 + 1.0;
        if (++guard > 64) throw NoConvergenceError("marden_radius: no upper bracket");
    }
    return solve_bracketed(f, RootBracket::around(f, 0.0, hi));
}

double rouche_radius(const AnalyticPoly& p, bool normalize_to_monic) {
    const int n = p.degree();
    if (n < 1 || p.is_zero()) throw DegreeZeroError("rouche_radius: degree must be >= 1");

    const Complex lead = p.leading();
    if (lead != Complex{1.0, 0.0} && !normalize_to_monic)
        throw std::invalid_argument("rouche_radius: polynomial must be monic");

    double sum = 1.0;
    for (int j = 0; j < n; ++j) sum += std::norm(p.coeff(j) / lead);
    return std::sqrt(sum);
}

BoundReport dehmer_disk(const AnalyticPoly& p) {
    const int n = p.degree();
    if (n < 1 || p.is_zero()) throw DegreeZeroError("dehmer_disk: degree must be >= 1");

    const double an = std::abs(p.leading());
    double M = 0.0;
    for (int j = 0; j < n; ++j) M = std::max(M, std::abs(p.coeff(j)) / an);

    const double r = M > 0.0 ? dehmer_radius(M, n) : 0.0;
    const double R = std::max(1.0, r);
    return {Method::DehmerAnalytic, Region::disk(R, true), disk_intermediates(M, r, R), {}};
}

BoundReport harmonic_disk(const HarmonicPoly& p) {
    if (!p.h_degree_dominant())
        throw std::invalid_argument("harmonic_disk: requires deg h > deg g");
    const int n = p.analytic_degree();
    const double an = std::abs(p.h().leading());

    double M = 0.0;
    for (int j = 0; j < n; ++j) {
        const double num = std::abs(p.h().coeff(j)) + std::abs(p.g().coeff(j));
        M = std::max(M, num / an);
    }

    const double r = M > 0.0 ? dehmer_radius(M, n) : 0.0;
    const double R = std::max(1.0, r);
    return {Method::HarmonicDisk, Region::disk(R, true), disk_intermediates(M, r, R), {}};
}

BoundReport trinomial_disk(const HarmonicTrinomial& t) {
    const double M = std::max(1.0, std::abs(t.c()));
    const double r = dehmer_radius(M, t.n());
    const double R = std::max(1.0, r);
    return {Method::TrinomialDisk, Region::disk(R, true), disk_intermediates(M, r, R), {}};
}

Region kennedy_ring(int n, int k, Complex a, Complex b) {
    require_trinomial_shape(n, k, a, b);
    const double A = std::abs(a), B = std::abs(b);
    const double x1 = trinomial_positive_root(n, k, A, B, +1.0);
    const double x2 = trinomial_positive_root(n, k, A, B, -1.0);
    return Region::annulus(x1, x2, true, true);
}

Region kennedy_ring_alt(int n, int k, Complex a, Complex b) {
    require_trinomial_shape(n, k, a, b);
    const double A = std::abs(a), B = std::abs(b);
    const double nk = static_cast<double>(n - k);
    const double t = std::pow(B, nk / static_cast<double>(n));
    const double y2 = std::pow(t + A, 1.0 / nk);
    if (t <= A) {
        // Lower-bound equation has no positive root; only the outer bound
        // survives, reported as an open disk.
        return Region::union_of({Region::disk(y2, false)});
    }
    const double y1 = std::pow(t - A, 1.0 / nk);
    return Region::annulus(y1, y2, false, false);
}

Region alpha_ring(const HarmonicTrinomial& t) {
    if (!is_real(t.c()) || !(t.c().real() > 0.0) || !(t.c().real() < 1.0))
        throw CaseMismatchError("alpha_ring: requires real c with 0 < c < 1");
    const int n = t.n(), k = t.k();
    const double c = t.c().real();

    auto lo_eq = [&](double x) {
        double xk = 1.0;
        for (int i = 0; i < k; ++i) xk *= x;
        double xn = xk;
        for (int i = k; i < n; ++i) xn *= x;
        return xn + c * xk - 1.0;
    };
    auto hi_eq = [&](double x) {
        double xk = 1.0;
        for (int i = 0; i < k; ++i) xk *= x;
        double xn = xk;
        for (int i = k; i < n; ++i) xn *= x;
        return xn - c * xk - 1.0;
    };

    // lo_eq(0) = -1 < 0 < c = lo_eq(1); hi_eq(1) = -c < 0 and
    // hi_eq((1+c)^(1/(n-k))) = beta2^k - 1 > 0.
    const double beta2 = std::pow(1.0 + c, 1.0 / static_cast<double>(n - k));
    const double a1 = solve_bracketed(lo_eq, RootBracket::around(lo_eq, 0.0, 1.0));
    const double a2 = solve_bracketed(hi_eq, RootBracket::around(hi_eq, 1.0, beta2));
    return Region::annulus(a1, a2, true, true);
}

Region beta_annulus(const HarmonicTrinomial& t, TrinomialCase which) {
    const int nk = t.n() - t.k();
    const Complex c = t.c();
    switch (which) {
        case TrinomialCase::A: {
            if (!is_real(c) || !(c.real() > 0.0) || !(c.real() < 1.0))
                throw CaseMismatchError("beta_annulus case A: requires real c with 0 < c < 1");
            const double cr = c.real();
            const double b1 = std::pow(1.0 - cr, 1.0 / nk);
            const double b2 = std::pow(1.0 + cr, 1.0 / nk);
            return Region::annulus(b1, b2, false, false);
        }
        case TrinomialCase::B: {
            if (!is_real(c) || !(c.real() >= 1.0))
                throw CaseMismatchError("beta_annulus case B: requires real c >= 1");
            const double cr = c.real();
            const double b1 = std::pow(cr - 1.0, 1.0 / nk);
            const double b2 = std::pow(cr + 1.0, 1.0 / nk);
            // The annular bound constrains only zeros with |z| >= 1; smaller
            // zeros are admitted through the open unit disk.
            return Region::union_of(
                {Region::disk(1.0, false), Region::annulus(b1, b2, true, true)});
        }
        case TrinomialCase::C: {
            const double ca = std::abs(c);
            if (!(ca >= 1.0))
                throw CaseMismatchError("beta_annulus case C: requires |c| >= 1");
            const double b1 = std::pow(ca - 1.0, 1.0 / nk);
            const double b2 = std::pow(ca + 1.0, 1.0 / nk);
            return Region::union_of(
                {Region::disk(1.0, false), Region::annulus(b1, b2, true, true)});
        }
    }
    throw CaseMismatchError("beta_annulus: unknown case");
}

namespace {

struct CasePick {
    bool available;
    TrinomialCase which;
    const char* tag;
};

CasePick pick_case(Complex c) {
    if (is_real(c) && c.real() > 0.0 && c.real() < 1.0) return {true, TrinomialCase::A, "case=a"};
    if (is_real(c) && c.real() >= 1.0) return {true, TrinomialCase::B, "case=b"};
    if (std::abs(c) >= 1.0) return {true, TrinomialCase::C, "case=c"};
    return {false, TrinomialCase::A, "case=disk_only"};
}

}  // namespace

BoundReport trinomial_inclusion_region(const HarmonicTrinomial& t) {
    BoundReport disk = trinomial_disk(t);
    const double R = disk.region.outer_radius();

    BoundReport out;
    out.method = Method::TrinomialInclusion;
    out.intermediate = disk.intermediate;
    out.intermediate["n"] = t.n();
    out.intermediate["k"] = t.k();

    const CasePick pick = pick_case(t.c());
    out.flags.push_back(pick.tag);
    if (!pick.available) {
        // No annular bound exists for complex c with |c| < 1.
        out.flags.push_back("annulus_unsupported");
        out.region = disk.region;
        return out;
    }

    const Region beta = beta_annulus(t, pick.which);
    const int nk = t.n() - t.k();
    const double base = pick.which == TrinomialCase::A ? t.c().real() : std::abs(t.c());
    out.intermediate["beta1"] = pick.which == TrinomialCase::A
                                    ? std::pow(1.0 - base, 1.0 / nk)
                                    : std::pow(base - 1.0, 1.0 / nk);
    out.intermediate["beta2"] = std::pow(1.0 + base, 1.0 / nk);
    out.region = beta.clipped_to_disk(R, true);
    return out;
}

BoundReport marden_report(const AnalyticPoly& p) {
    const double r = marden_radius(p);
    return {Method::Marden, Region::disk(r, true), {{"r", r}}, {}};
}

BoundReport rouche_report(const AnalyticPoly& p, bool normalize_to_monic) {
    const double R = rouche_radius(p, normalize_to_monic);
    BoundReport rep{Method::Rouche, Region::disk(R, false), {{"R", R}}, {}};
    if (p.leading() != Complex{1.0, 0.0}) rep.flags.push_back("normalized_to_monic");
    return rep;
}

BoundReport kennedy_ring_report(int n, int k, Complex a, Complex b) {
    Region ring = kennedy_ring(n, k, a, b);
    const auto& ann = std::get<Annulus>(ring.value());
    return {Method::KennedyRing, ring, {{"x1", ann.inner}, {"x2", ann.outer}}, {}};
}

BoundReport kennedy_ring_alt_report(int n, int k, Complex a, Complex b) {
    Region ring = kennedy_ring_alt(n, k, a, b);
    BoundReport rep{Method::KennedyRingAlt, ring, {}, {}};
    if (const auto* ann = std::get_if<Annulus>(&ring.value())) {
        rep.intermediate["y1"] = ann->inner;
        rep.intermediate["y2"] = ann->outer;
    } else {
        rep.intermediate["y2"] = ring.outer_radius();
        rep.flags.push_back("lower_bound_undefined");
    }
    return rep;
}

BoundReport alpha_ring_report(const HarmonicTrinomial& t) {
    Region ring = alpha_ring(t);
    const auto& ann = std::get<Annulus>(ring.value());
    return {Method::AlphaRing,
            ring,
            {{"alpha1", ann.inner},
             {"alpha2", ann.outer},
             {"expected_zeros", static_cast<double>(t.n())}},
            {}};
}

BoundReport beta_annulus_report(const HarmonicTrinomial& t, TrinomialCase which) {
    Region ring = beta_annulus(t, which);
    const int nk = t.n() - t.k();
    const double base = which == TrinomialCase::A ? t.c().real() : std::abs(t.c());
    const double b1 = which == TrinomialCase::A ? std::pow(1.0 - base, 1.0 / nk)
                                                : std::pow(base - 1.0, 1.0 / nk);
    const double b2 = std::pow(1.0 + base, 1.0 / nk);
    BoundReport rep{Method::BetaAnnulus, ring, {{"beta1", b1}, {"beta2", b2}}, {}};
    rep.flags.push_back(which == TrinomialCase::A ? "case=a"
                                                  : (which == TrinomialCase::B ? "case=b" : "case=c"));
    return rep;
}

std::vector<BoundReport> all_trinomial_bounds(const HarmonicTrinomial& t) {
    std::vector<BoundReport> out;
    out.push_back(trinomial_disk(t));
    out.push_back(kennedy_ring_report(t.n(), t.k(), t.c(), Complex{-1.0, 0.0}));
    out.push_back(kennedy_ring_alt_report(t.n(), t.k(), t.c(), Complex{-1.0, 0.0}));
    const CasePick pick = pick_case(t.c());
    if (pick.available && pick.which == TrinomialCase::A) out.push_back(alpha_ring_report(t));
    if (pick.available) out.push_back(beta_annulus_report(t, pick.which));
    out.push_back(trinomial_inclusion_region(t));
    return out;
}

std::vector<BoundReport> all_analytic_bounds(const AnalyticPoly& p) {
    return {marden_report(p), rouche_report(p, true), dehmer_disk(p)};
}

}  // namespace zeroloc
