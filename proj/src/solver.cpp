#include "zeroloc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "zeroloc/bounds.hpp"
#include "zeroloc/errors.hpp"

namespace zeroloc {

namespace {

constexpr double kJacobianFloor = 1e-14;
constexpr double kDampingFloor = 9.5367431640625e-7;  // 2^-20

double coefficient_scale(const HarmonicPoly& p) { return 1.0 + p.coeff_modulus_sum(); }

Orientation classify(double jacobian_det, double threshold) {
    if (jacobian_det > threshold) return Orientation::SensePreserving;
    if (jacobian_det < -threshold) return Orientation::SenseReversing;
    return Orientation::Singular;
}

/// Radius of a disk guaranteed to contain every zero, valid for either
/// degree ordering. For deg g > deg h the zeros coincide with those of the
/// swapped map g + conj(h), so the same bound applies; equal degrees have
/// no such bound and get a coefficient-sum fallback for divergence checks.
double zero_enclosure_radius(const HarmonicPoly& p) {
    if (p.h_degree_dominant()) return harmonic_disk(p).region.outer_radius();
    const HarmonicPoly swapped = HarmonicPoly::unchecked(p.g(), p.h());
    if (swapped.h_degree_dominant()) return harmonic_disk(swapped).region.outer_radius();
    return 1.0 + p.coeff_modulus_sum();
}

NewtonOutcome refine_impl(const HarmonicPoly& p, Complex seed, const SolverConfig& cfg,
                          double scale, double search_radius) {
    const double accept = cfg.newton_tol * scale;
    const double escape = 10.0 * std::max(search_radius, 1.0);

    Complex z = seed;
    Complex f = evaluate_harmonic(p, z);
    double res = std::abs(f);

    for (int iter = 0; iter < cfg.max_newton_iters; ++iter) {
        if (!std::isfinite(res)) return {std::nullopt, NewtonFailure::Diverged};
        if (res <= accept) {
            const auto d = wirtinger_derivatives(p, z);
            const double jd = d.jacobian_det();
            return {RootRecord{z, res, classify(jd, cfg.singular_threshold), jd}, std::nullopt};
        }
        if (std::abs(z) > escape) return {std::nullopt, NewtonFailure::Diverged};

        const auto d = wirtinger_derivatives(p, z);
        const double pr = d.fz.real(), pi = d.fz.imag();
        const double rr = d.fzbar.real(), ri = d.fzbar.imag();
        // Real Jacobian of (u, v) wrt (x, y):
        //   [ pr+rr   ri-pi ]
        //   [ pi+ri   pr-rr ]
        const double det = std::norm(d.fz) - std::norm(d.fzbar);
        if (det == 0.0) return {std::nullopt, NewtonFailure::SingularJacobian};

        const double u = f.real(), v = f.imag();
        const double dx = (-u * (pr - rr) + v * (ri - pi)) / det;
        const double dy = (-v * (pr + rr) + u * (pi + ri)) / det;
        const Complex step{dx, dy};

        double lambda = 1.0;
        bool improved = false;
        while (lambda >= kDampingFloor) {
            const Complex zc = z + lambda * step;
            const Complex fc = evaluate_harmonic(p, zc);
            const double rc = std::abs(fc);
            if (rc < res) {
                z = zc;
                f = fc;
                res = rc;
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!improved) {
            return {std::nullopt, std::abs(det) < kJacobianFloor
                                      ? NewtonFailure::SingularJacobian
                                      : NewtonFailure::Stalled};
        }
    }
    return {std::nullopt, NewtonFailure::Stalled};
}

}  // namespace

std::string orientation_name(Orientation o) {
    switch (o) {
        case Orientation::SensePreserving: return "sense_preserving";
        case Orientation::SenseReversing: return "sense_reversing";
        case Orientation::Singular: return "singular";
    }
    return "unknown";
}

NewtonOutcome newton_refine(const HarmonicPoly& p, Complex seed, const SolverConfig& cfg) {
    return refine_impl(p, seed, cfg, coefficient_scale(p), zero_enclosure_radius(p));
}

std::vector<RootRecord> find_all_zeros(const HarmonicPoly& p, const SolverConfig& cfg) {
    if (!p.h_degree_dominant())
        throw std::invalid_argument("find_all_zeros: requires deg h > deg g");

    const double scale = coefficient_scale(p);
    const double enclosure = harmonic_disk(p).region.outer_radius();
    const double rs = cfg.search_radius_factor * enclosure;
    const double spacing = 1.0 / cfg.grid_density;
    const int steps = static_cast<int>(std::ceil(2.0 * rs / spacing)) + 1;

    std::vector<Complex> seeds;
    seeds.reserve(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps));
    for (int iy = 0; iy < steps; ++iy)
        for (int ix = 0; ix < steps; ++ix)
            seeds.emplace_back(-rs + ix * spacing, -rs + iy * spacing);

    // Seed refinement is pure per seed; chunks run on worker threads and the
    // merged result is canonicalized by sorting, so output is independent of
    // the schedule and of the thread count.
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t chunks =
        std::min<std::size_t>(hw, std::max<std::size_t>(1, seeds.size() / 4096));
    std::vector<std::vector<RootRecord>> partial(chunks);

    auto worker = [&](std::size_t ci) {
        const std::size_t lo = seeds.size() * ci / chunks;
        const std::size_t hi = seeds.size() * (ci + 1) / chunks;
        auto& found = partial[ci];
        for (std::size_t i = lo; i < hi; ++i) {
            NewtonOutcome out = refine_impl(p, seeds[i], cfg, scale, rs);
            if (out.ok() && std::isfinite(out.root->z.real()) &&
                std::isfinite(out.root->z.imag()))
                found.push_back(*out.root);
        }
    };

    if (chunks == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(chunks);
        for (std::size_t ci = 0; ci < chunks; ++ci) pool.emplace_back(worker, ci);
        for (auto& t : pool) t.join();
    }

    std::vector<RootRecord> all;
    for (auto& part : partial) all.insert(all.end(), part.begin(), part.end());

    auto lex_less = [](const RootRecord& a, const RootRecord& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    };
    std::sort(all.begin(), all.end(), lex_less);

    // Greedy merge: keep the lowest-residual representative of each cluster.
    std::vector<RootRecord> distinct;
    for (const RootRecord& r : all) {
        bool merged = false;
        for (RootRecord& rep : distinct) {
            const double scale_z = std::max(1.0, std::max(std::abs(r.z), std::abs(rep.z)));
            if (std::abs(r.z - rep.z) <= cfg.dedup_radius * scale_z) {
                if (r.residual < rep.residual ||
                    (r.residual == rep.residual && lex_less(r, rep)))
                    rep = r;
                merged = true;
                break;
            }
        }
        if (!merged) distinct.push_back(r);
    }

    const std::size_t n = static_cast<std::size_t>(p.analytic_degree());
    if (distinct.size() > n * n)
        throw CapacityExceededError("find_all_zeros: more distinct roots than n^2");

    std::sort(distinct.begin(), distinct.end(), lex_less);
    return distinct;
}

WindingResult winding_number(const HarmonicPoly& p, double radius, const SolverConfig& cfg) {
    (void)cfg;
    if (!(radius > 0.0)) throw std::invalid_argument("winding_number: radius must be > 0");

    const double scale = coefficient_scale(p);
    const double modulus_floor = 1e-6 * scale;
    constexpr double half_pi = std::numbers::pi / 2.0;
    constexpr int max_depth = 48;

    std::size_t samples = 0;
    double min_modulus = std::numeric_limits<double>::infinity();

    auto sample = [&](double t) {
        const double theta = 2.0 * std::numbers::pi * t;
        const Complex z = radius * Complex{std::cos(theta), std::sin(theta)};
        const Complex f = evaluate_harmonic(p, z);
        ++samples;
        const double m = std::abs(f);
        min_modulus = std::min(min_modulus, m);
        if (m <= modulus_floor)
            throw ZeroOnContourError("winding_number: |f| too small on the contour");
        return f;
    };

    // Argument increment over [t0, t1], subdividing until each piece turns
    // by less than pi/2 so the principal-branch differences accumulate the
    // true continuous change of argument.
    auto segment = [&](auto&& self, double t0, Complex f0, double t1, Complex f1,
                       int depth) -> double {
        const double dphi = std::arg(f1 * std::conj(f0));
        if (std::abs(dphi) < half_pi) return dphi;
        if (depth >= max_depth)
            throw NonIntegerWindingError("winding_number: argument step did not settle");
        const double tm = 0.5 * (t0 + t1);
        const Complex fm = sample(tm);
        return self(self, t0, f0, tm, fm, depth + 1) + self(self, tm, fm, t1, f1, depth + 1);
    };

    const int degree_hint = std::max(p.analytic_degree(), p.conjugate_degree());
    const int base = std::max(64, 8 * (degree_hint + 1));

    double total = 0.0;
    const Complex f_start = sample(0.0);
    Complex f_prev = f_start;
    for (int i = 1; i <= base; ++i) {
        const double t = static_cast<double>(i) / base;
        // Close the loop on the exact starting value so the sum is an
        // integer multiple of 2*pi up to rounding.
        const Complex f_next = i == base ? f_start : sample(t);
        total += segment(segment, static_cast<double>(i - 1) / base, f_prev, t, f_next, 0);
        f_prev = f_next;
    }

    const double w = total / (2.0 * std::numbers::pi);
    const auto rounded = static_cast<int>(std::llround(w));
    if (std::abs(w - rounded) > 1e-6)
        throw NonIntegerWindingError("winding_number: accumulated winding is not an integer");
    return {rounded, min_modulus, samples};
}

ConsistencyReport signed_count_consistency(const HarmonicPoly& p, const SolverConfig& cfg) {
    const std::vector<RootRecord> zeros = find_all_zeros(p, cfg);
    return signed_count_consistency(p, zeros, cfg);
}

ConsistencyReport signed_count_consistency(const HarmonicPoly& p,
                                           std::span<const RootRecord> zeros,
                                           const SolverConfig& cfg) {
    ConsistencyReport rep;
    for (const RootRecord& r : zeros) {
        switch (r.orientation) {
            case Orientation::SensePreserving: ++rep.sense_preserving; break;
            case Orientation::SenseReversing: ++rep.sense_reversing; break;
            case Orientation::Singular:
                throw SingularZeroPresentError(
                    "signed_count_consistency: singular zero present; signed count undefined");
        }
    }
    rep.radius = cfg.search_radius_factor * harmonic_disk(p).region.outer_radius();
    const WindingResult wr = winding_number(p, rep.radius, cfg);
    rep.winding = wr.winding;
    rep.min_modulus_on_contour = wr.min_modulus_on_contour;
    rep.samples_used = wr.samples_used;
    rep.matched = rep.winding == rep.sense_preserving - rep.sense_reversing;
    return rep;
}

}  // namespace zeroloc
