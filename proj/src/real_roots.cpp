#include "zeroloc/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zeroloc {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

RealPoly::RealPoly(std::vector<double> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (coeffs_.empty() || (coeffs_.size() == 1 && coeffs_[0] == 0.0))
        throw std::invalid_argument("RealPoly: needs at least one nonzero coefficient");
}

RealPoly RealPoly::from_terms(const std::vector<std::pair<int, double>>& terms) {
    int max_exp = -1;
    for (const auto& [e, c] : terms) {
        if (e < 0) throw std::invalid_argument("RealPoly: negative exponent");
        max_exp = std::max(max_exp, e);
    }
    std::vector<double> dense(static_cast<std::size_t>(max_exp) + 1, 0.0);
    for (const auto& [e, c] : terms) {
        if (dense[static_cast<std::size_t>(e)] != 0.0)
            throw std::invalid_argument("RealPoly: duplicate exponent");
        dense[static_cast<std::size_t>(e)] = c;
    }
    return RealPoly{std::move(dense)};
}

double RealPoly::operator()(double x) const {
    double acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RootBracket RootBracket::around(const std::function<double(double)>& f, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("RootBracket: lo must be < hi");
    const int slo = sign_of(f(lo));
    const int shi = sign_of(f(hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("RootBracket: endpoints must have opposite nonzero signs");
    return {lo, hi, slo, shi};
}

int sign_variations(std::span<const double> coeffs) {
    int variations = 0;
    int prev = 0;
    for (double c : coeffs) {
        const int s = sign_of(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int sign_variations(const std::vector<double>& coeffs) {
    return sign_variations(std::span<const double>{coeffs});
}

int descartes_positive_bound(const RealPoly& p) { return sign_variations(p.coeffs()); }

double solve_bracketed(const std::function<double(double)>& f, RootBracket bracket, double tol,
                       int max_iter) {
    double lo = bracket.lo, hi = bracket.hi;
    const int slo = bracket.f_lo_sign;

    double best_x = 0.5 * (lo + hi);
    double best_abs = std::abs(f(best_x));
    double x = best_x;

    auto consider = [&](double cand, double fcand) {
        const double a = std::abs(fcand);
        if (a < best_abs || (a == best_abs && cand < best_x)) {
            best_abs = a;
            best_x = cand;
        }
    };

    bool last_was_newton = false;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (hi - lo <= tol) return best_x;

        const double fx = f(x);
        consider(x, fx);
        if (fx == 0.0) return x;

        // Shrink the bracket using the sign at x.
        if (sign_of(fx) == slo)
            lo = x;
        else
            hi = x;
        if (hi - lo <= tol) return best_x;

        // Newton candidate from a centered finite-difference slope;
        // alternate with bisection so the bracket provably shrinks.
        double next = 0.5 * (lo + hi);
        if (!last_was_newton) {
            const double h = std::max(1e-7, 1e-7 * std::abs(x));
            const double slope = (f(x + h) - f(x - h)) / (2.0 * h);
            if (slope != 0.0 && std::isfinite(slope)) {
                const double xn = x - fx / slope;
                if (xn > lo && xn < hi) {
                    next = xn;
                    last_was_newton = true;
                }
            }
        } else {
            last_was_newton = false;
        }
        x = next;
    }
    throw NoConvergenceError("solve_bracketed: max iterations exceeded");
}

double dehmer_radius(double M, int n) {
    if (!(M > 0.0)) throw std::domain_error("dehmer_radius: M must be > 0");
    if (n < 1) throw std::domain_error("dehmer_radius: n must be >= 1");

    // q(1) = 1 - n M decides which side of 1 the non-unit root lies on.
    const double q1 = 1.0 - static_cast<double>(n) * M;
    if (std::abs(q1) <= 1e-13) return 1.0;  // double root merged at 1

    auto q = [&](double x) {
        double acc = 1.0;                               // x^n coefficient
        for (int j = 0; j < n; ++j) acc = acc * x - M;  // subtracts M * x^j terms
        return acc;
    };

    double root;
    if (q1 < 0.0) {
        // Root above 1; q grows positive beyond the Cauchy-style bound M + 2.
        double hi = M + 2.0;
        int guard = 0;
        while (q(hi) <= 0.0) {
            hi = hi * 2.0 + 1.0;
            if (++guard > 64) throw NoConvergenceError("dehmer_radius: no upper bracket");
        }
        root = solve_bracketed(q, RootBracket::around(q, 1.0, hi));
    } else {
        root = solve_bracketed(q, RootBracket::around(q, 0.0, 1.0));
    }

    // Residual of the undeflated equation, relative to its largest term.
    double xp = 1.0;
    for (int j = 0; j < n; ++j) xp *= root;
    const double residual = std::abs(xp * root - (1.0 + M) * xp + M);
    if (residual > 1e-9 * std::max(1.0, xp * root))
        throw NoConvergenceError("dehmer_radius: residual check failed");
    return root;
}

}  // namespace zeroloc
