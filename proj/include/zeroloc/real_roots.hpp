#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "zeroloc/errors.hpp"

namespace zeroloc {

/// Real polynomial, ascending coefficients (coeffs[j] multiplies x^j).
/// Must have at least one nonzero coefficient.
class RealPoly {
  public:
    explicit RealPoly(std::vector<double> ascending_coeffs);

    /// Sparse (exponent, coefficient) form, normalized to dense ascending
    /// storage. Exponents must be distinct and nonnegative.
    static RealPoly from_terms(const std::vector<std::pair<int, double>>& terms);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double operator()(double x) const;

  private:
    std::vector<double> coeffs_;
};

/// Bracket with a strict sign change: lo < hi, f(lo) and f(hi) nonzero and
/// of opposite sign.
struct RootBracket {
    double lo;
    double hi;
    int f_lo_sign;
    int f_hi_sign;

    /// Evaluates f at both ends and validates the sign change.
    static RootBracket around(const std::function<double(double)>& f, double lo, double hi);
};

/// Number of sign changes between consecutive nonzero entries.
int sign_variations(std::span<const double> coeffs);
int sign_variations(const std::vector<double>& coeffs);

/// Upper bound on the count of positive real roots; the true count equals
/// this or is smaller by an even number.
int descartes_positive_bound(const RealPoly& p);

/// Bisection safeguarded by Newton steps (finite-difference slope) that are
/// accepted only while the iterate stays inside the current bracket.
/// Returns x* with |f(x*)| minimal among the evaluated candidates once the
/// bracket width is <= tol. Deterministic for fixed inputs.
double solve_bracketed(const std::function<double(double)>& f, RootBracket bracket,
                       double tol = 1e-12, int max_iter = 200);

/// The positive real root r != 1 of x^(n+1) - (1+M) x^n + M = 0, M > 0,
/// n >= 1. Since x = 1 is always a simple root, the problem reduces to the
/// single positive root of the deflated q(x) = x^n - M (x^(n-1)+...+1),
/// which carries exactly one coefficient sign change. When M == 1/n the two
/// roots merge and exactly 1 is returned.
double dehmer_radius(double M, int n);

}  // namespace zeroloc
