#pragma once

#include <complex>
#include <vector>

namespace zeroloc {

using Complex = std::complex<double>;

/// z^k by repeated multiplication (k >= 0); avoids the exp/log detour of
/// std::pow so results are reproducible bit-for-bit across libm versions.
Complex power_int(Complex z, int k);

/// Analytic polynomial with complex coefficients stored in ascending order:
/// coeffs[j] multiplies z^j. Trailing zero coefficients are trimmed on
/// construction, so the leading coefficient of a nonzero polynomial is
/// always nonzero. The zero polynomial is representable (single 0 entry,
/// degree 0); it is accepted where a conjugate part may vanish and rejected
/// by the operations that genuinely need a_n != 0.
class AnalyticPoly {
  public:
    explicit AnalyticPoly(std::vector<Complex> ascending_coeffs);
    static AnalyticPoly zero();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int j) const;  // 0 beyond the stored range
    Complex leading() const { return coeffs_.back(); }

    Complex operator()(Complex z) const;
    AnalyticPoly derivative() const;
    double coeff_modulus_sum() const;

  private:
    std::vector<Complex> coeffs_;
};

/// Complex-valued harmonic polynomial f = h + conj(g).
///
/// The primary constructor enforces deg h >= 1 and deg g < deg h (g may be
/// the zero polynomial); the inclusion-disk bound is only valid under that
/// ordering. `unchecked` skips the degree comparison so maps like
/// f = conj(z) can still be evaluated, Newton-refined and winding-counted.
class HarmonicPoly {
  public:
    HarmonicPoly(AnalyticPoly h, AnalyticPoly g);
    static HarmonicPoly unchecked(AnalyticPoly h, AnalyticPoly g);

    const AnalyticPoly& h() const { return h_; }
    const AnalyticPoly& g() const { return g_; }
    int analytic_degree() const { return h_.degree(); }
    int conjugate_degree() const { return g_.degree(); }
    /// True when deg h > deg g with h nonzero (the ordering the disk bound
    /// and the grid solver require).
    bool h_degree_dominant() const;
    double coeff_modulus_sum() const;

  private:
    HarmonicPoly(AnalyticPoly h, AnalyticPoly g, bool validate);
    AnalyticPoly h_;
    AnalyticPoly g_;
};

/// Harmonic trinomial p_c(z) = z^n + c conj(z)^k - 1 with n >= 3,
/// 1 <= k <= n-1, gcd(n, k) = 1 and c != 0. Stored structurally so the
/// ring bounds can use exact closed forms; `to_harmonic` expands it for
/// the solver.
class HarmonicTrinomial {
  public:
    HarmonicTrinomial(int n, int k, Complex c);

    int n() const { return n_; }
    int k() const { return k_; }
    Complex c() const { return c_; }

    HarmonicPoly to_harmonic() const;
    Complex operator()(Complex z) const;

  private:
    int n_;
    int k_;
    Complex c_;
};

/// h(z) + conj(g(z)), both parts by Horner recurrence.
Complex evaluate_harmonic(const HarmonicPoly& p, Complex z);

struct WirtingerDerivatives {
    Complex fz;     // d/dz   = h'(z)
    Complex fzbar;  // d/dz~  = conj(g'(z))

    /// Determinant of the underlying 2x2 real Jacobian.
    double jacobian_det() const { return std::norm(fz) - std::norm(fzbar); }
};

WirtingerDerivatives wirtinger_derivatives(const HarmonicPoly& p, Complex z);

}  // namespace zeroloc
