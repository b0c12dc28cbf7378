#include "zeroloc/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace zeroloc {

Complex power_int(Complex z, int k) {
    Complex acc{1.0, 0.0};
    for (int i = 0; i < k; ++i) acc *= z;
    return acc;
}

AnalyticPoly::AnalyticPoly(std::vector<Complex> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("AnalyticPoly: empty coefficient list");
    while (coeffs_.size() > 1 && coeffs_.back() == Complex{0.0, 0.0}) coeffs_.pop_back();
}

AnalyticPoly AnalyticPoly::zero() { return AnalyticPoly{{Complex{0.0, 0.0}}}; }

bool AnalyticPoly::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == Complex{0.0, 0.0};
}

Complex AnalyticPoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return {0.0, 0.0};
    return coeffs_[static_cast<std::size_t>(j)];
}

Complex AnalyticPoly::operator()(Complex z) const {
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

AnalyticPoly AnalyticPoly::derivative() const {
    if (coeffs_.size() == 1) return zero();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        d[j - 1] = coeffs_[j] * static_cast<double>(j);
    return AnalyticPoly{std::move(d)};
}

double AnalyticPoly::coeff_modulus_sum() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::abs(c);
    return s;
}

HarmonicPoly::HarmonicPoly(AnalyticPoly h, AnalyticPoly g)
    : HarmonicPoly(std::move(h), std::move(g), true) {}

HarmonicPoly::HarmonicPoly(AnalyticPoly h, AnalyticPoly g, bool validate)
    : h_(std::move(h)), g_(std::move(g)) {
    if (!validate) {
        if (h_.is_zero() && g_.is_zero())
            throw std::invalid_argument("HarmonicPoly: both parts are zero");
        return;
    }
    if (h_.is_zero() || h_.degree() < 1)
        throw std::invalid_argument("HarmonicPoly: deg h must be >= 1 with h nonzero");
    if (!g_.is_zero() && g_.degree() >= h_.degree())
        throw std::invalid_argument("HarmonicPoly: deg g must be strictly below deg h");
}

HarmonicPoly HarmonicPoly::unchecked(AnalyticPoly h, AnalyticPoly g) {
    return HarmonicPoly{std::move(h), std::move(g), false};
}

bool HarmonicPoly::h_degree_dominant() const {
    if (h_.is_zero() || h_.degree() < 1) return false;
    return g_.is_zero() || g_.degree() < h_.degree();
}

double HarmonicPoly::coeff_modulus_sum() const {
    return h_.coeff_modulus_sum() + (g_.is_zero() ? 0.0 : g_.coeff_modulus_sum());
}

HarmonicTrinomial::HarmonicTrinomial(int n, int k, Complex c) : n_(n), k_(k), c_(c) {
    if (n < 3) throw InvalidTrinomialError("HarmonicTrinomial: n must be >= 3");
    if (k < 1 || k > n - 1)
        throw InvalidTrinomialError("HarmonicTrinomial: k must satisfy 1 <= k <= n-1");
    if (std::gcd(n, k) != 1) throw InvalidTrinomialError("HarmonicTrinomial: gcd(n, k) must be 1");
    if (c == Complex{0.0, 0.0}) throw InvalidTrinomialError("HarmonicTrinomial: c must be nonzero");
}

HarmonicPoly HarmonicTrinomial::to_harmonic() const {
    std::vector<Complex> hc(static_cast<std::size_t>(n_) + 1, Complex{0.0, 0.0});
    hc[0] = Complex{-1.0, 0.0};
    hc[static_cast<std::size_t>(n_)] = Complex{1.0, 0.0};
    std::vector<Complex> gc(static_cast<std::size_t>(k_) + 1, Complex{0.0, 0.0});
    gc[static_cast<std::size_t>(k_)] = c_;
    return HarmonicPoly{AnalyticPoly{std::move(hc)}, AnalyticPoly{std::move(gc)}};
}

Complex HarmonicTrinomial::operator()(Complex z) const {
    return power_int(z, n_) + c_ * std::conj(power_int(z, k_)) - Complex{1.0, 0.0};
}

Complex evaluate_harmonic(const HarmonicPoly& p, Complex z) {
    return p.h()(z) + std::conj(p.g()(z));
}

WirtingerDerivatives wirtinger_derivatives(const HarmonicPoly& p, Complex z) {
    return {p.h().derivative()(z), std::conj(p.g().derivative()(z))};
}

}  // namespace zeroloc
