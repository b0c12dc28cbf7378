// Independent reference computations used only by tests. Nothing here may
// call into the solver or bound paths it is meant to check.
#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "zeroloc/poly.hpp"

namespace oracles {

/// Plain bisection to ~1e-15 absolute; requires a sign change.
inline double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                          int iters = 200) {
    double flo = f(lo);
    assert(flo * f(hi) < 0.0);
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Winding of f around the origin along |z| = radius, evaluated by brute
/// argument accumulation over uniform samples (no adaptivity).
inline double dense_winding(const zeroloc::HarmonicPoly& p, double radius,
                            int samples = 100000) {
    double total = 0.0;
    std::complex<double> f_prev;
    std::complex<double> f_first;
    for (int i = 0; i <= samples; ++i) {
        const double theta = 2.0 * M_PI * static_cast<double>(i) / samples;
        const std::complex<double> z = radius * std::complex<double>(std::cos(theta),
                                                                     std::sin(theta));
        const std::complex<double> f =
            i == samples ? f_first : zeroloc::evaluate_harmonic(p, z);
        if (i == 0) {
            f_first = f;
        } else {
            total += std::arg(f * std::conj(f_prev));
        }
        f_prev = f;
    }
    return total / (2.0 * M_PI);
}

/// Grid cells of a brute-force |f| scan whose value dips below the given
/// threshold; used to check that the solver did not miss a zero anywhere.
struct GridLowCell {
    int ix;
    int iy;
    std::complex<double> z;
    double modulus;
};

inline std::vector<GridLowCell> low_modulus_cells(const zeroloc::HarmonicPoly& p,
                                                  double half_side, int cells,
                                                  double threshold) {
    std::vector<GridLowCell> out;
    const double step = 2.0 * half_side / (cells - 1);
    for (int iy = 0; iy < cells; ++iy) {
        for (int ix = 0; ix < cells; ++ix) {
            const std::complex<double> z{-half_side + ix * step, -half_side + iy * step};
            const double m = std::abs(zeroloc::evaluate_harmonic(p, z));
            if (m < threshold) out.push_back({ix, iy, z, m});
        }
    }
    return out;
}

}  // namespace oracles
