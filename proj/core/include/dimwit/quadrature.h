// Copyright 2026 The dimwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIMWIT_QUADRATURE_H
#define DIMWIT_QUADRATURE_H

#include <cmath>
#include <cstdlib>
#include <limits>

namespace dimwit {

template <typename T>
struct QuadratureResult {
    T value;
    /// Sum of the local Richardson error estimates.
    double error_estimate;
    bool converged;
    long evaluations;
};

namespace detail {

template <typename F, typename T>
struct SimpsonState {
    const F &f;
    int max_depth;
    long max_evaluations;
    double error = 0;
    bool converged = true;
    long evaluations = 0;

    T recurse(double a, double b, T fa, T fm, T fb, T whole, double tol, int depth) {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m);
        double rm = 0.5 * (m + b);
        T flm = f(lm);
        T frm = f(rm);
        evaluations += 2;
        T left = (m - a) / 6 * (fa + 4.0 * flm + fm);
        T right = (b - m) / 6 * (fm + 4.0 * frm + fb);
        T diff = left + right - whole;
        // Below the rounding floor further bisection only adds noise.
        double magnitude = std::abs(fa) + std::abs(flm) + std::abs(fm) + std::abs(frm) + std::abs(fb);
        double floor = 16 * std::numeric_limits<double>::epsilon() * (b - a) * magnitude / 5;
        bool resolved = std::abs(diff) <= 15 * tol || std::abs(diff) <= floor;
        bool exhausted = depth >= max_depth || evaluations >= max_evaluations;
        if (resolved || exhausted) {
            if (!resolved) {
                converged = false;
            }
            error += std::abs(diff) / 15;
            return left + right + diff / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, tol / 2, depth + 1) +
               recurse(m, b, fm, frm, fb, right, tol / 2, depth + 1);
    }
};

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to an absolute tolerance.
/// The interval is first cut into `panels` equal pieces, each receiving an equal
/// share of the tolerance; this keeps oscillatory integrands from fooling the
/// first error estimate. T may be double or std::complex<double>. Refinement stops
/// (with converged = false) once max_evaluations integrand calls have been spent.
template <typename F>
auto adaptive_simpson(const F &f,
                      double a,
                      double b,
                      double abs_tol,
                      int panels = 64,
                      int max_depth = 40,
                      long max_evaluations = 4'000'000) -> QuadratureResult<decltype(f(a))> {
    using T = decltype(f(a));
    detail::SimpsonState<F, T> state{f, max_depth, max_evaluations};
    T total{};
    double width = (b - a) / panels;
    double panel_tol = abs_tol / panels;
    for (int k = 0; k < panels; k++) {
        double lo = a + k * width;
        double hi = (k + 1 == panels) ? b : lo + width;
        double mid = 0.5 * (lo + hi);
        T flo = f(lo);
        T fmid = f(mid);
        T fhi = f(hi);
        state.evaluations += 3;
        T whole = (hi - lo) / 6 * (flo + 4.0 * fmid + fhi);
        total += state.recurse(lo, hi, flo, fmid, fhi, whole, panel_tol, 0);
    }
    return {total, state.error, state.converged, state.evaluations};
}

}  // namespace dimwit

#endif
