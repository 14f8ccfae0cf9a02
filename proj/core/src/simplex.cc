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

#include "dimwit/simplex.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dimwit/error.h"

namespace dimwit {

namespace {

double distance(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        s += (a[k] - b[k]) * (a[k] - b[k]);
    }
    return std::sqrt(s);
}

// centroid + coef * (centroid - worst)
std::vector<double> along(const std::vector<double> &centroid, const std::vector<double> &worst, double coef) {
    std::vector<double> out(centroid.size());
    for (std::size_t k = 0; k < out.size(); k++) {
        out[k] = centroid[k] + coef * (centroid[k] - worst[k]);
    }
    return out;
}

}  // namespace

SimplexResult simplex_minimize(const std::function<double(std::span<const double>)> &f,
                               std::span<const double> start,
                               const SimplexOptions &options) {
    std::size_t n = start.size();
    if (n == 0) {
        throw ValidationError("simplex_minimize: empty starting point");
    }

    std::vector<std::vector<double>> pts(n + 1, std::vector<double>(start.begin(), start.end()));
    for (std::size_t k = 0; k < n; k++) {
        pts[k + 1][k] += options.initial_step;
    }
    std::vector<double> vals(n + 1);
    for (std::size_t k = 0; k <= n; k++) {
        vals[k] = f(pts[k]);
    }

    std::vector<std::size_t> order(n + 1);
    int iter = 0;
    bool converged = false;
    for (; iter < options.max_iterations; iter++) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return vals[a] < vals[b];
        });
        std::size_t best = order.front();
        std::size_t worst = order.back();
        std::size_t second_worst = order[n - 1];

        double diameter = 0;
        for (std::size_t k = 0; k <= n; k++) {
            diameter = std::max(diameter, distance(pts[k], pts[best]));
        }
        if (diameter < options.diameter_tolerance) {
            converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k <= n; k++) {
            if (k == worst) {
                continue;
            }
            for (std::size_t j = 0; j < n; j++) {
                centroid[j] += pts[k][j] / static_cast<double>(n);
            }
        }

        auto reflected = along(centroid, pts[worst], options.reflection);
        double f_reflected = f(reflected);
        if (f_reflected < vals[best]) {
            auto expanded = along(centroid, pts[worst], options.reflection * options.expansion);
            double f_expanded = f(expanded);
            if (f_expanded < f_reflected) {
                pts[worst] = std::move(expanded);
                vals[worst] = f_expanded;
            } else {
                pts[worst] = std::move(reflected);
                vals[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < vals[second_worst]) {
            pts[worst] = std::move(reflected);
            vals[worst] = f_reflected;
            continue;
        }

        // Outside contraction when the reflection beat the worst point, inside otherwise.
        bool outside = f_reflected < vals[worst];
        auto contracted = outside ? along(centroid, pts[worst], options.reflection * options.contraction)
                                  : along(centroid, pts[worst], -options.contraction);
        double f_contracted = f(contracted);
        if (f_contracted < (outside ? f_reflected : vals[worst])) {
            pts[worst] = std::move(contracted);
            vals[worst] = f_contracted;
            continue;
        }

        for (std::size_t k = 0; k <= n; k++) {
            if (k == best) {
                continue;
            }
            for (std::size_t j = 0; j < n; j++) {
                pts[k][j] = pts[best][j] + options.shrink * (pts[k][j] - pts[best][j]);
            }
            vals[k] = f(pts[k]);
        }
    }

    std::size_t best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    return {pts[best], vals[best], iter, converged};
}

}  // namespace dimwit
