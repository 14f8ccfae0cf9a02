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

#include "dimwit/random.h"

#include <array>
#include <cmath>

#include "dimwit/error.h"

namespace dimwit {

namespace {

// Stirling series remainder log(k!) - [(k + 1/2) log(k + 1) - (k + 1) + log(sqrt(2 pi))].
double stirling_correction(std::uint64_t k) {
    static constexpr std::array<double, 10> kTable = {
        0.08106146679532726, 0.04134069595540929, 0.02767792568499834, 0.02079067210376509,
        0.01664469118982119, 0.01387612882307075, 0.01189670994589177, 0.01041126526197209,
        0.009255462182712733, 0.008330563433362871,
    };
    if (k < kTable.size()) {
        return kTable[k];
    }
    double kp1 = static_cast<double>(k) + 1;
    double r = 1 / kp1;
    double r2 = r * r;
    return (1.0 / 12 - (1.0 / 360 - r2 / 1260) * r2) * r;
}

std::uint64_t binomial_inversion(Rng &rng, std::uint64_t n, double p) {
    double q = 1 - p;
    double s = p / q;
    double a = static_cast<double>(n + 1) * s;
    double r = std::pow(q, static_cast<double>(n));
    double u = uniform01(rng);
    std::uint64_t x = 0;
    while (u > r) {
        u -= r;
        x++;
        if (x > n) {
            // Rounding left a sliver of mass; restart the draw.
            x = 0;
            r = std::pow(q, static_cast<double>(n));
            u = uniform01(rng);
            continue;
        }
        r *= a / static_cast<double>(x) - s;
    }
    return x;
}

std::uint64_t binomial_btrd(Rng &rng, std::uint64_t n, double p) {
    double nd = static_cast<double>(n);
    double spq = std::sqrt(nd * p * (1 - p));
    double b = 1.15 + 2.53 * spq;
    double a = -0.0873 + 0.0248 * b + 0.01 * p;
    double c = nd * p + 0.5;
    double v_r = 0.92 - 4.2 / b;
    double alpha = (2.83 + 5.1 / b) * spq;
    double r = p / (1 - p);
    double nr = (nd + 1) * r;
    double npq = nd * p * (1 - p);
    double m = std::floor((nd + 1) * p);
    auto m_int = static_cast<std::uint64_t>(m);

    while (true) {
        double u;
        double v = uniform01(rng);
        if (v <= 0.86 * v_r) {
            u = v / v_r - 0.43;
            return static_cast<std::uint64_t>(std::floor((2 * a / (0.5 - std::abs(u)) + b) * u + c));
        }
        if (v >= v_r) {
            u = uniform01(rng) - 0.5;
        } else {
            u = v / v_r - 0.93;
            u = std::copysign(0.5, u) - u;
            v = uniform01(rng) * v_r;
        }
        double us = 0.5 - std::abs(u);
        double kd = std::floor((2 * a / us + b) * u + c);
        if (kd < 0 || kd > nd) {
            continue;
        }
        auto k = static_cast<std::uint64_t>(kd);
        v = v * alpha / (a / (us * us) + b);
        double km = std::abs(kd - m);
        if (km <= 15) {
            // Recursive evaluation of f(k) / f(m).
            double f = 1;
            if (m_int < k) {
                for (std::uint64_t i = m_int + 1; i <= k; i++) {
                    f *= nr / static_cast<double>(i) - r;
                }
            } else if (m_int > k) {
                for (std::uint64_t i = k + 1; i <= m_int; i++) {
                    v *= nr / static_cast<double>(i) - r;
                }
            }
            if (v <= f) {
                return k;
            }
            continue;
        }
        // Squeeze, then the exact log-ratio test.
        v = std::log(v);
        double rho = (km / npq) * (((km / 3 + 0.625) * km + 1.0 / 6) / npq + 0.5);
        double t = -km * km / (2 * npq);
        if (v < t - rho) {
            return k;
        }
        if (v > t + rho) {
            continue;
        }
        double nm = nd - m + 1;
        double h = (m + 0.5) * std::log((m + 1) / (r * nm)) + stirling_correction(m_int) +
                   stirling_correction(n - m_int);
        double nk = nd - kd + 1;
        if (v <= h + (nd + 1) * std::log(nm / nk) + (kd + 0.5) * std::log(nk * r / (kd + 1)) -
                     stirling_correction(k) - stirling_correction(n - k)) {
            return k;
        }
    }
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    // FNV-1a over the tag keeps the rule easy to reproduce outside C++.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : tag) {
        h = (h ^ ch) * 0x100000001b3ull;
    }
    return mix64(mix64(mix64(seed) ^ h) ^ index);
}

std::uint64_t sample_binomial(Rng &rng, std::uint64_t n, double p) {
    if (!(p >= 0 && p <= 1)) {
        throw ValidationError("sample_binomial: p must lie in [0, 1]");
    }
    if (n == 0 || p == 0) {
        return 0;
    }
    if (p == 1) {
        return n;
    }
    if (p > 0.5) {
        return n - sample_binomial(rng, n, 1 - p);
    }
    if (static_cast<double>(n) * p < 10) {
        return binomial_inversion(rng, n, p);
    }
    return binomial_btrd(rng, n, p);
}

}  // namespace dimwit
