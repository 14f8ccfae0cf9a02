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

#ifndef DIMWIT_SIMPLEX_H
#define DIMWIT_SIMPLEX_H

#include <functional>
#include <span>
#include <vector>

namespace dimwit {

struct SimplexOptions {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    /// Stop once every vertex lies within this distance of the best one.
    double diameter_tolerance = 1e-12;
    int max_iterations = 2000;
    /// Edge length of the initial right-angled simplex.
    double initial_step = 0.5;
};

struct SimplexResult {
    std::vector<double> x;
    double value;
    int iterations;
    bool converged;
};

/// Nelder-Mead downhill simplex minimization.
SimplexResult simplex_minimize(const std::function<double(std::span<const double>)> &f,
                               std::span<const double> start,
                               const SimplexOptions &options = {});

}  // namespace dimwit

#endif
