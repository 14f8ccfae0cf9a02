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

#ifndef DIMWIT_TOOLS_CLI_H
#define DIMWIT_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dimwit/analysis.h"
#include "dimwit/models.h"
#include "dimwit/pulse.h"

namespace dimwit::cli {

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFaulty = 2;

enum class Command { kSimulate, kBounds, kLeakage, kAnalyze, kReport };

/// Fully resolved options of one invocation; echoed into every artifact.
struct RunConfig {
    Command command = Command::kSimulate;
    std::uint64_t seed = 0;
    std::string output_path;
    // simulate
    std::optional<NoiseConfig> noise;
    std::uint64_t shots = 10000;
    std::uint64_t jobs = 10;
    std::uint64_t reps = 10;
    std::string device = "synthetic";
    std::int64_t qubit = 0;
    std::string dataset_out;
    // bounds
    int restarts = 64;
    // leakage
    PulseParams pulse;
    // analyze / report
    std::vector<std::string> inputs;
    double threshold_sigma = kDefaultThresholdSigma;
};

/// Parses argv (argv[0] is the program name) and runs the selected command.
/// Artifacts go to config.output_path when set, otherwise to `out`; diagnostics go to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Runs an already parsed configuration. Throws ValidationError / NumericalError
/// and std::runtime_error for I/O failures.
int execute(const RunConfig &config, std::ostream &out);

}  // namespace dimwit::cli

#endif
