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

#ifndef DIMWIT_ANALYSIS_H
#define DIMWIT_ANALYSIS_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dimwit/dataset.h"
#include "dimwit/witness.h"

namespace dimwit {

inline constexpr double kDefaultThresholdSigma = 5.0;

/// Counts summed over jobs divided by the total trial count.
ProbTable pooled_table(const Dataset &d);
/// Frequencies of a single job.
ProbTable job_table(const Dataset &d, std::size_t job);

/// Mode (i): witness of the job-averaged probabilities, N = jobs * shots * reps.
WitnessReport witness_mode_i(const Dataset &d);

struct ModeIIReport {
    /// w: mean of per-job witnesses. sigma: rms of per-job analytic sigmas over sqrt(jobs).
    /// cofactors: mean of per-job cofactor matrices. n_trials: trials per job.
    WitnessReport report;
    /// Sample standard deviation of the per-job witnesses over sqrt(jobs); 0 for one job.
    double empirical_std_error = 0;
    std::vector<double> job_witnesses;
};

/// Mode (ii): average of witnesses computed job by job.
ModeIIReport witness_mode_ii(const Dataset &d);

struct SanityDifference {
    std::string label;  // e.g. "p10-p14"
    double value;
    double std_error;
};

/// Pooled p10-p14, p11-p15, p20-p24 with binomial standard errors; all vanish for ideal S gates.
std::array<SanityDifference, 3> sanity_differences(const Dataset &d);

/// One row of the summary table.
struct QubitReport {
    std::string device;
    std::int64_t qubit = 0;
    std::uint64_t n_trials = 0;
    WitnessReport mode_i;
    ModeIIReport mode_ii;
    std::array<SanityDifference, 3> sanity;
    double threshold_sigma = kDefaultThresholdSigma;
    /// |W^i| beyond threshold_sigma * sigma^i.
    bool faulty = false;
};

/// Applies the fault threshold to already computed pieces.
QubitReport make_qubit_report(std::string device,
                              std::int64_t qubit,
                              const WitnessReport &mode_i,
                              const ModeIIReport &mode_ii,
                              const std::array<SanityDifference, 3> &sanity,
                              double threshold_sigma = kDefaultThresholdSigma);

QubitReport report(const Dataset &d, double threshold_sigma = kDefaultThresholdSigma);

/// Significance |W| / sigma; infinite when sigma == 0 and W != 0.
double significance(double w, double sigma);

/// JSON object with the table columns plus "faulty".
std::string report_json(const QubitReport &r, int indent = 2);

/// Aligned plain-text table with a header line. Column order:
/// device, qubit, W_i, sigma_i, W_ii, sigma_ii, log10p_i, log10p_ii,
/// p10-p14, p11-p15, p20-p24, faulty.
std::string report_text(const std::vector<QubitReport> &rows);

}  // namespace dimwit

#endif
