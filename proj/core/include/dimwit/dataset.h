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

#ifndef DIMWIT_DATASET_H
#define DIMWIT_DATASET_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dimwit/witness.h"

namespace dimwit {

/// Outcome-1 counts of one job, in kExperimentLabels order. Each count is summed
/// over the job's shots * reps_per_job trials of that experiment.
struct JobRecord {
    std::array<std::uint64_t, kNumExperiments> counts{};
    friend bool operator==(const JobRecord &, const JobRecord &) = default;
};

struct Dataset {
    std::string device;
    std::int64_t qubit = 0;
    std::uint64_t shots = 0;
    std::uint64_t reps_per_job = 1;
    std::vector<JobRecord> jobs;

    /// Trials of one experiment inside one job.
    std::uint64_t trials_per_job() const {
        return shots * reps_per_job;
    }
    /// N = jobs * shots * reps_per_job.
    std::uint64_t total_trials() const {
        return trials_per_job() * jobs.size();
    }
    /// Throws ValidationError with a path-qualified message.
    void validate() const;
    friend bool operator==(const Dataset &, const Dataset &) = default;
};

/// Parses and validates a dataset document:
///   {"device": str, "qubit": int, "shots": int, "reps_per_job": int,
///    "jobs": [{"counts": {"1:0": int, ..., "1:5": int, "2:0": int, ..., "2:4": int}}]}
/// A job may repeat "shots"; it must then equal the top-level value.
Dataset ingest(std::string_view json_text);

/// Serializes in the ingest format (2-space indent, fixed key order).
std::string emit(const Dataset &d);

/// Synthetic dataset: each job's count for experiment a is Binomial(shots * reps, t_a),
/// drawn from a generator seeded by derive_seed(seed, "stats.sample_counts", job * 11 + a).
Dataset sample_counts(const ProbTable &t,
                      std::uint64_t shots,
                      std::uint64_t jobs,
                      std::uint64_t reps,
                      std::uint64_t seed,
                      std::string device = "synthetic",
                      std::int64_t qubit = 0);

}  // namespace dimwit

#endif
