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

#include "dimwit/dataset.h"

#include <limits>
#include <sstream>

#include "dimwit/error.h"
#include "dimwit/random.h"
#include "json.hpp"

namespace dimwit {

using nlohmann::json;

namespace {

std::string job_path(std::size_t job) {
    return "$.jobs[" + std::to_string(job) + "]";
}

const json &require(const json &obj, const char *key, const std::string &path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError(path + ": missing required field \"" + key + "\"");
    }
    return *it;
}

std::int64_t require_int(const json &obj, const char *key, const std::string &path) {
    const json &v = require(obj, key, path);
    if (!v.is_number_integer()) {
        throw ValidationError(path + "." + key + ": expected an integer");
    }
    return v.get<std::int64_t>();
}

std::uint64_t require_positive(const json &obj, const char *key, const std::string &path) {
    std::int64_t v = require_int(obj, key, path);
    if (v <= 0) {
        throw ValidationError(path + "." + key + ": must be positive, got " + std::to_string(v));
    }
    return static_cast<std::uint64_t>(v);
}

}  // namespace

void Dataset::validate() const {
    if (shots == 0) {
        throw ValidationError("$.shots: must be positive");
    }
    if (reps_per_job == 0) {
        throw ValidationError("$.reps_per_job: must be positive");
    }
    if (shots > std::numeric_limits<std::uint64_t>::max() / reps_per_job / std::max<std::size_t>(jobs.size(), 1)) {
        throw ValidationError("$: shots * reps_per_job * jobs overflows");
    }
    if (jobs.empty()) {
        throw ValidationError("$.jobs: at least one job is required");
    }
    std::uint64_t limit = trials_per_job();
    for (std::size_t j = 0; j < jobs.size(); j++) {
        for (std::size_t a = 0; a < kNumExperiments; a++) {
            if (jobs[j].counts[a] > limit) {
                std::ostringstream ss;
                ss << job_path(j) << ".counts[\"" << experiment_key(a) << "\"]: count " << jobs[j].counts[a]
                   << " exceeds shots * reps_per_job = " << limit;
                throw ValidationError(ss.str());
            }
        }
    }
}

Dataset ingest(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("$: expected a JSON object");
    }

    Dataset d;
    const json &device = require(doc, "device", "$");
    if (!device.is_string()) {
        throw ValidationError("$.device: expected a string");
    }
    d.device = device.get<std::string>();
    d.qubit = require_int(doc, "qubit", "$");
    d.shots = require_positive(doc, "shots", "$");
    d.reps_per_job = require_positive(doc, "reps_per_job", "$");

    const json &jobs = require(doc, "jobs", "$");
    if (!jobs.is_array()) {
        throw ValidationError("$.jobs: expected an array");
    }
    for (std::size_t j = 0; j < jobs.size(); j++) {
        std::string path = job_path(j);
        const json &job = jobs[j];
        if (!job.is_object()) {
            throw ValidationError(path + ": expected an object");
        }
        if (job.contains("shots")) {
            std::uint64_t job_shots = require_positive(job, "shots", path);
            if (job_shots != d.shots) {
                std::ostringstream ss;
                ss << path << ".shots: " << job_shots << " differs from $.shots = " << d.shots
                   << " (heterogeneous shots are not supported)";
                throw ValidationError(ss.str());
            }
        }
        const json &counts = require(job, "counts", path);
        if (!counts.is_object()) {
            throw ValidationError(path + ".counts: expected an object");
        }
        JobRecord record;
        std::array<bool, kNumExperiments> seen{};
        for (const auto &[key, value] : counts.items()) {
            std::size_t a = experiment_index(key);
            std::string count_path = path + ".counts[\"" + key + "\"]";
            if (a == kNumExperiments) {
                throw ValidationError(count_path + ": unknown experiment label");
            }
            if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
                throw ValidationError(count_path + ": expected a nonnegative integer");
            }
            record.counts[a] = value.get<std::uint64_t>();
            seen[a] = true;
        }
        for (std::size_t a = 0; a < kNumExperiments; a++) {
            if (!seen[a]) {
                throw ValidationError(path + ".counts: missing experiment \"" + experiment_key(a) + "\"");
            }
        }
        d.jobs.push_back(record);
    }
    d.validate();
    return d;
}

std::string emit(const Dataset &d) {
    d.validate();
    json doc = json::object();
    doc["device"] = d.device;
    doc["qubit"] = d.qubit;
    doc["shots"] = d.shots;
    doc["reps_per_job"] = d.reps_per_job;
    json jobs = json::array();
    for (const auto &job : d.jobs) {
        json counts = json::object();
        for (std::size_t a = 0; a < kNumExperiments; a++) {
            counts[experiment_key(a)] = job.counts[a];
        }
        jobs.push_back(json{{"counts", counts}});
    }
    doc["jobs"] = std::move(jobs);
    return doc.dump(2) + "\n";
}

Dataset sample_counts(const ProbTable &t,
                      std::uint64_t shots,
                      std::uint64_t jobs,
                      std::uint64_t reps,
                      std::uint64_t seed,
                      std::string device,
                      std::int64_t qubit) {
    t.validate();
    if (shots == 0 || jobs == 0 || reps == 0) {
        throw ValidationError("sample_counts: shots, jobs and reps must be positive");
    }
    Dataset d{std::move(device), qubit, shots, reps, {}};
    d.jobs.resize(jobs);
    std::uint64_t trials = shots * reps;
    for (std::uint64_t j = 0; j < jobs; j++) {
        for (std::size_t a = 0; a < kNumExperiments; a++) {
            Rng rng(derive_seed(seed, seed_tag::kSampleCounts, j * kNumExperiments + a));
            d.jobs[j].counts[a] = sample_binomial(rng, trials, t.values[a]);
        }
    }
    d.validate();
    return d;
}

}  // namespace dimwit
