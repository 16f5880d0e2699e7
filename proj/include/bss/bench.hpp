/*
 * Copyright 2026 The bss-planner authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BSS_BENCH_HPP
#define BSS_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bss/instance_gen.hpp"

namespace bss {

inline constexpr const char* kBenchCsvHeader =
    "bts,variables,constraints,density,avg_time_s,std_dev_s,avg_gap";

/// One row of the scaling experiment. `constraints` counts the assignment,
/// trunk-capacity and model rows (3 per site when |B| = |T|).
struct BenchRecord {
    int n_bts = 0;
    long variables = 0;
    long constraints = 0;
    double density = 0.0;
    double avg_time_s = 0.0;
    double std_dev_s = 0.0;
    double avg_gap = 0.0;
};

/// y = coef_a * exp(coef_b * x)
struct ExpFit {
    double coef_a = 0.0;
    double coef_b = 0.0;
};

/// Least squares of ln y = ln a + b x. Needs >= 2 points with y > 0.
ExpFit fit_exponential(const std::vector<std::pair<double, double>>& points);

struct ScalingParams {
    std::vector<int> sizes;
    int reps = 20;
    std::uint64_t base_seed = 1;
    std::string mode = "exact";  // exact | greedy | local | lagrange
    std::optional<double> time_limit_s = 300.0;
    GenParams gen;  // n_bts and seed are overridden per run
};

/// Generates reps seeded instances per size, solves them in the requested
/// mode and aggregates wall time and optimality gap. Rows are streamed to
/// `csv` (header first) as they complete. Instance seeds are
/// base_seed + 1000003 * size + rep.
std::vector<BenchRecord> run_scaling(const ScalingParams& params, std::ostream* csv = nullptr);

std::string to_csv_row(const BenchRecord& r);

}  // namespace bss

#endif  // BSS_BENCH_HPP
