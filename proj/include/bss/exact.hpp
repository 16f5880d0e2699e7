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

#ifndef BSS_EXACT_HPP
#define BSS_EXACT_HPP

#include <optional>

#include "bss/model.hpp"

namespace bss {

struct SolveLimits {
    std::optional<double> time_limit_s;
    std::optional<long> node_limit;
};

struct SolveReport {
    Solution solution;
    double lower_bound = 0.0;
    bool optimal = false;
    long nodes_explored = 0;
    double elapsed_s = 0.0;
};

/// Depth-first branch-and-bound over the assignment variables. BTS are
/// branched in decreasing-traffic order, children in ascending link cost;
/// per-BSC line counts and models are completed optimally at the leaves.
/// Among equal-objective optima the assignment that is lexicographically
/// smallest by BTS id is returned. With no limits the result is proven
/// optimal; otherwise the best incumbent and a valid global lower bound
/// are reported.
SolveReport solve_exact(const Instance& inst, const SolveLimits& limits = {},
                        const Solution* warm_start = nullptr);

/// Enumerates every total assignment. Independent of the branch-and-bound
/// path; same cost arithmetic and tie-break.
SolveReport solve_bruteforce(const Instance& inst, long enumeration_cap = 10'000'000);

/// Sum over BTS of the cheapest link cost; trunk and model terms bounded
/// below by zero.
double root_lower_bound(const Instance& inst);

}  // namespace bss

#endif  // BSS_EXACT_HPP
