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

#ifndef BSS_HEURISTIC_HPP
#define BSS_HEURISTIC_HPP

#include <optional>

#include "bss/model.hpp"

namespace bss {

/// Dual multipliers for the relaxed one-BSC-per-BTS constraints, one per BTS
/// in BTS-id order.
struct Multipliers {
    std::vector<double> lambda;
};

struct HeuristicReport {
    Solution solution;
    std::optional<double> lower_bound;
    long iterations = 0;
    double elapsed_s = 0.0;
};

struct SubgradientConfig {
    enum class StepRule { Harmonic, Constant };
    double mu0 = 1.0;
    StepRule rule = StepRule::Harmonic;
};

struct LagrangianResult {
    double bound = 0.0;
    Multipliers multipliers;            // iterate achieving the best bound
    std::vector<double> per_iteration;  // L(lambda_k), each a valid bound
};

/// Assigns BTS in decreasing-traffic order to the BSC with the smallest
/// marginal cost (link plus trunk/model step increase).
Solution greedy_construct(const Instance& inst);

/// First-improvement passes of single-BTS reassignment and pairwise swap,
/// re-completing line counts and models per move. Objective never increases.
Solution local_search(const Instance& inst, const Solution& start, int max_rounds);

/// Lagrangian dual of the assignment constraints, maximized by simple
/// subgradient. The per-BSC subproblem is solved over all (level, model)
/// pairs with the BTS selection relaxed to fractional, so every iterate is
/// a valid lower bound on the integer optimum; the best one is returned.
LagrangianResult lagrangian_lower_bound(const Instance& inst, int iterations,
                                        const SubgradientConfig& cfg = {});

}  // namespace bss

#endif  // BSS_HEURISTIC_HPP
