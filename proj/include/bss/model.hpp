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

#ifndef BSS_MODEL_HPP
#define BSS_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bss/traffic.hpp"

namespace bss {

struct Site {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
};

double distance_km(const Site& a, const Site& b);

/// Demand node. abis_lines is the deterministic E1 count of its Abis link.
struct BtsNode {
    Site site;
    double traffic_erl = 0.0;
    int abis_lines = 1;
};

struct BscCandidate {
    Site site;
};

struct BscModel {
    int id = 0;
    double capacity_erl = 0.0;
    double cost = 0.0;  // acquisition, amortized to the analysis period
};

/// Money per km per E1 line per analysis period, for the two link families.
struct CostRates {
    double abis_rate = 1.0;
    double a_rate = 1.0;
};

struct Instance {
    Site msc;
    std::vector<BtsNode> bts;
    std::vector<BscCandidate> bsc;
    std::vector<BscModel> models;
    CapacityTable capacity_table;
    CostRates rates;

    /// Throws std::invalid_argument on structural defects and on instances
    /// that can never be completed (some demand above every model capacity).
    void validate() const;

    int bts_pos(int id) const;
    int bsc_pos(int id) const;
    int model_pos(int id) const;
};

/// Per-BSC sizing: capacity-table index plus chosen model (none when idle).
struct BscConfig {
    int lines = 0;
    std::optional<int> model;
};

struct Solution {
    std::map<int, int> assignment;       // BTS id -> BSC id
    std::map<int, BscConfig> bsc_config; // BSC id -> sizing
    double objective = 0.0;
};

struct CostBreakdown {
    double abis_cost = 0.0;
    double trunk_cost = 0.0;
    double bsc_cost = 0.0;
    double total = 0.0;
};

struct Violation {
    std::string code;
    std::string message;
};

struct FormulationStats {
    long variables = 0;
    long constraints = 0;       // assignment + capacity + model + the two single-selection families
    long core_constraints = 0;  // assignment + capacity + model only
    double density = 0.0;
};

/// Abis link cost: distance x rate x E1 count.
double link_cost(const BtsNode& bts, const BscCandidate& bsc, const CostRates& rates);

/// A-interface trunk cost for a given dimensioned line count.
double trunk_cost(const BscCandidate& bsc, const Site& msc, const CostRates& rates, int lines);

/// Cheapest (lines, model) pair covering `traffic_erl` at one BSC.
/// cost = trunk + model acquisition; excludes Abis links.
struct BscCompletion {
    int lines = 0;
    int model_pos = -1;  // index into Instance::models, -1 when traffic == 0
    double cost = 0.0;
};

/// std::nullopt when the traffic exceeds the capacity table or every model.
std::optional<BscCompletion> cheapest_completion(const Instance& inst, int bsc_pos,
                                                double traffic_erl);

/// Fills in the optimal per-BSC line counts and models for a fixed
/// assignment; throws std::runtime_error naming the BSC when some
/// accumulated traffic cannot be covered.
Solution complete_assignment(const Instance& inst, const std::map<int, int>& assignment);

/// Recomputes the three objective terms from scratch. Never judges feasibility.
CostBreakdown evaluate(const Instance& inst, const Solution& sol);

/// Empty iff the solution satisfies the assignment, capacity, model and
/// single-selection constraints. Violations are data, not errors.
std::vector<Violation> check_feasibility(const Instance& inst, const Solution& sol);

FormulationStats formulation_stats(const Instance& inst);

}  // namespace bss

#endif  // BSS_MODEL_HPP
