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

#include "bss/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bss {

double distance_km(const Site& a, const Site& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

namespace {

template <typename T, typename IdOf>
void require_unique_ids(const std::vector<T>& items, IdOf id_of, const char* what) {
    std::set<int> seen;
    for (const auto& item : items) {
        if (!seen.insert(id_of(item)).second) {
            std::ostringstream os;
            os << "duplicate " << what << " id " << id_of(item);
            throw std::invalid_argument(os.str());
        }
    }
}

}  // namespace

void Instance::validate() const {
    if (bts.empty()) throw std::invalid_argument("instance has no BTS");
    if (bsc.empty()) throw std::invalid_argument("instance has no BSC candidate");
    if (models.empty()) throw std::invalid_argument("instance has no BSC model");
    require_unique_ids(bts, [](const BtsNode& b) { return b.site.id; }, "BTS");
    require_unique_ids(bsc, [](const BscCandidate& b) { return b.site.id; }, "BSC");
    require_unique_ids(models, [](const BscModel& m) { return m.id; }, "model");

    double max_model_cap = 0.0;
    for (const auto& m : models) {
        if (m.capacity_erl <= 0.0) throw std::invalid_argument("model capacity must be positive");
        if (m.cost < 0.0) throw std::invalid_argument("model cost must be nonnegative");
        max_model_cap = std::max(max_model_cap, m.capacity_erl);
    }
    if (rates.abis_rate < 0.0 || rates.a_rate < 0.0) {
        throw std::invalid_argument("cost rates must be nonnegative");
    }
    if (capacity_table.entries.empty()) {
        throw std::invalid_argument("capacity table is empty");
    }
    if (capacity_table.max_capacity_erl() < max_model_cap) {
        throw std::invalid_argument(
            "capacity table does not reach the largest model capacity");
    }
    for (const auto& b : bts) {
        if (b.traffic_erl < 0.0) throw std::invalid_argument("BTS traffic must be nonnegative");
        if (b.abis_lines < 1) throw std::invalid_argument("BTS Abis line count must be >= 1");
        if (b.traffic_erl > max_model_cap) {
            std::ostringstream os;
            os << "BTS " << b.site.id << " traffic " << b.traffic_erl
               << " Erl exceeds every BSC model capacity";
            throw std::invalid_argument(os.str());
        }
    }
}

int Instance::bts_pos(int id) const {
    for (size_t i = 0; i < bts.size(); ++i)
        if (bts[i].site.id == id) return static_cast<int>(i);
    return -1;
}

int Instance::bsc_pos(int id) const {
    for (size_t i = 0; i < bsc.size(); ++i)
        if (bsc[i].site.id == id) return static_cast<int>(i);
    return -1;
}

int Instance::model_pos(int id) const {
    for (size_t i = 0; i < models.size(); ++i)
        if (models[i].id == id) return static_cast<int>(i);
    return -1;
}

double link_cost(const BtsNode& bts, const BscCandidate& bsc, const CostRates& rates) {
    return distance_km(bts.site, bsc.site) * rates.abis_rate * bts.abis_lines;
}

double trunk_cost(const BscCandidate& bsc, const Site& msc, const CostRates& rates, int lines) {
    return distance_km(bsc.site, msc) * rates.a_rate * lines;
}

std::optional<BscCompletion> cheapest_completion(const Instance& inst, int bsc_pos,
                                                double traffic_erl) {
    if (traffic_erl <= 0.0) {
        return BscCompletion{0, -1, 0.0};
    }
    int lines = inst.capacity_table.min_lines_for(traffic_erl);
    if (lines < 0) {
        return std::nullopt;
    }
    // Trunk cost is increasing in the line count, so the smallest feasible
    // table index is the cheapest.
    int best_model = -1;
    for (size_t w = 0; w < inst.models.size(); ++w) {
        const auto& m = inst.models[w];
        if (m.capacity_erl < traffic_erl) continue;
        if (best_model < 0 || m.cost < inst.models[static_cast<size_t>(best_model)].cost ||
            (m.cost == inst.models[static_cast<size_t>(best_model)].cost &&
             m.id < inst.models[static_cast<size_t>(best_model)].id)) {
            best_model = static_cast<int>(w);
        }
    }
    if (best_model < 0) {
        return std::nullopt;
    }
    double cost = trunk_cost(inst.bsc[static_cast<size_t>(bsc_pos)], inst.msc, inst.rates, lines) +
                  inst.models[static_cast<size_t>(best_model)].cost;
    return BscCompletion{lines, best_model, cost};
}

Solution complete_assignment(const Instance& inst, const std::map<int, int>& assignment) {
    if (assignment.size() != inst.bts.size()) {
        throw std::invalid_argument("assignment must cover every BTS exactly once");
    }

    std::vector<double> accumulated(inst.bsc.size(), 0.0);
    double abis = 0.0;
    for (const auto& [bts_id, bsc_id] : assignment) {
        int bi = inst.bts_pos(bts_id);
        int bj = inst.bsc_pos(bsc_id);
        if (bi < 0 || bj < 0) {
            throw std::invalid_argument("assignment references an unknown BTS or BSC id");
        }
        accumulated[static_cast<size_t>(bj)] += inst.bts[static_cast<size_t>(bi)].traffic_erl;
        abis += link_cost(inst.bts[static_cast<size_t>(bi)], inst.bsc[static_cast<size_t>(bj)],
                          inst.rates);
    }

    Solution sol;
    sol.assignment = assignment;
    double total = abis;
    for (size_t j = 0; j < inst.bsc.size(); ++j) {
        auto comp = cheapest_completion(inst, static_cast<int>(j), accumulated[j]);
        if (!comp) {
            std::ostringstream os;
            os << "BSC " << inst.bsc[j].site.id << " accumulated " << accumulated[j]
               << " Erl, beyond the capacity table and every model";
            throw std::runtime_error(os.str());
        }
        BscConfig cfg;
        cfg.lines = comp->lines;
        if (comp->model_pos >= 0) {
            cfg.model = inst.models[static_cast<size_t>(comp->model_pos)].id;
        }
        sol.bsc_config[inst.bsc[j].site.id] = cfg;
        total += comp->cost;
    }
    sol.objective = total;
    return sol;
}

CostBreakdown evaluate(const Instance& inst, const Solution& sol) {
    CostBreakdown out;
    for (const auto& [bts_id, bsc_id] : sol.assignment) {
        int bi = inst.bts_pos(bts_id);
        int bj = inst.bsc_pos(bsc_id);
        if (bi < 0 || bj < 0) continue;
        out.abis_cost += link_cost(inst.bts[static_cast<size_t>(bi)],
                                   inst.bsc[static_cast<size_t>(bj)], inst.rates);
    }
    for (const auto& [bsc_id, cfg] : sol.bsc_config) {
        int bj = inst.bsc_pos(bsc_id);
        if (bj < 0) continue;
        out.trunk_cost += trunk_cost(inst.bsc[static_cast<size_t>(bj)], inst.msc, inst.rates,
                                     cfg.lines);
        if (cfg.model) {
            int w = inst.model_pos(*cfg.model);
            if (w >= 0) out.bsc_cost += inst.models[static_cast<size_t>(w)].cost;
        }
    }
    out.total = out.abis_cost + out.trunk_cost + out.bsc_cost;
    return out;
}

std::vector<Violation> check_feasibility(const Instance& inst, const Solution& sol) {
    std::vector<Violation> out;
    auto add = [&out](std::string code, std::string msg) {
        out.push_back({std::move(code), std::move(msg)});
    };

    std::vector<double> accumulated(inst.bsc.size(), 0.0);
    std::vector<int> assigned_count(inst.bsc.size(), 0);
    for (const auto& b : inst.bts) {
        auto it = sol.assignment.find(b.site.id);
        if (it == sol.assignment.end()) {
            std::ostringstream os;
            os << "BTS " << b.site.id << " is not assigned to any BSC";
            add("assignment", os.str());
            continue;
        }
        int bj = inst.bsc_pos(it->second);
        if (bj < 0) {
            std::ostringstream os;
            os << "BTS " << b.site.id << " assigned to unknown BSC " << it->second;
            add("assignment", os.str());
            continue;
        }
        accumulated[static_cast<size_t>(bj)] += b.traffic_erl;
        ++assigned_count[static_cast<size_t>(bj)];
    }
    for (const auto& [bts_id, bsc_id] : sol.assignment) {
        if (inst.bts_pos(bts_id) < 0) {
            std::ostringstream os;
            os << "assignment names unknown BTS " << bts_id;
            add("assignment", os.str());
        }
    }

    for (size_t j = 0; j < inst.bsc.size(); ++j) {
        int bsc_id = inst.bsc[j].site.id;
        auto it = sol.bsc_config.find(bsc_id);
        BscConfig cfg = it == sol.bsc_config.end() ? BscConfig{} : it->second;

        if (cfg.lines < 0 || cfg.lines >= static_cast<int>(inst.capacity_table.entries.size())) {
            std::ostringstream os;
            os << "BSC " << bsc_id << " line level " << cfg.lines
               << " outside the capacity table";
            add("capacity_level", os.str());
            continue;
        }
        double f = inst.capacity_table.entries[static_cast<size_t>(cfg.lines)].capacity_erl;
        if (accumulated[j] > f + 1e-9) {
            std::ostringstream os;
            os << "BSC " << bsc_id << " carries " << accumulated[j] << " Erl over trunk capacity "
               << f;
            add("trunk_capacity", os.str());
        }
        if (cfg.model) {
            int w = inst.model_pos(*cfg.model);
            if (w < 0) {
                std::ostringstream os;
                os << "BSC " << bsc_id << " uses unknown model " << *cfg.model;
                add("model", os.str());
            } else if (accumulated[j] > inst.models[static_cast<size_t>(w)].capacity_erl + 1e-9) {
                std::ostringstream os;
                os << "BSC " << bsc_id << " carries " << accumulated[j]
                   << " Erl over model capacity "
                   << inst.models[static_cast<size_t>(w)].capacity_erl;
                add("model_capacity", os.str());
            }
        }

        bool open = assigned_count[j] > 0;
        if (open && (!cfg.model || cfg.lines < 1) && accumulated[j] > 0.0) {
            std::ostringstream os;
            os << "BSC " << bsc_id << " has assigned traffic but no model or no lines";
            add("single_selection", os.str());
        }
        if (!open && (cfg.model || cfg.lines != 0)) {
            std::ostringstream os;
            os << "idle BSC " << bsc_id << " must have no model and zero lines";
            add("single_selection", os.str());
        }
    }
    return out;
}

FormulationStats formulation_stats(const Instance& inst) {
    long T = static_cast<long>(inst.bts.size());
    long B = static_cast<long>(inst.bsc.size());
    long C = static_cast<long>(inst.capacity_table.entries.size());
    long W = static_cast<long>(inst.models.size());

    FormulationStats s;
    s.variables = T * B + B * C + B * W;
    s.core_constraints = T + 2 * B;
    s.constraints = s.core_constraints + 2 * B;
    // Nonzeros per constraint family: assignment rows touch the B link
    // variables of their BTS; each capacity row touches T links + C levels;
    // each model row touches T links + W models; the single-selection rows
    // touch their own level/model variables.
    long nonzeros = T * B + B * (T + C) + B * (T + W) + B * C + B * W;
    s.density = static_cast<double>(nonzeros) /
                (static_cast<double>(s.variables) * static_cast<double>(s.constraints));
    return s;
}

}  // namespace bss
