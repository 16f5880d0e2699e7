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

#include "bss/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bss {

namespace {

constexpr double kImproveTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<double>> link_matrix(const Instance& inst) {
    std::vector<std::vector<double>> link(inst.bts.size(),
                                          std::vector<double>(inst.bsc.size()));
    for (size_t i = 0; i < inst.bts.size(); ++i)
        for (size_t j = 0; j < inst.bsc.size(); ++j)
            link[i][j] = link_cost(inst.bts[i], inst.bsc[j], inst.rates);
    return link;
}

double completion_cost(const Instance& inst, int j, double t) {
    auto c = cheapest_completion(inst, j, t);
    return c ? c->cost : kInf;
}

}  // namespace

Solution greedy_construct(const Instance& inst) {
    inst.validate();
    auto link = link_matrix(inst);
    int T = static_cast<int>(inst.bts.size());
    int B = static_cast<int>(inst.bsc.size());

    std::vector<int> order(static_cast<size_t>(T));
    for (int i = 0; i < T; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (inst.bts[a].traffic_erl != inst.bts[b].traffic_erl)
            return inst.bts[a].traffic_erl > inst.bts[b].traffic_erl;
        return inst.bts[a].site.id < inst.bts[b].site.id;
    });

    std::vector<double> traffic(static_cast<size_t>(B), 0.0);
    std::vector<double> comp(static_cast<size_t>(B), 0.0);
    std::map<int, int> assignment;
    for (int i : order) {
        double a = inst.bts[static_cast<size_t>(i)].traffic_erl;
        int best_j = -1;
        double best_delta = kInf;
        for (int j = 0; j < B; ++j) {
            double c = completion_cost(inst, j, traffic[static_cast<size_t>(j)] + a);
            if (!std::isfinite(c)) continue;
            double delta = link[static_cast<size_t>(i)][static_cast<size_t>(j)] + c -
                           comp[static_cast<size_t>(j)];
            if (delta < best_delta - kImproveTol ||
                (delta <= best_delta + kImproveTol && best_j >= 0 &&
                 inst.bsc[static_cast<size_t>(j)].site.id <
                     inst.bsc[static_cast<size_t>(best_j)].site.id)) {
                best_delta = delta;
                best_j = j;
            }
        }
        if (best_j < 0) {
            throw std::runtime_error("greedy construction could not place every BTS");
        }
        traffic[static_cast<size_t>(best_j)] += a;
        comp[static_cast<size_t>(best_j)] =
            completion_cost(inst, best_j, traffic[static_cast<size_t>(best_j)]);
        assignment[inst.bts[static_cast<size_t>(i)].site.id] =
            inst.bsc[static_cast<size_t>(best_j)].site.id;
    }
    return complete_assignment(inst, assignment);
}

Solution local_search(const Instance& inst, const Solution& start, int max_rounds) {
    inst.validate();
    if (!check_feasibility(inst, start).empty()) {
        throw std::invalid_argument("local search requires a feasible starting solution");
    }
    auto link = link_matrix(inst);
    int T = static_cast<int>(inst.bts.size());
    int B = static_cast<int>(inst.bsc.size());

    // positions sorted by id fix the scan order
    std::vector<int> bts_order(static_cast<size_t>(T)), bsc_order(static_cast<size_t>(B));
    for (int i = 0; i < T; ++i) bts_order[i] = i;
    for (int j = 0; j < B; ++j) bsc_order[j] = j;
    std::sort(bts_order.begin(), bts_order.end(), [&](int a, int b) {
        return inst.bts[a].site.id < inst.bts[b].site.id;
    });
    std::sort(bsc_order.begin(), bsc_order.end(), [&](int a, int b) {
        return inst.bsc[a].site.id < inst.bsc[b].site.id;
    });

    std::vector<int> assigned(static_cast<size_t>(T));
    for (int i = 0; i < T; ++i)
        assigned[i] = inst.bsc_pos(start.assignment.at(inst.bts[static_cast<size_t>(i)].site.id));

    std::vector<double> traffic(static_cast<size_t>(B), 0.0);
    std::vector<double> comp(static_cast<size_t>(B), 0.0);
    for (int i = 0; i < T; ++i)
        traffic[static_cast<size_t>(assigned[i])] += inst.bts[static_cast<size_t>(i)].traffic_erl;
    for (int j = 0; j < B; ++j) comp[j] = completion_cost(inst, j, traffic[static_cast<size_t>(j)]);

    auto move_to = [&](int i, int j_new) {
        int j_old = assigned[static_cast<size_t>(i)];
        double a = inst.bts[static_cast<size_t>(i)].traffic_erl;
        traffic[static_cast<size_t>(j_old)] -= a;
        traffic[static_cast<size_t>(j_new)] += a;
        comp[static_cast<size_t>(j_old)] =
            completion_cost(inst, j_old, traffic[static_cast<size_t>(j_old)]);
        comp[static_cast<size_t>(j_new)] =
            completion_cost(inst, j_new, traffic[static_cast<size_t>(j_new)]);
        assigned[static_cast<size_t>(i)] = j_new;
    };

    auto reassign_delta = [&](int i, int j_new) -> double {
        int j_old = assigned[static_cast<size_t>(i)];
        double a = inst.bts[static_cast<size_t>(i)].traffic_erl;
        double c_new = completion_cost(inst, j_new, traffic[static_cast<size_t>(j_new)] + a);
        if (!std::isfinite(c_new)) return kInf;
        double c_old = completion_cost(inst, j_old, traffic[static_cast<size_t>(j_old)] - a);
        return link[static_cast<size_t>(i)][static_cast<size_t>(j_new)] -
               link[static_cast<size_t>(i)][static_cast<size_t>(j_old)] +
               (c_new - comp[static_cast<size_t>(j_new)]) +
               (c_old - comp[static_cast<size_t>(j_old)]);
    };

    for (int round = 0; round < max_rounds; ++round) {
        bool improved = false;

        for (int i : bts_order) {
            for (int j : bsc_order) {
                if (j == assigned[static_cast<size_t>(i)]) continue;
                if (reassign_delta(i, j) < -kImproveTol) {
                    move_to(i, j);
                    improved = true;
                }
            }
        }

        for (size_t p = 0; p < bts_order.size(); ++p) {
            for (size_t q = p + 1; q < bts_order.size(); ++q) {
                int i1 = bts_order[p], i2 = bts_order[q];
                int j1 = assigned[static_cast<size_t>(i1)], j2 = assigned[static_cast<size_t>(i2)];
                if (j1 == j2) continue;
                double a1 = inst.bts[static_cast<size_t>(i1)].traffic_erl;
                double a2 = inst.bts[static_cast<size_t>(i2)].traffic_erl;
                double t1 = traffic[static_cast<size_t>(j1)] - a1 + a2;
                double t2 = traffic[static_cast<size_t>(j2)] - a2 + a1;
                double c1 = completion_cost(inst, j1, t1);
                double c2 = completion_cost(inst, j2, t2);
                if (!std::isfinite(c1) || !std::isfinite(c2)) continue;
                double delta = link[static_cast<size_t>(i1)][static_cast<size_t>(j2)] +
                               link[static_cast<size_t>(i2)][static_cast<size_t>(j1)] -
                               link[static_cast<size_t>(i1)][static_cast<size_t>(j1)] -
                               link[static_cast<size_t>(i2)][static_cast<size_t>(j2)] +
                               (c1 - comp[static_cast<size_t>(j1)]) +
                               (c2 - comp[static_cast<size_t>(j2)]);
                if (delta < -kImproveTol) {
                    move_to(i1, j2);
                    move_to(i2, j1);
                    improved = true;
                }
            }
        }

        if (!improved) break;
    }

    std::map<int, int> assignment;
    for (int i = 0; i < T; ++i)
        assignment[inst.bts[static_cast<size_t>(i)].site.id] =
            inst.bsc[static_cast<size_t>(assigned[i])].site.id;
    Solution out = complete_assignment(inst, assignment);
    if (out.objective > start.objective + kImproveTol) {
        throw std::logic_error("local search produced a worse solution than its start");
    }
    return out;
}

LagrangianResult lagrangian_lower_bound(const Instance& inst, int iterations,
                                        const SubgradientConfig& cfg) {
    inst.validate();
    if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");

    auto link = link_matrix(inst);
    int T = static_cast<int>(inst.bts.size());
    int B = static_cast<int>(inst.bsc.size());

    // lambda is indexed in ascending BTS-id order
    std::vector<int> bts_order(static_cast<size_t>(T)), bsc_order(static_cast<size_t>(B));
    for (int i = 0; i < T; ++i) bts_order[i] = i;
    for (int j = 0; j < B; ++j) bsc_order[j] = j;
    std::sort(bts_order.begin(), bts_order.end(), [&](int a, int b) {
        return inst.bts[a].site.id < inst.bts[b].site.id;
    });
    std::sort(bsc_order.begin(), bsc_order.end(), [&](int a, int b) {
        return inst.bsc[a].site.id < inst.bsc[b].site.id;
    });
    std::vector<int> lambda_idx(static_cast<size_t>(T));  // bts pos -> lambda slot
    for (int s = 0; s < T; ++s) lambda_idx[static_cast<size_t>(bts_order[s])] = s;

    std::vector<double> lambda(static_cast<size_t>(T), 0.0);

    LagrangianResult result;
    result.bound = -kInf;
    result.per_iteration.reserve(static_cast<size_t>(iterations));

    std::vector<double> fraction_sum(static_cast<size_t>(T));

    for (int k = 1; k <= iterations; ++k) {
        std::fill(fraction_sum.begin(), fraction_sum.end(), 0.0);
        double dual = 0.0;
        for (double l : lambda) dual += l;

        for (int j : bsc_order) {
            // reduced costs at this BSC; only negative ones can help
            double zero_gain = 0.0;
            struct Item {
                int bts;
                double reduced;
                double traffic;
            };
            std::vector<Item> items;
            for (int i = 0; i < T; ++i) {
                double r = link[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                           lambda[static_cast<size_t>(lambda_idx[static_cast<size_t>(i)])];
                if (r >= 0.0) continue;
                if (inst.bts[static_cast<size_t>(i)].traffic_erl <= 0.0) {
                    zero_gain += r;  // free to carry, always worth selecting
                } else {
                    items.push_back({i, r, inst.bts[static_cast<size_t>(i)].traffic_erl});
                }
            }
            std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
                return a.reduced / a.traffic < b.reduced / b.traffic;
            });
            std::vector<double> pre_traffic(items.size() + 1, 0.0);
            std::vector<double> pre_cost(items.size() + 1, 0.0);
            for (size_t s = 0; s < items.size(); ++s) {
                pre_traffic[s + 1] = pre_traffic[s] + items[s].traffic;
                pre_cost[s + 1] = pre_cost[s] + items[s].reduced;
            }
            auto knap = [&](double cap, size_t& full, double& frac) -> double {
                full = static_cast<size_t>(
                    std::upper_bound(pre_traffic.begin(), pre_traffic.end(), cap) -
                    pre_traffic.begin() - 1);
                double value = pre_cost[full];
                frac = 0.0;
                if (full < items.size()) {
                    frac = (cap - pre_traffic[full]) / items[full].traffic;
                    value += frac * items[full].reduced;
                }
                return value;
            };

            double dist = distance_km(inst.bsc[static_cast<size_t>(j)].site, inst.msc);
            double best = 0.0;  // staying closed costs nothing
            double best_cap = -1.0;
            for (const auto& entry : inst.capacity_table.entries) {
                if (entry.lines < 1) continue;
                double cm = dist * inst.rates.a_rate * entry.lines;
                for (const auto& m : inst.models) {
                    double cap = std::min(entry.capacity_erl, m.capacity_erl);
                    size_t full;
                    double frac;
                    double value = cm + m.cost + zero_gain + knap(cap, full, frac);
                    if (value < best) {
                        best = value;
                        best_cap = cap;
                    }
                }
            }
            dual += best;

            if (best_cap >= 0.0) {
                size_t full;
                double frac;
                knap(best_cap, full, frac);
                for (size_t s = 0; s < full; ++s)
                    fraction_sum[static_cast<size_t>(
                        lambda_idx[static_cast<size_t>(items[s].bts)])] += 1.0;
                if (full < items.size())
                    fraction_sum[static_cast<size_t>(
                        lambda_idx[static_cast<size_t>(items[full].bts)])] += frac;
                for (int i = 0; i < T; ++i) {
                    double r = link[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                               lambda[static_cast<size_t>(lambda_idx[static_cast<size_t>(i)])];
                    if (r < 0.0 && inst.bts[static_cast<size_t>(i)].traffic_erl <= 0.0)
                        fraction_sum[static_cast<size_t>(
                            lambda_idx[static_cast<size_t>(i)])] += 1.0;
                }
            }
        }

        result.per_iteration.push_back(dual);
        if (dual > result.bound) {
            result.bound = dual;
            result.multipliers.lambda = lambda;
        }

        double mu = cfg.rule == SubgradientConfig::StepRule::Harmonic ? cfg.mu0 / k : cfg.mu0;
        for (int s = 0; s < T; ++s) {
            double g = 1.0 - fraction_sum[static_cast<size_t>(s)];
            lambda[static_cast<size_t>(s)] += mu * g;
        }
    }
    return result;
}

}  // namespace bss
