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

#include "bss/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bss/heuristic.hpp"

namespace bss {

namespace {

constexpr double kTieTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Assignment as BSC ids in BTS-id order, the representation the
/// lexicographic tie-break compares.
std::vector<int> lex_key(const Instance& inst, const std::map<int, int>& assignment) {
    std::vector<int> ids;
    ids.reserve(inst.bts.size());
    for (const auto& b : inst.bts) ids.push_back(b.site.id);
    std::sort(ids.begin(), ids.end());
    std::vector<int> key;
    key.reserve(ids.size());
    for (int id : ids) key.push_back(assignment.at(id));
    return key;
}

struct BnB {
    const Instance& inst;
    const SolveLimits& limits;
    Clock::time_point t0 = Clock::now();

    int T, B;
    std::vector<std::vector<double>> link;  // [bts_pos][bsc_pos]
    std::vector<int> order;                 // bts positions, decreasing traffic
    std::vector<std::vector<int>> children; // per depth, bsc positions by ascending link cost

    // Per BSC, the completion-cost staircase sampled at its breakpoints:
    // bp_t[j][k] is an achievable traffic level, bp_c[j][k] the cheapest
    // trunk+model cost covering it. The staircase is constant between
    // breakpoints, so these points carry the whole function.
    std::vector<std::vector<double>> bp_t, bp_c;
    std::vector<double> max_feas;  // largest completable traffic per BSC

    std::vector<double> suffix_traffic;  // total traffic of order[d..)

    // mutable search state
    std::vector<double> traffic;
    std::vector<double> comp_cost;
    std::vector<std::vector<double>> sig_scratch;  // per depth, per BSC
    double committed_link = 0.0;
    double sum_comp = 0.0;

    double best_obj = kInf;
    std::map<int, int> best_map;
    std::vector<int> best_key;

    long nodes = 0;
    bool aborted = false;
    double pending_lb = kInf;

    std::vector<int> current;  // bsc pos per depth

    explicit BnB(const Instance& i, const SolveLimits& l) : inst(i), limits(l) {
        T = static_cast<int>(inst.bts.size());
        B = static_cast<int>(inst.bsc.size());

        link.assign(static_cast<size_t>(T), std::vector<double>(static_cast<size_t>(B)));
        for (int i2 = 0; i2 < T; ++i2)
            for (int j = 0; j < B; ++j)
                link[i2][j] = link_cost(inst.bts[i2], inst.bsc[j], inst.rates);

        // Completion cost as a function of BSC traffic changes value only
        // where the line capacity table or the model catalog has a
        // threshold; sample it there once per BSC.
        double model_max = 0.0;
        for (const auto& m : inst.models) model_max = std::max(model_max, m.capacity_erl);
        std::vector<double> thresholds;
        for (const auto& e : inst.capacity_table.entries)
            if (e.lines >= 1 && e.capacity_erl <= model_max) thresholds.push_back(e.capacity_erl);
        for (const auto& m : inst.models) thresholds.push_back(m.capacity_erl);
        std::sort(thresholds.begin(), thresholds.end());
        thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

        double table_max = inst.capacity_table.max_capacity_erl();
        bp_t.resize(static_cast<size_t>(B));
        bp_c.resize(static_cast<size_t>(B));
        max_feas.assign(static_cast<size_t>(B), 0.0);
        for (int j = 0; j < B; ++j) {
            for (double t : thresholds) {
                if (t > table_max) break;
                auto comp = cheapest_completion(inst, j, t);
                if (!comp) break;
                bp_t[j].push_back(t);
                bp_c[j].push_back(comp->cost);
                max_feas[j] = t;
            }
        }

        order.resize(static_cast<size_t>(T));
        for (int i2 = 0; i2 < T; ++i2) order[i2] = i2;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (inst.bts[a].traffic_erl != inst.bts[b].traffic_erl)
                return inst.bts[a].traffic_erl > inst.bts[b].traffic_erl;
            return inst.bts[a].site.id < inst.bts[b].site.id;
        });

        children.resize(static_cast<size_t>(T));
        for (int d = 0; d < T; ++d) {
            int i2 = order[d];
            auto& ch = children[d];
            ch.resize(static_cast<size_t>(B));
            for (int j = 0; j < B; ++j) ch[j] = j;
            std::sort(ch.begin(), ch.end(), [&](int a, int b) {
                if (link[i2][a] != link[i2][b]) return link[i2][a] < link[i2][b];
                return inst.bsc[a].site.id < inst.bsc[b].site.id;
            });
        }

        suffix_traffic.assign(static_cast<size_t>(T) + 1, 0.0);
        for (int d = T - 1; d >= 0; --d)
            suffix_traffic[d] =
                suffix_traffic[d + 1] + inst.bts[static_cast<size_t>(order[d])].traffic_erl;

        traffic.assign(static_cast<size_t>(B), 0.0);
        comp_cost.assign(static_cast<size_t>(B), 0.0);
        sig_scratch.assign(static_cast<size_t>(T) + 1,
                           std::vector<double>(static_cast<size_t>(B), 0.0));
        current.assign(static_cast<size_t>(T), -1);
    }

    /// Cheapest per-Erlang rate at which BSC j can absorb up to R more
    /// Erlangs from its current load: the minimum forward slope of the
    /// completion staircase over that window. Any set of additions summing
    /// to x <= R costs at least x * sigma beyond the counted completion.
    double sigma_window(int j, double R) const {
        if (R <= 0.0) return 0.0;
        double t = traffic[static_cast<size_t>(j)];
        double c = comp_cost[static_cast<size_t>(j)];
        const auto& ts = bp_t[static_cast<size_t>(j)];
        const auto& cs = bp_c[static_cast<size_t>(j)];
        double s = kInf;
        auto it = std::upper_bound(ts.begin(), ts.end(), t + 1e-12);
        for (size_t k = static_cast<size_t>(it - ts.begin()); k < ts.size(); ++k) {
            if (ts[k] < t + R) {
                s = std::min(s, std::max(cs[k] - c, 0.0) / (ts[k] - t));
            } else {
                s = std::min(s, std::max(cs[k] - c, 0.0) / R);
                break;
            }
        }
        return std::isfinite(s) ? s : 0.0;
    }

    /// Lower bound on the cost still to come for the BTS at order[d..).
    /// Returns infinity as soon as the running sum exceeds `budget`; the
    /// caller only needs the exact value when the node survives pruning.
    double remainder_bound(int d, double budget = kInf) {
        double R = suffix_traffic[static_cast<size_t>(d)];
        auto& sig = sig_scratch[static_cast<size_t>(d)];
        for (int j = 0; j < B; ++j) sig[static_cast<size_t>(j)] = sigma_window(j, R);
        double rest = 0.0;
        for (; d < T; ++d) {
            if (rest > budget) return kInf;
            int i2 = order[static_cast<size_t>(d)];
            double a = inst.bts[static_cast<size_t>(i2)].traffic_erl;
            double best = kInf;
            for (int j = 0; j < B; ++j) {
                if (traffic[static_cast<size_t>(j)] + a > max_feas[static_cast<size_t>(j)] + 1e-9)
                    continue;
                best = std::min(best, link[static_cast<size_t>(i2)][static_cast<size_t>(j)] +
                                          a * sig[static_cast<size_t>(j)]);
            }
            if (!std::isfinite(best)) return kInf;
            rest += best;
        }
        return rest;
    }

    bool limit_hit() {
        if (limits.node_limit && nodes >= *limits.node_limit) return true;
        if (limits.time_limit_s && (nodes & 1023) == 0 && seconds_since(t0) > *limits.time_limit_s)
            return true;
        return false;
    }

    void seed_incumbent(const Solution& sol) {
        // Recompute through complete_assignment so incumbent arithmetic
        // matches leaf arithmetic exactly.
        Solution completed = complete_assignment(inst, sol.assignment);
        if (completed.objective < best_obj) {
            best_obj = completed.objective;
            best_map = completed.assignment;
            best_key = lex_key(inst, completed.assignment);
        }
    }

    void offer_leaf() {
        std::map<int, int> assignment;
        for (int d = 0; d < T; ++d)
            assignment[inst.bts[order[d]].site.id] = inst.bsc[current[d]].site.id;
        Solution sol = complete_assignment(inst, assignment);
        if (sol.objective < best_obj - kTieTol) {
            best_obj = sol.objective;
            best_map = assignment;
            best_key = lex_key(inst, assignment);
        } else if (sol.objective <= best_obj + kTieTol) {
            auto key = lex_key(inst, assignment);
            if (best_key.empty() || key < best_key) {
                best_obj = std::min(best_obj, sol.objective);
                best_map = assignment;
                best_key = std::move(key);
            }
        }
    }

    void dfs(int depth, double parent_bound) {
        ++nodes;
        if (limit_hit()) {
            aborted = true;
            pending_lb = std::min(pending_lb, parent_bound);
            return;
        }
        if (depth == T) {
            offer_leaf();
            return;
        }
        int i2 = order[depth];
        double a = inst.bts[i2].traffic_erl;
        for (int j : children[depth]) {
            double t_new = traffic[j] + a;
            auto comp = cheapest_completion(inst, j, t_new);
            if (!comp) continue;  // overloads every model or the table

            double saved_comp = comp_cost[j];
            traffic[j] = t_new;
            comp_cost[j] = comp->cost;
            committed_link += link[i2][j];
            sum_comp += comp->cost - saved_comp;
            current[depth] = j;

            double rest =
                remainder_bound(depth + 1, best_obj + kTieTol - committed_link - sum_comp);
            // The bound need not grow monotonically edge by edge (the
            // staircase density can drop after a jump is paid for), so the
            // parent's bound is carried along explicitly.
            double bound = std::max(committed_link + sum_comp + rest, parent_bound);
            if (aborted) {
                // Past the abort point nothing is explored, but every
                // skipped subtree must still count toward the global
                // lower bound.
                pending_lb = std::min(pending_lb, bound);
            } else if (std::isfinite(bound) && bound <= best_obj + kTieTol) {
                dfs(depth + 1, bound);
            }

            current[depth] = -1;
            sum_comp -= comp->cost - saved_comp;
            committed_link -= link[i2][j];
            comp_cost[j] = saved_comp;
            traffic[j] = t_new - a;
        }
    }

    SolveReport run() {
        dfs(0, remainder_bound(0));

        SolveReport rep;
        rep.nodes_explored = nodes;
        rep.elapsed_s = seconds_since(t0);
        if (!std::isfinite(best_obj)) {
            throw std::runtime_error("instance admits no feasible assignment");
        }
        rep.solution = complete_assignment(inst, best_map);
        rep.optimal = !aborted;
        rep.lower_bound = aborted ? std::min(best_obj, pending_lb) : rep.solution.objective;
        return rep;
    }
};

}  // namespace

SolveReport solve_exact(const Instance& inst, const SolveLimits& limits,
                        const Solution* warm_start) {
    inst.validate();
    BnB search(inst, limits);
    if (warm_start) {
        search.seed_incumbent(*warm_start);
    } else {
        try {
            search.seed_incumbent(local_search(inst, greedy_construct(inst), 100));
        } catch (const std::exception&) {
            // no incumbent; the search still proves optimality on its own
        }
    }
    return search.run();
}

SolveReport solve_bruteforce(const Instance& inst, long enumeration_cap) {
    inst.validate();
    auto t0 = Clock::now();

    int T = static_cast<int>(inst.bts.size());
    int B = static_cast<int>(inst.bsc.size());

    double total = std::pow(static_cast<double>(B), static_cast<double>(T));
    if (total > static_cast<double>(enumeration_cap)) {
        throw std::invalid_argument("brute force refused: |B|^|T| exceeds the enumeration cap");
    }

    std::vector<int> bts_ids, bsc_ids;
    for (const auto& b : inst.bts) bts_ids.push_back(b.site.id);
    for (const auto& b : inst.bsc) bsc_ids.push_back(b.site.id);
    std::sort(bts_ids.begin(), bts_ids.end());
    std::sort(bsc_ids.begin(), bsc_ids.end());

    SolveReport rep;
    double best_obj = kInf;
    std::map<int, int> best_map;

    std::vector<int> digits(static_cast<size_t>(T), 0);
    long count = 0;
    bool done = false;
    while (!done) {
        ++count;
        std::map<int, int> assignment;
        for (int d = 0; d < T; ++d) assignment[bts_ids[d]] = bsc_ids[digits[d]];
        try {
            Solution sol = complete_assignment(inst, assignment);
            // Enumeration runs in lexicographic order, so keeping the first
            // solution within tolerance of the minimum realizes the tie-break.
            if (sol.objective < best_obj - kTieTol) {
                best_obj = sol.objective;
                best_map = assignment;
            }
        } catch (const std::runtime_error&) {
            // assignment overloads some BSC; not a candidate
        }

        int d = T - 1;
        while (d >= 0) {
            if (++digits[d] < B) break;
            digits[d] = 0;
            --d;
        }
        done = d < 0;
    }

    if (!std::isfinite(best_obj)) {
        throw std::runtime_error("instance admits no feasible assignment");
    }
    rep.solution = complete_assignment(inst, best_map);
    rep.lower_bound = rep.solution.objective;
    rep.optimal = true;
    rep.nodes_explored = count;
    rep.elapsed_s = seconds_since(t0);
    return rep;
}

double root_lower_bound(const Instance& inst) {
    double sum = 0.0;
    for (const auto& b : inst.bts) {
        double best = kInf;
        for (const auto& c : inst.bsc) best = std::min(best, link_cost(b, c, inst.rates));
        sum += best;
    }
    return sum;
}

}  // namespace bss
