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

#include <doctest.h>

#include <chrono>

#include "bss/exact.hpp"
#include "bss/heuristic.hpp"
#include "test_util.hpp"

using namespace bss;
using testutil::small_instance;

TEST_CASE("greedy solves the single-BTS case exactly") {
    Instance inst = small_instance({{{0, 5.0, 5.0}, 200.0, 1}}, {{{0, 2.0, 2.0}}});
    Solution greedy = greedy_construct(inst);
    SolveReport bf = solve_bruteforce(inst);
    CHECK(greedy.objective == bf.solution.objective);
}

TEST_CASE("sandwich: bound <= optimum <= local <= greedy") {
    for (int trial = 0; trial < 20; ++trial) {
        Instance inst = testutil::random_instance_trunc(2 + trial % 6, 2 + trial % 2,
                                                        8000 + trial);
        double optimum = solve_bruteforce(inst).solution.objective;
        Solution greedy = greedy_construct(inst);
        Solution local = local_search(inst, greedy, 50);
        LagrangianResult lr = lagrangian_lower_bound(inst, 60);

        CHECK(lr.bound <= optimum + 1e-6);
        CHECK(optimum <= local.objective + 1e-9);
        CHECK(local.objective <= greedy.objective + 1e-9);
        CHECK(check_feasibility(inst, greedy).empty());
        CHECK(check_feasibility(inst, local).empty());
        for (double l : lr.per_iteration) CHECK(l <= optimum + 1e-6);
    }
}

TEST_CASE("local search leaves an optimal start unchanged") {
    Instance inst = testutil::random_instance_trunc(5, 3, 123);
    Solution opt = solve_bruteforce(inst).solution;
    Solution after = local_search(inst, opt, 50);
    CHECK(after.objective == doctest::Approx(opt.objective).epsilon(1e-12));
}

TEST_CASE("local search rejects an infeasible start") {
    Instance inst = testutil::random_instance(4, 9);
    Solution bad;  // empty assignment
    CHECK_THROWS_AS(local_search(inst, bad, 10), std::invalid_argument);
}

TEST_CASE("zero multipliers give a zero bound under nonnegative costs") {
    Instance inst = testutil::random_instance(6, 14);
    LagrangianResult lr = lagrangian_lower_bound(inst, 1);
    REQUIRE(lr.per_iteration.size() == 1);
    CHECK(lr.per_iteration[0] == 0.0);
}

TEST_CASE("lagrangian closes the gap on the trivial topology") {
    // small cost scale keeps the dual optimum within reach of the
    // harmonic step sequence
    Instance inst = small_instance({{{0, 1.0, 0.0}, 100.0, 1}}, {{{0, 1.0, 1.0}}},
                                   {-1, 0.0, 0.0}, {1.0, 0.05});
    Instance scaled = inst;
    for (auto& m : scaled.models) m.cost *= 0.001;  // catalog in the same small scale
    double optimum = solve_bruteforce(scaled).solution.objective;
    LagrangianResult lr = lagrangian_lower_bound(scaled, 200);
    CHECK(lr.bound <= optimum + 1e-9);
    CHECK(lr.bound >= optimum * 0.99);
}

TEST_CASE("greedy handles a 200-BTS instance quickly") {
    Instance inst = testutil::random_instance(200, 4242);
    auto t0 = std::chrono::steady_clock::now();
    Solution sol = greedy_construct(inst);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(check_feasibility(inst, sol).empty());
    CHECK(elapsed < 10.0);
}

TEST_CASE("subgradient iterations are all valid bounds") {
    Instance inst = testutil::random_instance_trunc(5, 3, 555);
    double optimum = solve_bruteforce(inst).solution.objective;
    LagrangianResult lr = lagrangian_lower_bound(inst, 100);
    CHECK(lr.per_iteration.size() == 100);
    double best = -1e300;
    for (double l : lr.per_iteration) {
        CHECK(l <= optimum + 1e-6);
        best = std::max(best, l);
    }
    CHECK(lr.bound == best);
}
