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

#ifndef BSS_TESTS_TEST_UTIL_HPP
#define BSS_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <vector>

#include "bss/instance_gen.hpp"
#include "bss/model.hpp"

namespace bss::testutil {

/// Direct evaluation of the truncated-Poisson form of the blocking
/// probability. Independent oracle for the recurrence; only valid while
/// a^n/n! stays in long double range (fine for n <= ~1000).
inline double erlang_b_direct(int n, double a) {
    if (n == 0) return 1.0;
    if (a == 0.0) return 0.0;
    long double term = 1.0L;  // a^i / i!
    long double sum = 1.0L;
    for (int i = 1; i <= n; ++i) {
        term *= static_cast<long double>(a) / i;
        sum += term;
    }
    return static_cast<double>(term / sum);
}

/// Hand-built instance: one MSC, explicit BTS/BSC geometry, default-ish
/// catalog, capacity table built for real.
inline Instance small_instance(std::vector<BtsNode> bts, std::vector<BscCandidate> bsc,
                               Site msc = {-1, 0.0, 0.0}, CostRates rates = {1.0, 1.0},
                               int max_lines = 40) {
    Instance inst;
    inst.msc = msc;
    inst.bts = std::move(bts);
    inst.bsc = std::move(bsc);
    inst.models = GenParams::default_models();
    inst.capacity_table =
        build_capacity_table(max_lines, TimeslotSchedule::uniform_default(max_lines), Gos(0.02));
    inst.rates = rates;
    inst.validate();
    return inst;
}

/// Seeded random instance with the generation defaults.
inline Instance random_instance(int n_bts, std::uint64_t seed) {
    GenParams p;
    p.n_bts = n_bts;
    p.seed = seed;
    return generate(p);
}

/// Random instance truncated to a smaller BSC candidate set, for the
/// brute-force-sized oracle experiments.
inline Instance random_instance_trunc(int n_bts, int n_bsc, std::uint64_t seed) {
    Instance inst = random_instance(n_bts, seed);
    if (static_cast<size_t>(n_bsc) < inst.bsc.size()) {
        inst.bsc.resize(static_cast<size_t>(n_bsc));
    }
    inst.validate();
    return inst;
}

}  // namespace bss::testutil

#endif  // BSS_TESTS_TEST_UTIL_HPP
