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

#ifndef BSS_INSTANCE_GEN_HPP
#define BSS_INSTANCE_GEN_HPP

#include <cstdint>

#include "bss/model.hpp"

namespace bss {

struct GenParams {
    int n_bts = 10;
    double area_km = 100.0;
    double traffic_max_erl = 80.0;
    CostRates rates{1.0, 1.0};
    std::vector<BscModel> models = default_models();
    Gos gos{0.02};
    int max_lines = 40;
    std::uint64_t seed = 0;

    /// Small/medium/large catalog: 512, 2048 and 4096 Erl. The acquisition
    /// costs are conventions, not market data; override as needed.
    static std::vector<BscModel> default_models();
};

/// Seeded random instance: MSC and BTS sites uniform over the square, one
/// BSC candidate colocated with each BTS, traffic uniform on
/// [0, traffic_max_erl], one Abis E1 per BTS.
///
/// Draw order (fixed so instances reproduce across builds): mt19937_64
/// seeded with `seed`; MSC x then y; per BTS in id order x, y, traffic.
Instance generate(const GenParams& params);

}  // namespace bss

#endif  // BSS_INSTANCE_GEN_HPP
