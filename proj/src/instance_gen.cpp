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

#include "bss/instance_gen.hpp"

#include <random>
#include <stdexcept>

namespace bss {

std::vector<BscModel> GenParams::default_models() {
    return {{0, 512.0, 1000.0}, {1, 2048.0, 3000.0}, {2, 4096.0, 5000.0}};
}

Instance generate(const GenParams& params) {
    if (params.n_bts < 1) throw std::invalid_argument("n_bts must be >= 1");
    if (params.traffic_max_erl <= 0.0) throw std::invalid_argument("traffic_max_erl must be > 0");
    if (params.area_km <= 0.0) throw std::invalid_argument("area_km must be > 0");

    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> coord(0.0, params.area_km);
    std::uniform_real_distribution<double> traffic(0.0, params.traffic_max_erl);

    Instance inst;
    inst.msc = Site{-1, coord(rng), coord(rng)};
    inst.bts.reserve(static_cast<size_t>(params.n_bts));
    inst.bsc.reserve(static_cast<size_t>(params.n_bts));
    for (int i = 0; i < params.n_bts; ++i) {
        double x = coord(rng);
        double y = coord(rng);
        double a = traffic(rng);
        inst.bts.push_back({Site{i, x, y}, a, 1});
        inst.bsc.push_back({Site{i, x, y}});  // candidate colocated with the BTS
    }
    inst.models = params.models;
    inst.capacity_table = build_capacity_table(
        params.max_lines, TimeslotSchedule::uniform_default(params.max_lines), params.gos);
    inst.rates = params.rates;
    inst.validate();
    return inst;
}

}  // namespace bss
