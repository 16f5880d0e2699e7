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

#include "bss/instance_gen.hpp"
#include "bss/io.hpp"

using namespace bss;

TEST_CASE("identical seeds give identical instances") {
    GenParams p;
    p.n_bts = 5;
    p.seed = 42;
    Instance a = generate(p);
    Instance b = generate(p);
    CHECK(instance_to_json(a) == instance_to_json(b));
}

TEST_CASE("distinct seeds give distinct instances") {
    GenParams p;
    p.n_bts = 5;
    p.seed = 1;
    Instance a = generate(p);
    p.seed = 2;
    Instance b = generate(p);
    CHECK(instance_to_json(a) != instance_to_json(b));
}

TEST_CASE("defaults match the experiment protocol") {
    GenParams p;
    p.n_bts = 50;
    p.seed = 7;
    Instance inst = generate(p);
    CHECK(inst.bts.size() == 50);
    CHECK(inst.bsc.size() == 50);
    CHECK(inst.capacity_table.entries.size() == 41);
    CHECK(inst.models.size() == 3);
    for (size_t i = 0; i < inst.bts.size(); ++i) {
        // candidate colocated with its BTS
        CHECK(inst.bsc[i].site.x == inst.bts[i].site.x);
        CHECK(inst.bsc[i].site.y == inst.bts[i].site.y);
        CHECK(inst.bts[i].abis_lines == 1);
    }
}

TEST_CASE("coordinates and traffic stay in range") {
    GenParams p;
    p.n_bts = 40;
    p.seed = 9;
    Instance inst = generate(p);
    CHECK(inst.msc.x >= 0.0);
    CHECK(inst.msc.x <= p.area_km);
    CHECK(inst.msc.y >= 0.0);
    CHECK(inst.msc.y <= p.area_km);
    for (const auto& b : inst.bts) {
        CHECK(b.site.x >= 0.0);
        CHECK(b.site.x <= p.area_km);
        CHECK(b.site.y >= 0.0);
        CHECK(b.site.y <= p.area_km);
        CHECK(b.traffic_erl >= 0.0);
        CHECK(b.traffic_erl <= p.traffic_max_erl);
    }
    CHECK_NOTHROW(inst.validate());
}

TEST_CASE("bad parameters are rejected") {
    GenParams p;
    p.n_bts = 0;
    CHECK_THROWS_AS(generate(p), std::invalid_argument);
    p.n_bts = 3;
    p.traffic_max_erl = 0.0;
    CHECK_THROWS_AS(generate(p), std::invalid_argument);
}
