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

#include <cstdio>
#include <filesystem>

#include "bss/io.hpp"
#include "test_util.hpp"

using namespace bss;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const char* name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

}  // namespace

TEST_CASE("instance json round trip is lossless") {
    Instance inst = testutil::random_instance(7, 31);
    nlohmann::json j = instance_to_json(inst);
    Instance back = instance_from_json(j);
    CHECK(instance_to_json(back) == j);
    CHECK(back.bts.size() == inst.bts.size());
    for (size_t i = 0; i < inst.bts.size(); ++i) {
        CHECK(back.bts[i].traffic_erl == inst.bts[i].traffic_erl);
        CHECK(back.bts[i].site.x == inst.bts[i].site.x);
    }
    CHECK(back.capacity_table.entries.size() == inst.capacity_table.entries.size());
}

TEST_CASE("instance file round trip") {
    TempFile f("bss_io_test_instance.json");
    Instance inst = testutil::random_instance(5, 8);
    save_instance(inst, f.path.string());
    Instance back = load_instance(f.path.string());
    CHECK(instance_to_json(back) == instance_to_json(inst));
}

TEST_CASE("solution json round trip") {
    Instance inst = testutil::random_instance(4, 12);
    std::map<int, int> assignment;
    for (const auto& b : inst.bts) assignment[b.site.id] = 0;
    Solution sol = complete_assignment(inst, assignment);

    nlohmann::json j = solution_to_json(inst, sol);
    CHECK(j.at("breakdown").at("total").get<double>() ==
          doctest::Approx(sol.objective).epsilon(1e-9));
    Solution back = solution_from_json(j);
    CHECK(back.assignment == sol.assignment);
    CHECK(back.objective == sol.objective);
    REQUIRE(back.bsc_config.size() == sol.bsc_config.size());
    for (const auto& [id, cfg] : sol.bsc_config) {
        CHECK(back.bsc_config.at(id).lines == cfg.lines);
        CHECK(back.bsc_config.at(id).model == cfg.model);
    }
}

TEST_CASE("format tag is enforced") {
    CHECK_THROWS_AS(instance_from_json(nlohmann::json{{"format", "other/9"}}), FormatError);
    CHECK_THROWS_AS(solution_from_json(nlohmann::json::object()), FormatError);
    nlohmann::json j = instance_to_json(testutil::random_instance(3, 1));
    j.erase("rates");
    CHECK_THROWS_AS(instance_from_json(j), FormatError);
}

TEST_CASE("missing files raise FormatError") {
    CHECK_THROWS_AS(load_instance("/nonexistent/bss.json"), FormatError);
}

TEST_CASE("serialization is byte-stable for a fixed seed") {
    Instance a = testutil::random_instance(6, 77);
    Instance b = testutil::random_instance(6, 77);
    CHECK(instance_to_json(a).dump(2) == instance_to_json(b).dump(2));
}
