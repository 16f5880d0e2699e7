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

#ifndef BSS_IO_HPP
#define BSS_IO_HPP

#include <string>

#include <json.hpp>

#include "bss/model.hpp"

namespace bss {

inline constexpr const char* kFormatTag = "bss-planner/1";

/// Thrown on malformed or wrongly versioned files.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

/// Solution with cost breakdown; `report` merges optional solver fields
/// (lower_bound, optimal, nodes_explored, ...) under a "report" key.
nlohmann::json solution_to_json(const Instance& inst, const Solution& sol,
                                const nlohmann::json& report = nlohmann::json::object());
Solution solution_from_json(const nlohmann::json& j);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);
Solution load_solution(const std::string& path);
void save_solution(const Instance& inst, const Solution& sol, const std::string& path,
                   const nlohmann::json& report = nlohmann::json::object());

}  // namespace bss

#endif  // BSS_IO_HPP
