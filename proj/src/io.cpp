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

#include "bss/io.hpp"

#include <fstream>

namespace bss {

namespace {

using nlohmann::json;

void require_format(const json& j) {
    if (!j.is_object() || j.value("format", "") != kFormatTag) {
        throw FormatError(std::string("expected a \"") + kFormatTag + "\" document");
    }
}

json site_to_json(const Site& s) {
    return json{{"id", s.id}, {"x", s.x}, {"y", s.y}};
}

Site site_from_json(const json& j) {
    return Site{j.at("id").get<int>(), j.at("x").get<double>(), j.at("y").get<double>()};
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
    return j;
}

void write_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace

json instance_to_json(const Instance& inst) {
    json j;
    j["format"] = kFormatTag;
    j["msc"] = site_to_json(inst.msc);
    j["bts"] = json::array();
    for (const auto& b : inst.bts) {
        json e = site_to_json(b.site);
        e["traffic_erl"] = b.traffic_erl;
        e["abis_lines"] = b.abis_lines;
        j["bts"].push_back(e);
    }
    j["bsc_sites"] = json::array();
    for (const auto& b : inst.bsc) j["bsc_sites"].push_back(site_to_json(b.site));
    j["models"] = json::array();
    for (const auto& m : inst.models) {
        j["models"].push_back(json{{"id", m.id}, {"capacity_erl", m.capacity_erl},
                                   {"cost", m.cost}});
    }
    j["capacity"] = json{
        {"gos", inst.capacity_table.gos.value},
        {"voice_ts_per_line", inst.capacity_table.schedule.voice_ts_per_line},
        {"sub_timeslots_per_ts", inst.capacity_table.schedule.sub_timeslots_per_ts},
        {"max_lines", static_cast<int>(inst.capacity_table.entries.size()) - 1},
    };
    j["rates"] = json{{"abis_rate", inst.rates.abis_rate}, {"a_rate", inst.rates.a_rate}};
    return j;
}

Instance instance_from_json(const json& j) {
    require_format(j);
    Instance inst;
    try {
        inst.msc = site_from_json(j.at("msc"));
        for (const auto& e : j.at("bts")) {
            BtsNode b;
            b.site = site_from_json(e);
            b.traffic_erl = e.at("traffic_erl").get<double>();
            b.abis_lines = e.value("abis_lines", 1);
            inst.bts.push_back(b);
        }
        for (const auto& e : j.at("bsc_sites")) inst.bsc.push_back({site_from_json(e)});
        for (const auto& e : j.at("models")) {
            inst.models.push_back({e.at("id").get<int>(), e.at("capacity_erl").get<double>(),
                                   e.at("cost").get<double>()});
        }
        const auto& cap = j.at("capacity");
        TimeslotSchedule schedule;
        schedule.voice_ts_per_line = cap.at("voice_ts_per_line").get<std::vector<int>>();
        schedule.sub_timeslots_per_ts = cap.value("sub_timeslots_per_ts", 4);
        inst.capacity_table =
            build_capacity_table(cap.at("max_lines").get<int>(), schedule,
                                 Gos(cap.at("gos").get<double>()));
        const auto& rates = j.at("rates");
        inst.rates = {rates.at("abis_rate").get<double>(), rates.at("a_rate").get<double>()};
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed instance document: ") + e.what());
    }
    inst.validate();
    return inst;
}

json solution_to_json(const Instance& inst, const Solution& sol, const json& report) {
    json j;
    j["format"] = kFormatTag;
    j["assignment"] = json::object();
    for (const auto& [bts_id, bsc_id] : sol.assignment)
        j["assignment"][std::to_string(bts_id)] = bsc_id;
    j["bsc_config"] = json::object();
    for (const auto& [bsc_id, cfg] : sol.bsc_config) {
        json e{{"lines", cfg.lines}};
        if (cfg.model)
            e["model"] = *cfg.model;
        else
            e["model"] = nullptr;
        j["bsc_config"][std::to_string(bsc_id)] = e;
    }
    j["objective"] = sol.objective;
    CostBreakdown bd = evaluate(inst, sol);
    j["breakdown"] = json{{"abis_cost", bd.abis_cost},
                          {"trunk_cost", bd.trunk_cost},
                          {"bsc_cost", bd.bsc_cost},
                          {"total", bd.total}};
    if (!report.empty()) j["report"] = report;
    return j;
}

Solution solution_from_json(const json& j) {
    require_format(j);
    Solution sol;
    try {
        for (const auto& [key, value] : j.at("assignment").items())
            sol.assignment[std::stoi(key)] = value.get<int>();
        for (const auto& [key, value] : j.at("bsc_config").items()) {
            BscConfig cfg;
            cfg.lines = value.at("lines").get<int>();
            if (!value.at("model").is_null()) cfg.model = value.at("model").get<int>();
            sol.bsc_config[std::stoi(key)] = cfg;
        }
        sol.objective = j.at("objective").get<double>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed solution document: ") + e.what());
    }
    return sol;
}

Instance load_instance(const std::string& path) { return instance_from_json(read_file(path)); }

void save_instance(const Instance& inst, const std::string& path) {
    write_file(instance_to_json(inst), path);
}

Solution load_solution(const std::string& path) { return solution_from_json(read_file(path)); }

void save_solution(const Instance& inst, const Solution& sol, const std::string& path,
                   const json& report) {
    write_file(solution_to_json(inst, sol, report), path);
}

}  // namespace bss
