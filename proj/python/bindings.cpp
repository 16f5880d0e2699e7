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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bss/bench.hpp"
#include "bss/exact.hpp"
#include "bss/heuristic.hpp"
#include "bss/instance_gen.hpp"
#include "bss/io.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_bssplan, m) {
    m.doc() = "GSM BSS network design: Erlang-B dimensioning, exact and heuristic "
              "BTS-to-BSC assignment optimization";

    m.def("erlang_b", &bss::erlang_b, "channels"_a, "offered_erl"_a,
          "Blocking probability for n channels under the offered traffic.");
    m.def(
        "offered_traffic",
        [](int channels, double gos) { return bss::offered_traffic(channels, bss::Gos(gos)); },
        "channels"_a, "gos"_a = 0.02,
        "Traffic carriable by n channels at the target blocking probability.");
    m.def(
        "required_channels",
        [](double offered, double gos) { return bss::required_channels(offered, bss::Gos(gos)); },
        "offered_erl"_a, "gos"_a = 0.02);

    py::class_<bss::CapacityEntry>(m, "CapacityEntry")
        .def_readonly("lines", &bss::CapacityEntry::lines)
        .def_readonly("channels", &bss::CapacityEntry::channels)
        .def_readonly("capacity_erl", &bss::CapacityEntry::capacity_erl);
    py::class_<bss::CapacityTable>(m, "CapacityTable")
        .def_readonly("entries", &bss::CapacityTable::entries)
        .def("min_lines_for", &bss::CapacityTable::min_lines_for, "traffic_erl"_a);
    m.def(
        "build_capacity_table",
        [](int max_lines, std::vector<int> voice_ts, int sub_ts, double gos) {
            bss::TimeslotSchedule s;
            if (voice_ts.empty()) {
                s = bss::TimeslotSchedule::uniform_default(max_lines);
            } else {
                s.voice_ts_per_line = std::move(voice_ts);
            }
            s.sub_timeslots_per_ts = sub_ts;
            return bss::build_capacity_table(max_lines, s, bss::Gos(gos));
        },
        "max_lines"_a, "voice_ts_per_line"_a = std::vector<int>{}, "sub_timeslots_per_ts"_a = 4,
        "gos"_a = 0.02);

    py::class_<bss::Site>(m, "Site")
        .def_readonly("id", &bss::Site::id)
        .def_readonly("x", &bss::Site::x)
        .def_readonly("y", &bss::Site::y);
    py::class_<bss::BtsNode>(m, "BtsNode")
        .def_readonly("site", &bss::BtsNode::site)
        .def_readonly("traffic_erl", &bss::BtsNode::traffic_erl)
        .def_readonly("abis_lines", &bss::BtsNode::abis_lines);
    py::class_<bss::Instance>(m, "Instance")
        .def_readonly("msc", &bss::Instance::msc)
        .def_readonly("bts", &bss::Instance::bts)
        .def_readonly("capacity_table", &bss::Instance::capacity_table)
        .def("validate", &bss::Instance::validate)
        .def("__repr__", [](const bss::Instance& inst) {
            return "<Instance bts=" + std::to_string(inst.bts.size()) +
                   " bsc=" + std::to_string(inst.bsc.size()) + ">";
        });

    py::class_<bss::BscConfig>(m, "BscConfig")
        .def_readonly("lines", &bss::BscConfig::lines)
        .def_readonly("model", &bss::BscConfig::model);
    py::class_<bss::Solution>(m, "Solution")
        .def_readonly("assignment", &bss::Solution::assignment)
        .def_readonly("bsc_config", &bss::Solution::bsc_config)
        .def_readonly("objective", &bss::Solution::objective);
    py::class_<bss::CostBreakdown>(m, "CostBreakdown")
        .def_readonly("abis_cost", &bss::CostBreakdown::abis_cost)
        .def_readonly("trunk_cost", &bss::CostBreakdown::trunk_cost)
        .def_readonly("bsc_cost", &bss::CostBreakdown::bsc_cost)
        .def_readonly("total", &bss::CostBreakdown::total);

    m.def(
        "generate",
        [](int n_bts, std::uint64_t seed, double area_km, double traffic_max_erl,
           double abis_rate, double a_rate, double gos, int max_lines) {
            bss::GenParams p;
            p.n_bts = n_bts;
            p.seed = seed;
            p.area_km = area_km;
            p.traffic_max_erl = traffic_max_erl;
            p.rates = {abis_rate, a_rate};
            p.gos = bss::Gos(gos);
            p.max_lines = max_lines;
            return bss::generate(p);
        },
        "n_bts"_a, "seed"_a = 0, "area_km"_a = 100.0, "traffic_max_erl"_a = 80.0,
        "abis_rate"_a = 1.0, "a_rate"_a = 1.0, "gos"_a = 0.02, "max_lines"_a = 40);

    m.def("complete_assignment", &bss::complete_assignment, "instance"_a, "assignment"_a);
    m.def("evaluate", &bss::evaluate, "instance"_a, "solution"_a);
    m.def(
        "check_feasibility",
        [](const bss::Instance& inst, const bss::Solution& sol) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& v : bss::check_feasibility(inst, sol))
                out.emplace_back(v.code, v.message);
            return out;
        },
        "instance"_a, "solution"_a);

    py::class_<bss::SolveReport>(m, "SolveReport")
        .def_readonly("solution", &bss::SolveReport::solution)
        .def_readonly("lower_bound", &bss::SolveReport::lower_bound)
        .def_readonly("optimal", &bss::SolveReport::optimal)
        .def_readonly("nodes_explored", &bss::SolveReport::nodes_explored)
        .def_readonly("elapsed_s", &bss::SolveReport::elapsed_s);
    m.def(
        "solve_exact",
        [](const bss::Instance& inst, std::optional<double> time_limit,
           std::optional<long> node_limit) {
            bss::SolveLimits limits{time_limit, node_limit};
            return bss::solve_exact(inst, limits);
        },
        "instance"_a, "time_limit_s"_a = py::none(), "node_limit"_a = py::none());
    m.def("solve_bruteforce", &bss::solve_bruteforce, "instance"_a,
          "enumeration_cap"_a = 10'000'000L);
    m.def("root_lower_bound", &bss::root_lower_bound, "instance"_a);

    m.def("greedy_construct", &bss::greedy_construct, "instance"_a);
    m.def("local_search", &bss::local_search, "instance"_a, "start"_a, "max_rounds"_a = 100);
    m.def(
        "lagrangian_lower_bound",
        [](const bss::Instance& inst, int iterations, double mu0) {
            bss::SubgradientConfig cfg;
            cfg.mu0 = mu0;
            bss::LagrangianResult r = bss::lagrangian_lower_bound(inst, iterations, cfg);
            return py::make_tuple(r.bound, r.multipliers.lambda, r.per_iteration);
        },
        "instance"_a, "iterations"_a = 200, "mu0"_a = 1.0);

    m.def("fit_exponential", [](const std::vector<std::pair<double, double>>& pts) {
        bss::ExpFit f = bss::fit_exponential(pts);
        return py::make_tuple(f.coef_a, f.coef_b);
    });

    m.def("load_instance", &bss::load_instance, "path"_a);
    m.def("save_instance", &bss::save_instance, "instance"_a, "path"_a);
    m.def("load_solution", &bss::load_solution, "path"_a);
    m.def(
        "save_solution",
        [](const bss::Instance& inst, const bss::Solution& sol, const std::string& path) {
            bss::save_solution(inst, sol, path);
        },
        "instance"_a, "solution"_a, "path"_a);
}
