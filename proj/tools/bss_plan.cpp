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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bss/bench.hpp"
#include "bss/exact.hpp"
#include "bss/heuristic.hpp"
#include "bss/instance_gen.hpp"
#include "bss/io.hpp"

namespace {

// exit codes: 0 ok, 1 usage, 2 invalid input, 3 infeasible, 4 limit hit
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitLimit = 4;

std::vector<bss::BscModel> parse_models(const std::vector<std::string>& specs) {
    std::vector<bss::BscModel> models;
    for (const auto& spec : specs) {
        bss::BscModel m;
        char c1 = 0, c2 = 0;
        std::istringstream is(spec);
        if (!(is >> m.id >> c1 >> m.capacity_erl >> c2 >> m.cost) || c1 != ',' || c2 != ',') {
            throw bss::FormatError("bad --model spec (want id,capacity_erl,cost): " + spec);
        }
        models.push_back(m);
    }
    return models;
}

int run_generate(const bss::GenParams& params, const std::string& output) {
    bss::Instance inst = bss::generate(params);
    bss::save_instance(inst, output);
    std::cout << "wrote " << output << ": " << inst.bts.size() << " BTS, " << inst.bsc.size()
              << " BSC candidates, " << inst.capacity_table.entries.size()
              << " capacity levels\n";
    return 0;
}

int run_solve(const std::string& instance_path, const std::string& mode,
              const std::string& output, std::optional<double> time_limit,
              std::optional<long> node_limit, int iterations, int max_rounds) {
    bss::Instance inst = bss::load_instance(instance_path);

    nlohmann::json report;
    bss::Solution sol;
    double lower_bound = 0.0;
    bool have_bound = false;
    bool optimal = false;

    if (mode == "exact") {
        bss::SolveLimits limits;
        limits.time_limit_s = time_limit;
        limits.node_limit = node_limit;
        bss::SolveReport r = bss::solve_exact(inst, limits);
        sol = r.solution;
        lower_bound = r.lower_bound;
        have_bound = true;
        optimal = r.optimal;
        report["optimal"] = r.optimal;
        report["lower_bound"] = r.lower_bound;
        report["nodes_explored"] = r.nodes_explored;
        report["elapsed_s"] = r.elapsed_s;
    } else if (mode == "greedy") {
        sol = bss::greedy_construct(inst);
    } else if (mode == "local") {
        sol = bss::local_search(inst, bss::greedy_construct(inst), max_rounds);
    } else if (mode == "lagrange") {
        sol = bss::local_search(inst, bss::greedy_construct(inst), max_rounds);
        bss::LagrangianResult lr = bss::lagrangian_lower_bound(inst, iterations);
        lower_bound = lr.bound;
        have_bound = true;
        report["lower_bound"] = lr.bound;
        report["iterations"] = iterations;
    } else {
        throw bss::FormatError("unknown solve mode: " + mode);
    }

    std::cout << "objective " << sol.objective << '\n';
    if (have_bound) {
        double gap = sol.objective > 0.0 ? (sol.objective - lower_bound) / sol.objective : 0.0;
        std::cout << "bound " << lower_bound << '\n';
        std::cout << "gap " << gap << '\n';
    }
    if (!output.empty()) bss::save_solution(inst, sol, output, report);

    if (mode == "exact" && !optimal) return kExitLimit;
    return 0;
}

int run_evaluate(const std::string& instance_path, const std::string& solution_path) {
    bss::Instance inst = bss::load_instance(instance_path);
    bss::Solution sol = bss::load_solution(solution_path);
    bss::CostBreakdown bd = bss::evaluate(inst, sol);
    std::cout << "abis_cost " << bd.abis_cost << '\n'
              << "trunk_cost " << bd.trunk_cost << '\n'
              << "bsc_cost " << bd.bsc_cost << '\n'
              << "total " << bd.total << '\n';
    auto violations = bss::check_feasibility(inst, sol);
    for (const auto& v : violations) {
        std::cout << "violation [" << v.code << "] " << v.message << '\n';
    }
    std::cout << "violations " << violations.size() << '\n';
    return violations.empty() ? 0 : kExitInfeasible;
}

int run_bench(const bss::ScalingParams& params, const std::string& output) {
    if (output.empty()) {
        bss::run_scaling(params, &std::cout);
    } else {
        std::ofstream out(output);
        if (!out) throw bss::FormatError("cannot write " + output);
        bss::run_scaling(params, &out);
        std::cout << "wrote " << output << '\n';
    }
    return 0;
}

int run_fit(const std::string& csv_path, const std::string& x_col, const std::string& y_col) {
    std::ifstream in(csv_path);
    if (!in) throw bss::FormatError("cannot open " + csv_path);
    std::string header;
    if (!std::getline(in, header)) throw bss::FormatError(csv_path + ": empty file");

    std::vector<std::string> cols;
    std::istringstream hs(header);
    for (std::string c; std::getline(hs, c, ',');) cols.push_back(c);
    int xi = -1, yi = -1;
    for (size_t c = 0; c < cols.size(); ++c) {
        if (cols[c] == x_col) xi = static_cast<int>(c);
        if (cols[c] == y_col) yi = static_cast<int>(c);
    }
    if (xi < 0 || yi < 0) {
        throw bss::FormatError(csv_path + ": columns " + x_col + "," + y_col + " not found");
    }

    std::vector<std::pair<double, double>> points;
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::string> fields;
        for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
        points.emplace_back(std::stod(fields.at(static_cast<size_t>(xi))),
                            std::stod(fields.at(static_cast<size_t>(yi))));
    }
    bss::ExpFit fit = bss::fit_exponential(points);
    std::cout.precision(12);
    std::cout << "a " << fit.coef_a << '\n' << "b " << fit.coef_b << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GSM BSS network design: BTS-to-BSC assignment, BSC sizing and trunk dimensioning"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a seeded random instance");
    bss::GenParams gp;
    std::vector<std::string> model_specs;
    std::string gen_output;
    double gen_gos = 0.02;
    gen->add_option("--bts", gp.n_bts, "number of BTS sites")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--seed", gp.seed, "generator seed");
    gen->add_option("--area", gp.area_km, "square side length in km")->check(CLI::PositiveNumber);
    gen->add_option("--traffic-max", gp.traffic_max_erl, "max BTS traffic in Erl")
        ->check(CLI::PositiveNumber);
    gen->add_option("--abis-rate", gp.rates.abis_rate, "Abis cost per km per E1");
    gen->add_option("--a-rate", gp.rates.a_rate, "A-interface cost per km per E1");
    gen->add_option("--gos", gen_gos, "target blocking probability");
    gen->add_option("--max-lines", gp.max_lines, "capacity table size minus the zero row")
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--model", model_specs, "BSC model as id,capacity_erl,cost (repeatable)");
    gen->add_option("-o,--output", gen_output, "instance file")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    std::string solve_instance, solve_mode = "exact", solve_output;
    std::optional<double> solve_time_limit;
    std::optional<long> solve_node_limit;
    int solve_iterations = 200;
    int solve_rounds = 100;
    solve->add_option("instance", solve_instance, "instance file")->required();
    solve->add_option("--mode", solve_mode, "exact | greedy | local | lagrange")
        ->check(CLI::IsMember({"exact", "greedy", "local", "lagrange"}));
    solve->add_option("--time-limit", solve_time_limit, "seconds (exact mode)");
    solve->add_option("--node-limit", solve_node_limit, "node cap (exact mode)");
    solve->add_option("--iterations", solve_iterations, "subgradient iterations");
    solve->add_option("--rounds", solve_rounds, "local search round cap");
    solve->add_option("-o,--output", solve_output, "solution file");

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "Recompute costs and check feasibility");
    std::string eval_instance, eval_solution;
    eval->add_option("instance", eval_instance, "instance file")->required();
    eval->add_option("solution", eval_solution, "solution file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Scaling experiment over instance sizes");
    bss::ScalingParams sp;
    sp.sizes = {5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
    std::string bench_output;
    bench->add_option("--sizes", sp.sizes, "BTS counts to run");
    bench->add_option("--reps", sp.reps, "instances per size")->check(CLI::PositiveNumber);
    bench->add_option("--seed", sp.base_seed, "base seed");
    bench->add_option("--mode", sp.mode, "exact | greedy | local | lagrange")
        ->check(CLI::IsMember({"exact", "greedy", "local", "lagrange"}));
    bench->add_option("--time-limit", sp.time_limit_s, "seconds per instance (exact mode)");
    bench->add_option("-o,--output", bench_output, "CSV file (stdout when omitted)");

    // fit
    auto* fit = app.add_subcommand("fit", "Exponential least-squares fit over CSV columns");
    std::string fit_csv, fit_x = "bts", fit_y = "avg_time_s";
    fit->add_option("csv", fit_csv, "CSV file")->required();
    fit->add_option("--x", fit_x, "x column name");
    fit->add_option("--y", fit_y, "y column name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) {
            gp.gos = bss::Gos(gen_gos);
            if (!model_specs.empty()) gp.models = parse_models(model_specs);
            return run_generate(gp, gen_output);
        }
        if (*solve) {
            return run_solve(solve_instance, solve_mode, solve_output, solve_time_limit,
                             solve_node_limit, solve_iterations, solve_rounds);
        }
        if (*eval) return run_evaluate(eval_instance, eval_solution);
        if (*bench) return run_bench(sp, bench_output);
        if (*fit) return run_fit(fit_csv, fit_x, fit_y);
    } catch (const std::runtime_error& e) {
        // completion failures are infeasibility; everything else is bad input
        std::cerr << "error: " << e.what() << '\n';
        std::string what = e.what();
        bool infeasible = what.find("feasible") != std::string::npos ||
                          what.find("beyond the capacity") != std::string::npos;
        return infeasible ? kExitInfeasible : kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return 0;
}
