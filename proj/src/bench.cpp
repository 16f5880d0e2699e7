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

#include "bss/bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bss/exact.hpp"
#include "bss/heuristic.hpp"

namespace bss {

ExpFit fit_exponential(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) {
        throw std::invalid_argument("exponential fit needs at least two points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        if (y <= 0.0) throw std::domain_error("exponential fit requires positive y values");
        double ly = std::log(y);
        sx += x;
        sy += ly;
        sxx += x * x;
        sxy += x * ly;
    }
    double n = static_cast<double>(points.size());
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("exponential fit needs distinct x values");
    double b = (n * sxy - sx * sy) / denom;
    double ln_a = (sy - b * sx) / n;
    return ExpFit{std::exp(ln_a), b};
}

std::string to_csv_row(const BenchRecord& r) {
    std::ostringstream os;
    os.precision(12);
    os << r.n_bts << ',' << r.variables << ',' << r.constraints << ',' << r.density << ','
       << r.avg_time_s << ',' << r.std_dev_s << ',' << r.avg_gap;
    return os.str();
}

std::vector<BenchRecord> run_scaling(const ScalingParams& params, std::ostream* csv) {
    if (params.reps < 1) throw std::invalid_argument("reps must be >= 1");
    if (params.mode != "exact" && params.mode != "greedy" && params.mode != "local" &&
        params.mode != "lagrange") {
        throw std::invalid_argument("unknown bench mode: " + params.mode);
    }

    using Clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;
    if (csv) {
        *csv << kBenchCsvHeader << '\n';
        csv->flush();
    }

    for (int size : params.sizes) {
        BenchRecord rec;
        rec.n_bts = size;

        std::vector<double> times;
        std::vector<double> gaps;
        for (int rep = 0; rep < params.reps; ++rep) {
            GenParams gp = params.gen;
            gp.n_bts = size;
            gp.seed = params.base_seed + 1000003ULL * static_cast<std::uint64_t>(size) +
                      static_cast<std::uint64_t>(rep);
            Instance inst = generate(gp);

            if (rep == 0) {
                FormulationStats stats = formulation_stats(inst);
                rec.variables = stats.variables;
                rec.constraints = stats.core_constraints;
                rec.density = stats.density;
            }

            auto t0 = Clock::now();
            double ub = 0.0, lb = 0.0;
            if (params.mode == "exact") {
                SolveLimits limits;
                limits.time_limit_s = params.time_limit_s;
                SolveReport rep2 = solve_exact(inst, limits);
                ub = rep2.solution.objective;
                lb = rep2.lower_bound;  // equals ub when proven; censored otherwise
            } else {
                Solution greedy = greedy_construct(inst);
                Solution best = params.mode == "greedy" ? greedy
                                                        : local_search(inst, greedy, 100);
                ub = best.objective;
                lb = lagrangian_lower_bound(inst, 200).bound;
            }
            times.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
            gaps.push_back(ub > 0.0 ? std::max(0.0, (ub - lb) / ub) : 0.0);
        }

        double mean = 0.0;
        for (double t : times) mean += t;
        mean /= static_cast<double>(times.size());
        double var = 0.0;
        for (double t : times) var += (t - mean) * (t - mean);
        var /= static_cast<double>(times.size());
        rec.avg_time_s = mean;
        rec.std_dev_s = std::sqrt(var);
        double gap = 0.0;
        for (double g : gaps) gap += g;
        rec.avg_gap = gap / static_cast<double>(gaps.size());

        records.push_back(rec);
        if (csv) {
            *csv << to_csv_row(rec) << '\n';
            csv->flush();
        }
    }
    return records;
}

}  // namespace bss
