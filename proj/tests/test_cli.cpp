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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bss/exact.hpp"
#include "bss/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = BSS_PLAN_CLI;

int run(const std::string& args) {
    std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "bss_cli_test") {
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generate writes a loadable instance and is deterministic") {
    TempDir dir;
    std::string a = dir.file("a.json"), b = dir.file("b.json");
    REQUIRE(run("generate --bts 10 --seed 42 -o " + a) == 0);
    REQUIRE(run("generate --bts 10 --seed 42 -o " + b) == 0);
    CHECK(slurp(a) == slurp(b));

    bss::Instance inst = bss::load_instance(a);
    CHECK(inst.bts.size() == 10);

    REQUIRE(run("generate --bts 10 --seed 43 -o " + b) == 0);
    CHECK(slurp(a) != slurp(b));
}

TEST_CASE("generate rejects zero BTS with a usage error") {
    TempDir dir;
    CHECK(run("generate --bts 0 -o " + dir.file("x.json")) == 1);
}

TEST_CASE("solve exact matches the brute-force oracle") {
    TempDir dir;
    std::string inst_path = dir.file("inst.json"), sol_path = dir.file("sol.json");
    REQUIRE(run("generate --bts 5 --seed 7 -o " + inst_path) == 0);
    REQUIRE(run("solve " + inst_path + " --mode exact -o " + sol_path) == 0);

    bss::Instance inst = bss::load_instance(inst_path);
    bss::Solution sol = bss::load_solution(sol_path);
    bss::SolveReport oracle = bss::solve_bruteforce(inst);
    CHECK(sol.objective == oracle.solution.objective);
    CHECK(sol.assignment == oracle.solution.assignment);
}

TEST_CASE("solve determinism: identical flags, identical solution files") {
    TempDir dir;
    std::string inst_path = dir.file("inst.json");
    std::string s1 = dir.file("s1.json"), s2 = dir.file("s2.json");
    REQUIRE(run("generate --bts 6 --seed 99 -o " + inst_path) == 0);
    REQUIRE(run("solve " + inst_path + " -o " + s1) == 0);
    REQUIRE(run("solve " + inst_path + " -o " + s2) == 0);
    // Everything except the wall-clock field must be byte-identical.
    nlohmann::json d1, d2;
    std::ifstream(s1) >> d1;
    std::ifstream(s2) >> d2;
    d1["report"].erase("elapsed_s");
    d2["report"].erase("elapsed_s");
    CHECK(d1.dump(2) == d2.dump(2));
}

TEST_CASE("local never worse than greedy; lagrange bound below exact") {
    TempDir dir;
    std::string inst_path = dir.file("inst.json");
    REQUIRE(run("generate --bts 6 --seed 5 -o " + inst_path) == 0);

    std::string g = dir.file("g.json"), l = dir.file("l.json"), lg = dir.file("lg.json");
    REQUIRE(run("solve " + inst_path + " --mode greedy -o " + g) == 0);
    REQUIRE(run("solve " + inst_path + " --mode local -o " + l) == 0);
    REQUIRE(run("solve " + inst_path + " --mode lagrange -o " + lg) == 0);

    bss::Solution greedy = bss::load_solution(g);
    bss::Solution local = bss::load_solution(l);
    CHECK(local.objective <= greedy.objective + 1e-9);

    bss::Instance inst = bss::load_instance(inst_path);
    double optimum = bss::solve_exact(inst).solution.objective;
    nlohmann::json lg_doc;
    std::ifstream(lg) >> lg_doc;
    CHECK(lg_doc.at("report").at("lower_bound").get<double>() <= optimum + 1e-6);
}

TEST_CASE("evaluate accepts solver output and flags tampering") {
    TempDir dir;
    std::string inst_path = dir.file("inst.json"), sol_path = dir.file("sol.json");
    REQUIRE(run("generate --bts 5 --seed 1 -o " + inst_path) == 0);
    REQUIRE(run("solve " + inst_path + " -o " + sol_path) == 0);
    CHECK(run("evaluate " + inst_path + " " + sol_path) == 0);

    nlohmann::json doc;
    std::ifstream(sol_path) >> doc;

    SUBCASE("undersized trunk") {
        for (auto& [id, cfg] : doc.at("bsc_config").items()) {
            if (cfg.at("lines").get<int>() > 0) {
                cfg["lines"] = cfg.at("lines").get<int>() - 1;
                break;
            }
        }
        std::ofstream(sol_path) << doc;
        CHECK(run("evaluate " + inst_path + " " + sol_path) == 3);
    }

    SUBCASE("missing BTS") {
        doc.at("assignment").erase(doc.at("assignment").begin());
        std::ofstream(sol_path) << doc;
        CHECK(run("evaluate " + inst_path + " " + sol_path) == 3);
    }
}

TEST_CASE("corrupt instance yields exit 2") {
    TempDir dir;
    std::string bad = dir.file("bad.json");
    std::ofstream(bad) << "{\"format\": \"bss-planner/1\"}";
    CHECK(run("solve " + bad) == 2);
    CHECK(run("solve " + dir.file("missing.json")) == 2);
}

TEST_CASE("bench and fit round trip") {
    TempDir dir;
    std::string csv = dir.file("bench.csv");
    REQUIRE(run("bench --sizes 3 4 --reps 2 --seed 2 --mode greedy -o " + csv) == 0);
    std::string content = slurp(csv);
    CHECK(content.rfind("bts,variables,constraints,density,avg_time_s,std_dev_s,avg_gap\n", 0) ==
          0);

    // fit over a synthetic two-column file
    std::string pts = dir.file("pts.csv");
    {
        std::ofstream out(pts);
        out << "x,y\n";
        for (int x = 5; x <= 50; x += 5) out << x << ',' << 0.851 * std::exp(0.244 * x) << '\n';
    }
    CHECK(run("fit " + pts + " --x x --y y") == 0);
}

TEST_CASE("help exits cleanly") {
    CHECK(run("--help") == 0);
    CHECK(run("solve --help") == 0);
    CHECK(run("") == 1);  // a subcommand is required
}
