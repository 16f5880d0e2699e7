# Copyright 2026 The bss-planner authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import _bssplan as bss


def test_erlang_b_values():
    assert bss.erlang_b(0, 5.0) == 1.0
    assert bss.erlang_b(1, 1.0) == pytest.approx(0.5)
    assert bss.erlang_b(2, 1.0) == pytest.approx(0.2)


def test_erlang_inversion():
    a = bss.offered_traffic(4096, gos=0.02)
    assert a == pytest.approx(4141.542, abs=0.01)
    # carried traffic at the blocking target
    assert 4057.0 < a * 0.98 < 4059.0
    assert bss.required_channels(1.0, gos=0.2) == 2


def test_capacity_table():
    table = bss.build_capacity_table(40)
    assert len(table.entries) == 41
    assert table.entries[0].capacity_erl == 0.0
    assert table.entries[1].channels == 116
    assert table.min_lines_for(0.0) == 0


def test_generate_and_solve_roundtrip():
    inst = bss.generate(n_bts=5, seed=42)
    assert len(inst.bts) == 5

    exact = bss.solve_exact(inst)
    brute = bss.solve_bruteforce(inst)
    assert exact.optimal
    assert exact.solution.objective == brute.solution.objective
    assert bss.check_feasibility(inst, exact.solution) == []


def test_heuristic_sandwich():
    inst = bss.generate(n_bts=6, seed=7)
    greedy = bss.greedy_construct(inst)
    local = bss.local_search(inst, greedy)
    bound, _lambda, per_iter = bss.lagrangian_lower_bound(inst, iterations=50)
    assert bound <= local.objective + 1e-6
    assert local.objective <= greedy.objective + 1e-9
    assert len(per_iter) == 50


def test_evaluate_breakdown():
    inst = bss.generate(n_bts=4, seed=3)
    sol = bss.greedy_construct(inst)
    bd = bss.evaluate(inst, sol)
    assert bd.total == pytest.approx(bd.abis_cost + bd.trunk_cost + bd.bsc_cost)
    assert bd.total == pytest.approx(sol.objective)


def test_instance_file_roundtrip(tmp_path):
    inst = bss.generate(n_bts=5, seed=11)
    path = str(tmp_path / "inst.json")
    bss.save_instance(inst, path)
    back = bss.load_instance(path)
    assert len(back.bts) == len(inst.bts)
    assert back.bts[0].traffic_erl == inst.bts[0].traffic_erl


def test_fit_exponential():
    pts = [(x, 0.851 * math.exp(0.244 * x)) for x in range(5, 55, 5)]
    a, b = bss.fit_exponential(pts)
    assert a == pytest.approx(0.851, abs=1e-6)
    assert b == pytest.approx(0.244, abs=1e-6)
