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

#ifndef BSS_TRAFFIC_HPP
#define BSS_TRAFFIC_HPP

#include <stdexcept>
#include <vector>

namespace bss {

/// Target call-blocking probability (grade of service), in (0, 1).
struct Gos {
    double value = 0.02;

    Gos() = default;
    explicit Gos(double v) : value(v) {
        if (!(v > 0.0 && v < 1.0)) {
            throw std::domain_error("GoS must lie strictly between 0 and 1");
        }
    }
};

/// Per-E1 voice-timeslot layout. Each voice timeslot carries
/// sub_timeslots_per_ts compressed voice channels.
struct TimeslotSchedule {
    std::vector<int> voice_ts_per_line;
    int sub_timeslots_per_ts = 4;

    /// Default layout: the first E1 reserves 2 of its 31 timeslots for
    /// signaling/data (29 voice), every further line carries all 31.
    static TimeslotSchedule uniform_default(int max_lines);

    /// Cumulative voice channels over lines 1..lines.
    long channels_up_to(int lines) const;

    void validate(int max_lines) const;
};

struct CapacityEntry {
    int lines = 0;
    long channels = 0;
    double capacity_erl = 0.0;
};

/// Carried traffic per E1 line count at a fixed GoS (the dimensioning table).
struct CapacityTable {
    Gos gos;
    TimeslotSchedule schedule;  // the layout the table was built from
    std::vector<CapacityEntry> entries;

    double max_capacity_erl() const {
        return entries.empty() ? 0.0 : entries.back().capacity_erl;
    }

    /// Smallest table index whose capacity covers `traffic_erl`, or -1 if
    /// even the largest entry is insufficient.
    int min_lines_for(double traffic_erl) const;
};

/// Blocking probability for `channels` servers under `offered` Erlangs,
/// blocked calls cleared. Computed with the stable inverse recurrence,
/// usable up to thousands of channels.
double erlang_b(int channels, double offered);

/// Offered traffic a with erlang_b(channels, a) == gos, to 1e-6 Erlang.
/// Returns 0 for channels == 0 by convention.
double offered_traffic(int channels, Gos gos);

/// Smallest channel count n with erlang_b(n, offered) <= gos.
int required_channels(double offered, Gos gos);

/// Table rows 0..max_lines; row k carries the traffic sustainable by the
/// cumulative voice channels of lines 1..k at the given GoS.
CapacityTable build_capacity_table(int max_lines, const TimeslotSchedule& schedule, Gos gos);

}  // namespace bss

#endif  // BSS_TRAFFIC_HPP
