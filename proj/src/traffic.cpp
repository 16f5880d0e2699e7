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

#include "bss/traffic.hpp"

#include <algorithm>
#include <cmath>

namespace bss {

TimeslotSchedule TimeslotSchedule::uniform_default(int max_lines) {
    TimeslotSchedule s;
    s.voice_ts_per_line.reserve(static_cast<size_t>(std::max(max_lines, 0)));
    for (int i = 0; i < max_lines; ++i) {
        s.voice_ts_per_line.push_back(i == 0 ? 29 : 31);
    }
    return s;
}

long TimeslotSchedule::channels_up_to(int lines) const {
    long ts = 0;
    for (int i = 0; i < lines; ++i) {
        ts += voice_ts_per_line[static_cast<size_t>(i)];
    }
    return ts * sub_timeslots_per_ts;
}

void TimeslotSchedule::validate(int max_lines) const {
    if (sub_timeslots_per_ts < 1) {
        throw std::invalid_argument("sub_timeslots_per_ts must be >= 1");
    }
    if (static_cast<int>(voice_ts_per_line.size()) < max_lines) {
        throw std::invalid_argument("timeslot schedule shorter than requested line count");
    }
    for (int ts : voice_ts_per_line) {
        if (ts < 0 || ts > 31) {
            throw std::invalid_argument("voice timeslots per E1 must lie in [0, 31]");
        }
    }
}

int CapacityTable::min_lines_for(double traffic_erl) const {
    for (size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].capacity_erl >= traffic_erl) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

double erlang_b(int channels, double offered) {
    if (channels < 0) {
        throw std::domain_error("channel count must be nonnegative");
    }
    if (offered < 0.0) {
        throw std::domain_error("offered traffic must be nonnegative");
    }
    if (channels == 0) {
        return 1.0;
    }
    if (offered == 0.0) {
        return 0.0;
    }
    // E(0) = 1; E(k) = a E(k-1) / (k + a E(k-1)).
    double e = 1.0;
    for (int k = 1; k <= channels; ++k) {
        e = offered * e / (k + offered * e);
    }
    return e;
}

double offered_traffic(int channels, Gos gos) {
    if (channels < 0) {
        throw std::domain_error("channel count must be nonnegative");
    }
    if (channels == 0) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = static_cast<double>(channels);
    while (erlang_b(channels, hi) <= gos.value) {
        lo = hi;
        hi *= 2.0;
    }
    // Blocking is strictly increasing in offered traffic, so bisection is
    // safe. The lower bracket is returned: the largest traffic whose
    // blocking stays within the target, which keeps
    // required_channels(offered_traffic(n)) == n.
    while (hi - lo > 1e-6) {
        double mid = 0.5 * (lo + hi);
        if (erlang_b(channels, mid) <= gos.value) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

int required_channels(double offered, Gos gos) {
    if (offered < 0.0) {
        throw std::domain_error("offered traffic must be nonnegative");
    }
    if (offered == 0.0) {
        return 0;
    }
    double e = 1.0;
    int n = 0;
    while (e > gos.value) {
        ++n;
        e = offered * e / (n + offered * e);
    }
    return n;
}

CapacityTable build_capacity_table(int max_lines, const TimeslotSchedule& schedule, Gos gos) {
    if (max_lines < 0) {
        throw std::invalid_argument("max_lines must be nonnegative");
    }
    schedule.validate(max_lines);

    CapacityTable table;
    table.gos = gos;
    table.schedule = schedule;
    table.entries.reserve(static_cast<size_t>(max_lines) + 1);
    table.entries.push_back({0, 0, 0.0});
    for (int k = 1; k <= max_lines; ++k) {
        long channels = schedule.channels_up_to(k);
        double cap = channels > 0 ? offered_traffic(static_cast<int>(channels), gos) : 0.0;
        table.entries.push_back({k, channels, cap});
    }
    return table;
}

}  // namespace bss
