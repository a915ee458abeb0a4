/*
   Copyright 2026 The waring-sigma Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WARING_SCAN_HPP
#define WARING_SCAN_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <waring/configuration.hpp>
#include <waring/sigma.hpp>

namespace waring {

struct Interval {
    unsigned lo = 1;
    unsigned hi = std::numeric_limits<unsigned>::max();

    friend bool operator==(const Interval &, const Interval &) = default;
};

enum class RPolicy {
    all,     // 1..s
    bounded, // r in the interval, capped at s
    // floor and ceil of ns / (C(n+d,d) - s)
    iarrobino,
};

enum class SPolicy {
    all,     // r..C(n+d,d)
    bounded, // s in the interval, capped at C(n+d,d)
    offsets, // s = n + k for each listed k
};

/// One block of tuples: every (n, d) in the two intervals, with r and s
/// expanded by their policies. Only tuples with 1 <= r <= s <= C(n+d,d)
/// are generated.
struct RangeSpec {
    Interval n{2, 2};
    Interval d{2, 2};
    RPolicy r_policy = RPolicy::all;
    Interval r;
    SPolicy s_policy = SPolicy::all;
    Interval s;
    std::vector<unsigned> s_offsets;

    friend bool operator==(const RangeSpec &, const RangeSpec &) = default;
};

std::vector<Tuple> expand(const RangeSpec &range);

/// Parses command-line range syntax: "all", "K" or "LO:HI"; r also accepts
/// "iarrobino" and s a comma list such as "n+2,n+3".
RangeSpec parse_range(std::string_view n, std::string_view d, std::string_view r, std::string_view s);

struct OutputSpec {
    std::string path;
    std::string format = "json";
};

struct ScanConfig {
    std::vector<RangeSpec> ranges;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> prime_seed;
    // Worker threads; 0 selects the number of hardware threads.
    unsigned parallelism = 0;
    Methods methods = Methods::eta;
    OutputSpec output;
    // Include per-tuple and total wall times in reports. Off by default so
    // reports are byte-identical across runs.
    bool timing = false;
};

/// Parses a TOML scan configuration. Throws ParameterError on bad input.
ScanConfig parse_scan_config(std::string_view toml_text);
ScanConfig load_scan_config(const std::string &path);

/// Named scan ranges:
///  - "search-small":  n=2 with 2<=d<=6, n=3 with 2<=d<=3, n=4,5 with d=2, all r, s
///  - "search-cubics": n=4, d=3, r<=14, s<=23 and n=5, d=3, r<=9, s<=34
///  - "iarrobino":     2<=n<=10, 2<=d<=5, s=n+2,n+3, r by the iarrobino policy
/// Throws ParameterError for an unknown name.
std::vector<RangeSpec> preset_ranges(std::string_view name);
std::vector<std::string> preset_names();

/// eta alone, promoted to both methods when n <= 3 and d <= 3.
Methods effective_methods(Methods requested, const Tuple &t);

struct TupleOutcome {
    Tuple tuple;
    std::optional<SigmaReport> report;
    std::string error;
};

struct ScanTotals {
    std::size_t tuples = 0;
    std::size_t proved = 0;
    std::size_t evidence = 0;
    std::size_t inconclusive = 0;
    std::size_t errors = 0;
};

struct ScanReport {
    ScanConfig config;
    // Sorted by tuple, duplicates across ranges removed.
    std::vector<TupleOutcome> results;
    std::vector<Tuple> deficient;
    ScanTotals totals;
    double wall_ms = 0.0;
};

/// Analyzes every tuple of the configured ranges. A failing tuple is recorded
/// with its error and the scan continues. `on_result` may be called from
/// worker threads, one call at a time.
ScanReport run_scan(const ScanConfig &config, const std::function<void(const TupleOutcome &)> &on_result = {});

inline constexpr int report_schema_version = 1;

std::string report_to_json(const SigmaReport &report, bool timing);
std::string grove_to_json(const GroveCertificate &cert);
std::string scan_to_json(const ScanReport &report);
std::string scan_to_csv(const ScanReport &report);

} // namespace waring

#endif
