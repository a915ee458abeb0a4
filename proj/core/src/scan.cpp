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

#include <waring/scan.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>
#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include <waring/monomial.hpp>

namespace waring {

namespace {

using ordered_json = nlohmann::ordered_json;

unsigned parse_unsigned(std::string_view text, std::string_view what)
{
    unsigned v = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ParameterError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return v;
}

// "K" or "LO:HI".
Interval parse_interval(std::string_view text, std::string_view what)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        const auto v = parse_unsigned(text, what);
        if (v == 0) {
            throw ParameterError(std::string(what) + " must be at least 1");
        }
        return {v, v};
    }
    const Interval iv{parse_unsigned(text.substr(0, colon), what), parse_unsigned(text.substr(colon + 1), what)};
    if (iv.lo > iv.hi) {
        throw ParameterError("empty " + std::string(what) + " interval '" + std::string(text) + "'");
    }
    if (iv.lo == 0) {
        throw ParameterError(std::string(what) + " must be at least 1 in '" + std::string(text) + "'");
    }
    return iv;
}

void parse_r_policy(std::string_view text, RangeSpec &spec)
{
    if (text == "all") {
        spec.r_policy = RPolicy::all;
    } else if (text == "iarrobino") {
        spec.r_policy = RPolicy::iarrobino;
    } else {
        spec.r_policy = RPolicy::bounded;
        spec.r = parse_interval(text, "r");
    }
}

void parse_s_policy(std::string_view text, RangeSpec &spec)
{
    if (text == "all") {
        spec.s_policy = SPolicy::all;
        return;
    }
    if (text.starts_with("n+")) {
        spec.s_policy = SPolicy::offsets;
        spec.s_offsets.clear();
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto comma = std::min(text.find(',', pos), text.size());
            const auto item = text.substr(pos, comma - pos);
            if (!item.starts_with("n+")) {
                throw ParameterError("invalid s offset '" + std::string(item) + "'");
            }
            spec.s_offsets.push_back(parse_unsigned(item.substr(2), "s offset"));
            pos = comma + 1;
        }
        return;
    }
    spec.s_policy = SPolicy::bounded;
    spec.s = parse_interval(text, "s");
}

std::string interval_text(const Interval &iv)
{
    if (iv.lo == iv.hi) {
        return std::to_string(iv.lo);
    }
    return std::to_string(iv.lo) + ":" + std::to_string(iv.hi);
}

std::string r_text(const RangeSpec &spec)
{
    switch (spec.r_policy) {
    case RPolicy::all:
        return "all";
    case RPolicy::iarrobino:
        return "iarrobino";
    case RPolicy::bounded:
        break;
    }
    return interval_text(spec.r);
}

std::string s_text(const RangeSpec &spec)
{
    switch (spec.s_policy) {
    case SPolicy::all:
        return "all";
    case SPolicy::offsets: {
        std::string out;
        for (auto k : spec.s_offsets) {
            out += (out.empty() ? "n+" : ",n+") + std::to_string(k);
        }
        return out;
    }
    case SPolicy::bounded:
        break;
    }
    return interval_text(spec.s);
}

// A TOML range field: integer, [lo, hi] or a string in command-line syntax.
std::string toml_field_text(const toml::node_view<const toml::node> &node, std::string_view key)
{
    if (!node) {
        throw ParameterError("range is missing key '" + std::string(key) + "'");
    }
    if (auto v = node.value<std::int64_t>(); v && node.is_integer()) {
        if (*v < 0) {
            throw ParameterError("negative value for '" + std::string(key) + "'");
        }
        return std::to_string(*v);
    }
    if (node.is_string()) {
        return std::string(*node.value<std::string_view>());
    }
    if (const auto *arr = node.as_array(); arr != nullptr && arr->size() == 2) {
        const auto lo = (*arr)[0].value<std::int64_t>();
        const auto hi = (*arr)[1].value<std::int64_t>();
        if (lo && hi && *lo >= 0 && *hi >= 0) {
            return std::to_string(*lo) + ":" + std::to_string(*hi);
        }
    }
    throw ParameterError("invalid value for '" + std::string(key) + "'");
}

ordered_json tuple_json(const Tuple &t)
{
    return ordered_json::array({t.n, t.d, t.r, t.s});
}

template <typename T>
ordered_json optional_json(const std::optional<T> &v)
{
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json repetitions_json(const RepetitionRecord &rec)
{
    ordered_json j;
    j["values"] = rec.values;
    j["agree"] = rec.agree;
    j["primes"] = rec.primes;
    j["seeds"] = rec.seeds;
    j["configuration_resamples"] = rec.configuration_resamples;
    j["prime_resamples"] = rec.prime_resamples;
    return j;
}

ordered_json sigma_json(const SigmaReport &r, bool timing)
{
    ordered_json j;
    j["tuple"] = {{"n", r.tuple.n}, {"d", r.tuple.d}, {"r", r.tuple.r}, {"s", r.tuple.s}};
    j["N1"] = r.n1;
    j["N2"] = r.n2;
    j["expected_codim"] = r.expected_codim;
    j["dim_sigma"] = r.dim_sigma;
    j["deficiency"] = r.deficiency;
    j["eta_nullity"] = optional_json(r.eta_nullity);
    j["dim_sigma_eta"] = optional_json(r.dim_sigma_eta);
    j["dim_sigma_jacobian"] = optional_json(r.dim_sigma_jacobian);
    j["method_agreement"] = optional_json(r.method_agreement);
    j["certificate"] = std::string(to_string(r.certificate));
    j["primes"] = r.primes;
    j["seeds"] = r.seeds;
    j["boundary"] = r.boundary;
    j["eta_repetitions"] = r.eta_runs ? repetitions_json(*r.eta_runs) : ordered_json(nullptr);
    j["jacobian_repetitions"] = r.jacobian_runs ? repetitions_json(*r.jacobian_runs) : ordered_json(nullptr);
    if (timing) {
        j["elapsed"] = r.elapsed_ms;
    }
    return j;
}

ordered_json config_json(const ScanConfig &c)
{
    ordered_json j;
    j["seed"] = c.seed;
    j["prime_seed"] = optional_json(c.prime_seed);
    j["parallelism"] = c.parallelism;
    j["methods"] = std::string(to_string(c.methods));
    ordered_json ranges = ordered_json::array();
    for (const auto &r : c.ranges) {
        ranges.push_back({{"n", interval_text(r.n)}, {"d", interval_text(r.d)}, {"r", r_text(r)}, {"s", s_text(r)}});
    }
    j["ranges"] = std::move(ranges);
    j["output"] = {{"path", c.output.path}, {"format", c.output.format}};
    return j;
}

std::string csv_optional(const std::optional<std::int64_t> &v)
{
    return v ? std::to_string(*v) : std::string();
}

std::string csv_quoted(std::string_view text)
{
    std::string out = "\"";
    for (const char c : text) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

} // namespace

std::vector<Tuple> expand(const RangeSpec &range)
{
    std::vector<Tuple> out;
    for (unsigned n = std::max(range.n.lo, 1U); n <= range.n.hi; ++n) {
        for (unsigned d = std::max(range.d.lo, 1U); d <= range.d.hi; ++d) {
            const auto dim = forms_dimension(n, d);
            std::vector<unsigned> s_values;
            switch (range.s_policy) {
            case SPolicy::all:
                for (std::uint64_t s = 1; s <= dim; ++s) {
                    s_values.push_back(static_cast<unsigned>(s));
                }
                break;
            case SPolicy::bounded:
                for (std::uint64_t s = std::max(range.s.lo, 1U); s <= std::min<std::uint64_t>(range.s.hi, dim); ++s) {
                    s_values.push_back(static_cast<unsigned>(s));
                }
                break;
            case SPolicy::offsets:
                for (auto k : range.s_offsets) {
                    if (n + k >= 1 && n + k <= dim) {
                        s_values.push_back(n + k);
                    }
                }
                break;
            }
            for (auto s : s_values) {
                std::vector<unsigned> r_values;
                switch (range.r_policy) {
                case RPolicy::all:
                    for (unsigned r = 1; r <= s; ++r) {
                        r_values.push_back(r);
                    }
                    break;
                case RPolicy::bounded:
                    for (unsigned r = std::max(range.r.lo, 1U); r <= std::min(range.r.hi, s); ++r) {
                        r_values.push_back(r);
                    }
                    break;
                case RPolicy::iarrobino: {
                    if (dim <= s) {
                        break;
                    }
                    const std::uint64_t num = std::uint64_t{n} * s;
                    const std::uint64_t den = dim - s;
                    const auto lo = static_cast<unsigned>(num / den);
                    const auto hi = static_cast<unsigned>((num + den - 1) / den);
                    for (auto r : {lo, hi}) {
                        if (r >= 1 && r <= s && (r_values.empty() || r_values.back() != r)) {
                            r_values.push_back(r);
                        }
                    }
                    break;
                }
                }
                for (auto r : r_values) {
                    out.push_back(Tuple{n, d, r, s});
                }
            }
            if (d == range.d.hi) {
                break;
            }
        }
        if (n == range.n.hi) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RangeSpec parse_range(std::string_view n, std::string_view d, std::string_view r, std::string_view s)
{
    RangeSpec spec;
    spec.n = parse_interval(n, "n");
    spec.d = parse_interval(d, "d");
    parse_r_policy(r, spec);
    parse_s_policy(s, spec);
    return spec;
}

ScanConfig parse_scan_config(std::string_view toml_text)
{
    toml::table tbl;
    try {
        tbl = toml::parse(toml_text);
    } catch (const toml::parse_error &e) {
        throw ParameterError(std::string("scan config: ") + std::string(e.description()));
    }
    ScanConfig cfg;
    if (auto v = tbl["seed"].value<std::int64_t>()) {
        if (*v < 0) {
            throw ParameterError("scan config: seed must be nonnegative");
        }
        cfg.seed = static_cast<std::uint64_t>(*v);
    }
    if (auto v = tbl["prime_seed"].value<std::int64_t>()) {
        if (*v < 0) {
            throw ParameterError("scan config: prime_seed must be nonnegative");
        }
        cfg.prime_seed = static_cast<std::uint64_t>(*v);
    }
    if (auto v = tbl["parallelism"].value<std::int64_t>()) {
        if (*v < 0) {
            throw ParameterError("scan config: parallelism must be nonnegative");
        }
        cfg.parallelism = static_cast<unsigned>(*v);
    }
    if (auto v = tbl["methods"].value<std::string_view>()) {
        cfg.methods = parse_methods(*v);
    }
    if (auto v = tbl["timing"].value<bool>()) {
        cfg.timing = *v;
    }
    if (const auto *out = tbl["output"].as_table()) {
        if (auto p = (*out)["path"].value<std::string>()) {
            cfg.output.path = *p;
        }
        if (auto f = (*out)["format"].value<std::string>()) {
            cfg.output.format = *f;
        }
    }
    if (cfg.output.format != "json" && cfg.output.format != "csv") {
        throw ParameterError("scan config: output format must be json or csv");
    }
    const auto *ranges = tbl["ranges"].as_array();
    if (ranges == nullptr || ranges->empty()) {
        throw ParameterError("scan config: at least one [[ranges]] table is required");
    }
    for (const auto &node : *ranges) {
        const auto *rt = node.as_table();
        if (rt == nullptr) {
            throw ParameterError("scan config: ranges must be tables");
        }
        const auto r = (*rt)["r"] ? toml_field_text((*rt)["r"], "r") : std::string("all");
        const auto s = (*rt)["s"] ? toml_field_text((*rt)["s"], "s") : std::string("all");
        cfg.ranges.push_back(parse_range(toml_field_text((*rt)["n"], "n"), toml_field_text((*rt)["d"], "d"), r, s));
    }
    return cfg;
}

ScanConfig load_scan_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("cannot read scan config '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scan_config(ss.str());
}

std::vector<std::string> preset_names()
{
    return {"search-small", "search-cubics", "iarrobino"};
}

std::vector<RangeSpec> preset_ranges(std::string_view name)
{
    if (name == "search-small") {
        return {parse_range("2", "2:6", "all", "all"), parse_range("3", "2:3", "all", "all"),
                parse_range("4", "2", "all", "all"), parse_range("5", "2", "all", "all")};
    }
    if (name == "search-cubics") {
        return {parse_range("4", "3", "1:14", "1:23"), parse_range("5", "3", "1:9", "1:34")};
    }
    if (name == "iarrobino") {
        return {parse_range("2:10", "2:5", "iarrobino", "n+2,n+3")};
    }
    throw ParameterError("unknown preset '" + std::string(name) + "'");
}

Methods effective_methods(Methods requested, const Tuple &t)
{
    if (requested == Methods::eta && t.n <= 3 && t.d <= 3) {
        return Methods::both;
    }
    return requested;
}

ScanReport run_scan(const ScanConfig &config, const std::function<void(const TupleOutcome &)> &on_result)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<Tuple> tuples;
    for (const auto &range : config.ranges) {
        const auto part = expand(range);
        tuples.insert(tuples.end(), part.begin(), part.end());
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());

    ScanReport report;
    report.config = config;
    report.results.resize(tuples.size());

    std::atomic<std::size_t> next{0};
    std::mutex callback_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tuples.size()) {
                return;
            }
            TupleOutcome outcome;
            outcome.tuple = tuples[i];
            try {
                AnalyzeOptions opts;
                opts.seed = config.seed;
                opts.prime_seed = config.prime_seed;
                opts.methods = effective_methods(config.methods, tuples[i]);
                outcome.report = analyze(tuples[i], opts);
            } catch (const std::exception &e) {
                outcome.error = e.what();
            }
            if (on_result) {
                std::lock_guard lock(callback_mutex);
                on_result(outcome);
            }
            report.results[i] = std::move(outcome);
        }
    };

    unsigned jobs = config.parallelism == 0 ? std::max(1U, std::thread::hardware_concurrency()) : config.parallelism;
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tuples.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned k = 0; k < jobs; ++k) {
            pool.emplace_back(worker);
        }
    }

    for (const auto &o : report.results) {
        ++report.totals.tuples;
        if (!o.report) {
            ++report.totals.errors;
            continue;
        }
        switch (o.report->certificate) {
        case Certificate::non_deficiency_proved:
            ++report.totals.proved;
            break;
        case Certificate::deficiency_evidence:
            ++report.totals.evidence;
            break;
        case Certificate::inconclusive:
            ++report.totals.inconclusive;
            break;
        }
        if (o.report->deficiency > 0) {
            report.deficient.push_back(o.tuple);
        }
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_json(const SigmaReport &report, bool timing)
{
    return sigma_json(report, timing).dump(2);
}

std::string grove_to_json(const GroveCertificate &cert)
{
    const auto &t = cert.config.tuple;
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["tuple"] = {{"n", t.n}, {"d", t.d}, {"r", t.r}, {"s", t.s}};
    j["prime"] = cert.config.prime.value();
    j["seed"] = cert.config.seed;
    j["grove"] = cert.nullity == 0 ? "none" : "present";
    j["nullity"] = cert.nullity;
    j["verified"] = cert.verified;
    ordered_json points = ordered_json::array();
    for (std::size_t i = 0; i < cert.config.points.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < cert.config.points.cols; ++k) {
            row.push_back(cert.config.points(i, k));
        }
        points.push_back(std::move(row));
    }
    j["points"] = std::move(points);
    ordered_json coeffs = ordered_json::array();
    for (std::size_t i = 0; i < cert.config.coefficients.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < cert.config.coefficients.cols; ++k) {
            row.push_back(cert.config.coefficients(i, k));
        }
        coeffs.push_back(std::move(row));
    }
    j["coefficients"] = std::move(coeffs);
    ordered_json basis = ordered_json::array();
    for (const auto &g : cert.kernel_basis) {
        ordered_json e;
        ordered_json forms = ordered_json::array();
        for (const auto &u : g.forms) {
            forms.push_back(std::vector<FieldElement>(u.coeffs().begin(), u.coeffs().end()));
        }
        e["forms"] = std::move(forms);
        e["t"] = g.system_dimension;
        e["dim_L"] = g.center_dimension ? ordered_json(*g.center_dimension) : ordered_json("empty");
        ordered_json checks = ordered_json::array();
        for (const auto &c : g.checks) {
            checks.push_back({{"base_locus", c.base_locus}, {"in_L", c.in_center}, {"singular", c.singular}});
        }
        e["checks"] = std::move(checks);
        e["verified"] = g.verified;
        basis.push_back(std::move(e));
    }
    j["kernel_basis"] = std::move(basis);
    return j.dump(2);
}

std::string scan_to_json(const ScanReport &report)
{
    const bool timing = report.config.timing;
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["config"] = config_json(report.config);
    ordered_json results = ordered_json::array();
    for (const auto &o : report.results) {
        if (o.report) {
            results.push_back(sigma_json(*o.report, timing));
        } else {
            ordered_json e;
            e["tuple"] = {{"n", o.tuple.n}, {"d", o.tuple.d}, {"r", o.tuple.r}, {"s", o.tuple.s}};
            e["error"] = o.error;
            results.push_back(std::move(e));
        }
    }
    j["results"] = std::move(results);
    ordered_json deficient = ordered_json::array();
    for (const auto &t : report.deficient) {
        deficient.push_back(tuple_json(t));
    }
    j["deficient"] = std::move(deficient);
    j["totals"] = {{"tuples", report.totals.tuples},
                   {"proved", report.totals.proved},
                   {"evidence", report.totals.evidence},
                   {"inconclusive", report.totals.inconclusive},
                   {"errors", report.totals.errors}};
    if (timing) {
        j["wall_time"] = report.wall_ms;
    }
    return j.dump(2) + "\n";
}

std::string scan_to_csv(const ScanReport &report)
{
    const bool timing = report.config.timing;
    std::ostringstream out;
    out << "n,d,r,s,N1,N2,expected_codim,dim_sigma,deficiency,eta_nullity,dim_sigma_eta,dim_sigma_jacobian,"
           "method_agreement,certificate,prime_a,prime_b,seed_a,seed_b,boundary,error";
    if (timing) {
        out << ",elapsed";
    }
    out << "\n";
    for (const auto &o : report.results) {
        const auto &t = o.tuple;
        out << t.n << ',' << t.d << ',' << t.r << ',' << t.s << ',';
        if (!o.report) {
            out << ",,,,,,,,,,,,,,," << csv_quoted(o.error);
            if (timing) {
                out << ',';
            }
            out << "\n";
            continue;
        }
        const auto &r = *o.report;
        out << r.n1 << ',' << r.n2 << ',' << r.expected_codim << ',' << r.dim_sigma << ',' << r.deficiency << ','
            << csv_optional(r.eta_nullity) << ',' << csv_optional(r.dim_sigma_eta) << ','
            << csv_optional(r.dim_sigma_jacobian) << ','
            << (r.method_agreement ? (*r.method_agreement ? "true" : "false") : "") << ','
            << to_string(r.certificate) << ',' << r.primes[0] << ',' << r.primes[1] << ',' << r.seeds[0] << ','
            << r.seeds[1] << ',' << (r.boundary ? "true" : "false") << ',';
        if (timing) {
            out << ',' << r.elapsed_ms;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace waring
