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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <waring/catalog.hpp>
#include <waring/regression.hpp>
#include <waring/scan.hpp>
#include <waring/sigma.hpp>
#include <waring/special_cases.hpp>

namespace {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_parameter = 2,
    exit_inconclusive = 3,
};

struct Common {
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> prime_seed;
    std::string methods = "eta";
    std::string out;
    std::string format = "json";
    bool timing = false;
};

void add_common(CLI::App *cmd, Common &c, bool with_methods)
{
    cmd->add_option("--seed", c.seed, "Base seed for configurations");
    cmd->add_option("--prime-seed", c.prime_seed, "Seed for the primes (defaults to --seed)");
    if (with_methods) {
        cmd->add_option("--methods", c.methods, "eta, jacobian or both")
            ->check(CLI::IsMember({"eta", "jacobian", "both"}));
    }
    cmd->add_option("--out", c.out, "Write the report to PATH");
    cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--timing", c.timing, "Include wall times in reports");
}

void emit(const std::string &text, const std::string &path)
{
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw waring::ParameterError("cannot write '" + path + "'");
    }
    file << text;
    if (!text.empty() && text.back() != '\n') {
        file << '\n';
    }
}

std::string optional_text(const std::optional<std::int64_t> &v)
{
    return v ? std::to_string(*v) : std::string("-");
}

void print_report(const waring::SigmaReport &r)
{
    std::cout << "tuple           " << waring::to_string(r.tuple) << '\n'
              << "N1              " << r.n1 << '\n'
              << "N2              " << r.n2 << '\n'
              << "expected codim  " << r.expected_codim << '\n'
              << "eta nullity     " << optional_text(r.eta_nullity) << '\n'
              << "dim Sigma       " << r.dim_sigma << '\n'
              << "deficiency      " << r.deficiency << '\n'
              << "certificate     " << waring::to_string(r.certificate) << '\n';
    if (r.method_agreement) {
        std::cout << "methods agree   " << (*r.method_agreement ? "yes" : "no") << '\n';
    }
    std::cout << "primes          " << r.primes[0] << ' ' << r.primes[1] << '\n'
              << "seeds           " << r.seeds[0] << ' ' << r.seeds[1] << '\n';
    if (r.boundary) {
        std::cout << "boundary        s = C(n+d,d)\n";
    }
}

waring::ScanReport single_report(const waring::SigmaReport &r, const Common &c)
{
    waring::ScanReport report;
    report.config.seed = c.seed;
    report.config.prime_seed = c.prime_seed;
    report.config.methods = waring::parse_methods(c.methods);
    report.config.timing = c.timing;
    report.results.push_back({r.tuple, r, {}});
    if (r.deficiency > 0) {
        report.deficient.push_back(r.tuple);
    }
    return report;
}

int run_compute(const waring::Tuple &t, const Common &c)
{
    waring::validate(t);
    const auto report = waring::analyze(t, {c.seed, c.prime_seed, waring::parse_methods(c.methods)});
    print_report(report);
    if (!c.out.empty()) {
        emit(c.format == "csv" ? waring::scan_to_csv(single_report(report, c))
                               : waring::report_to_json(report, c.timing),
             c.out);
    }
    return report.certificate == waring::Certificate::inconclusive ? exit_inconclusive : exit_ok;
}

struct ScanArgs {
    std::string config_path;
    std::string preset;
    std::string n = "2";
    std::string d = "2";
    std::string r = "all";
    std::string s = "all";
    unsigned jobs = 0;
    bool quiet = false;
};

int run_scan(const ScanArgs &a, const Common &c, const CLI::App &cmd)
{
    waring::ScanConfig config;
    if (!a.config_path.empty()) {
        config = waring::load_scan_config(a.config_path);
    } else {
        config.output.format = c.format;
        config.output.path = c.out;
    }
    if (!a.preset.empty()) {
        config.ranges = waring::preset_ranges(a.preset);
    }
    const bool explicit_range = cmd.count("--n") + cmd.count("--d") + cmd.count("--r") + cmd.count("--s") > 0;
    if (explicit_range || (a.preset.empty() && a.config_path.empty())) {
        config.ranges.push_back(waring::parse_range(a.n, a.d, a.r, a.s));
    }
    if (config.ranges.empty()) {
        throw waring::ParameterError("no ranges to scan");
    }
    // Command-line flags override the file.
    if (cmd.count("--seed") > 0) {
        config.seed = c.seed;
    }
    if (c.prime_seed) {
        config.prime_seed = c.prime_seed;
    }
    if (cmd.count("--methods") > 0) {
        config.methods = waring::parse_methods(c.methods);
    }
    if (cmd.count("--jobs") > 0) {
        config.parallelism = a.jobs;
    }
    if (cmd.count("--out") > 0) {
        config.output.path = c.out;
    }
    if (cmd.count("--format") > 0) {
        config.output.format = c.format;
    }
    if (c.timing) {
        config.timing = true;
    }

    std::size_t done = 0;
    const auto report = waring::run_scan(config, [&](const waring::TupleOutcome &o) {
        ++done;
        if (a.quiet) {
            return;
        }
        std::cerr << '[' << done << "] " << waring::to_string(o.tuple) << ' ';
        if (o.report) {
            std::cerr << "deficiency " << o.report->deficiency << ' ' << waring::to_string(o.report->certificate);
        } else {
            std::cerr << "error: " << o.error;
        }
        std::cerr << '\n';
    });

    const auto text = config.output.format == "csv" ? waring::scan_to_csv(report) : waring::scan_to_json(report);
    emit(text, config.output.path);

    if (!config.output.path.empty() || !a.quiet) {
        std::cerr << report.totals.tuples << " tuples: " << report.totals.proved << " proved, "
                  << report.totals.evidence << " deficiency evidence, " << report.totals.inconclusive
                  << " inconclusive, " << report.totals.errors << " errors\n";
        for (const auto &t : report.deficient) {
            std::cerr << "deficient " << waring::to_string(t);
            if (!waring::known_deficiency(t)) {
                std::cerr << " (not in the catalog)";
            }
            std::cerr << '\n';
        }
    }
    if (report.totals.errors > 0) {
        return exit_failure;
    }
    return report.totals.inconclusive > 0 ? exit_inconclusive : exit_ok;
}

int run_regression(std::uint64_t seed)
{
    std::size_t failures = 0;
    const auto outcomes = waring::run_regression(seed, [&](const waring::RegressionOutcome &o) {
        std::cout << (o.passed ? "pass  " : "FAIL  ") << o.suite << ": " << o.name;
        if (!o.passed && !o.detail.empty()) {
            std::cout << "  [" << o.detail << ']';
        }
        std::cout << '\n';
        if (!o.passed) {
            ++failures;
        }
    });
    std::cout << outcomes.size() - failures << '/' << outcomes.size() << " passed\n";
    return failures == 0 ? exit_ok : exit_failure;
}

int run_grove(const waring::Tuple &t, const Common &c)
{
    waring::validate(t);
    const auto cfg = waring::sample_configuration(t, waring::configuration_seeds(t, c.seed)[0]);
    std::optional<waring::GroveCertificate> found;
    try {
        found = waring::extract_groves(cfg);
    } catch (const waring::PreconditionError &) {
        std::cerr << "no grove: eta kernel is zero for " << waring::to_string(t) << '\n';
    }
    const waring::GroveCertificate cert = found ? *found : waring::GroveCertificate{cfg, 0, {}, false};
    emit(waring::grove_to_json(cert), c.out);
    if (cert.nullity > 0 && !cert.verified) {
        return exit_failure;
    }
    return exit_ok;
}

struct BinaryArgs {
    std::optional<unsigned> d;
    std::optional<unsigned> r;
    std::optional<unsigned> s;
};

int run_binary(const BinaryArgs &a, std::uint64_t seed)
{
    const unsigned d_lo = a.d.value_or(2);
    const unsigned d_hi = a.d.value_or(12);
    if (d_lo < 1) {
        throw waring::ParameterError("d must be at least 1");
    }
    std::size_t checked = 0;
    std::size_t failures = 0;
    for (unsigned d = d_lo; d <= d_hi; ++d) {
        const unsigned s_lo = a.s.value_or(1);
        const unsigned s_hi = a.s.value_or(d + 1);
        for (unsigned s = s_lo; s <= s_hi; ++s) {
            const unsigned r_lo = a.r.value_or(1);
            const unsigned r_hi = a.r.value_or(s);
            for (unsigned r = r_lo; r <= r_hi; ++r) {
                const auto check = waring::verify_binary_theorem(d, r, s, seed);
                ++checked;
                const bool ok = check.passed();
                failures += ok ? 0 : 1;
                std::cout << (ok ? "pass  " : "FAIL  ") << waring::to_string(check.tuple) << "  nullity "
                          << check.nullity << "  splitting " << check.splitting << "  expected "
                          << check.expected_codim << '\n';
            }
        }
    }
    std::cout << checked - failures << '/' << checked << " passed\n";
    return failures == 0 ? exit_ok : exit_failure;
}

int run_segre(std::uint64_t seed, unsigned count)
{
    std::size_t failures = 0;
    for (unsigned k = 0; k < count; ++k) {
        const auto sub = waring::SeededRng::derive(seed, k);
        const auto check = waring::segre_grove_check(sub);
        const auto random_nullity = waring::system_72x63_nullity(sub);
        const auto arranged_nullity = waring::segre_system_nullity(sub);
        const bool ok = check.passed() && random_nullity == 1;
        failures += ok ? 0 : 1;
        std::cout << (ok ? "pass  " : "FAIL  ") << "seed " << sub << "  net is grove "
                  << (check.net_is_grove ? "yes" : "no") << "  72x63 nullity " << random_nullity
                  << "  Segre-arranged nullity " << arranged_nullity << '\n';
    }
    std::cout << count - failures << '/' << count << " passed\n";
    return failures == 0 ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Dimension and deficiency of Waring loci Sigma(n,d,r,s)"};
    app.require_subcommand(1);

    waring::Tuple tuple;
    Common common;

    auto *compute = app.add_subcommand("compute", "Analyze one tuple (n,d,r,s)");
    compute->add_option("--n", tuple.n, "Number of variables minus one")->required();
    compute->add_option("--d", tuple.d, "Degree")->required();
    compute->add_option("--r", tuple.r, "Dimension of the space of forms")->required();
    compute->add_option("--s", tuple.s, "Number of linear forms")->required();
    add_common(compute, common, true);

    ScanArgs scan_args;
    auto *scan = app.add_subcommand("scan", "Analyze every tuple in a range");
    scan->add_option("--config", scan_args.config_path, "TOML scan configuration")->check(CLI::ExistingFile);
    scan->add_option("--preset", scan_args.preset, "Named range")->check(CLI::IsMember(waring::preset_names()));
    scan->add_option("--n", scan_args.n, "K, LO:HI");
    scan->add_option("--d", scan_args.d, "K, LO:HI");
    scan->add_option("--r", scan_args.r, "all, K, LO:HI or iarrobino");
    scan->add_option("--s", scan_args.s, "all, K, LO:HI or offsets such as n+2,n+3");
    scan->add_option("--jobs", scan_args.jobs, "Worker threads (0: all cores)");
    scan->add_flag("--quiet", scan_args.quiet, "No per-tuple progress");
    add_common(scan, common, true);

    auto *regression = app.add_subcommand("regression", "Run the regression table and property suites");
    regression->add_option("--seed", common.seed, "Base seed");

    auto *grove = app.add_subcommand("grove", "Extract and verify groves from the eta kernel");
    grove->add_option("--n", tuple.n)->required();
    grove->add_option("--d", tuple.d)->required();
    grove->add_option("--r", tuple.r)->required();
    grove->add_option("--s", tuple.s)->required();
    grove->add_option("--seed", common.seed, "Base seed");
    grove->add_option("--out", common.out, "Write the certificate to PATH");

    BinaryArgs binary_args;
    auto *binary = app.add_subcommand("binary-check", "Check the binary-form splitting formula");
    binary->add_option("--d", binary_args.d, "Degree (default: sweep 2..12)");
    binary->add_option("--r", binary_args.r, "Default: sweep 1..s");
    binary->add_option("--s", binary_args.s, "Default: sweep 1..d+1");
    binary->add_option("--seed", common.seed, "Base seed");

    unsigned segre_count = 20;
    auto *segre = app.add_subcommand("segre-check", "Check the Segre threefold construction");
    segre->add_option("--seed", common.seed, "Base seed");
    segre->add_option("--count", segre_count, "Number of random seeds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_parameter;
    }

    try {
        if (*compute) {
            return run_compute(tuple, common);
        }
        if (*scan) {
            return run_scan(scan_args, common, *scan);
        }
        if (*regression) {
            return run_regression(common.seed);
        }
        if (*grove) {
            return run_grove(tuple, common);
        }
        if (*binary) {
            return run_binary(binary_args, common.seed);
        }
        if (*segre) {
            return run_segre(common.seed, segre_count);
        }
    } catch (const waring::ParameterError &e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return exit_parameter;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}
