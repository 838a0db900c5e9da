#include "allz/cli.hpp"

#include "allz/campaign.hpp"
#include "allz/json_io.hpp"
#include "allz/paper_fixtures.hpp"
#include "allz/period_oracle.hpp"
#include "allz/report.hpp"
#include "allz/strategies.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <string>

namespace allz::cli {

namespace {

struct FactorArgs {
    Nat n = 0;
    std::optional<Nat> base;
    std::string auto_base = "random";
    std::string strategy = "allz";
    std::optional<Nat> bound;
    std::uint64_t seed = 0;
};

struct OrderArgs {
    Nat n = 0;
    Nat a = 0;
};

struct CampaignArgs {
    std::string config_file;
    int digits = 0;
    std::uint64_t trials = 0;
    std::string base_mode;
    std::string strategy;
    Nat bound = 0;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    unsigned retries = 0;
    std::uint64_t first_case = 0;
    std::string prime_split;
    std::string out_file;
};

struct ReportArgs {
    std::vector<std::string> inputs;
    std::string format = "json";
    std::string table = "failures";
    std::string out_file;
};

int cmd_factor(const FactorArgs& args, std::ostream& out, std::ostream& err) {
    const Nat n = args.n;
    if (n < 6 || is_probable_prime(n)) {
        err << "factor: n must be a composite integer >= 6 (got " << n << ")\n";
        return kExitInvalidInput;
    }
    auto strategy = parse_strategy(args.strategy);
    if (!strategy) {
        err << "factor: unknown strategy '" << args.strategy << "'\n";
        return kExitInvalidInput;
    }
    if (args.bound && *strategy != Strategy::allz) {
        err << "factor: --bound applies to the allz strategy only\n";
        return kExitInvalidInput;
    }
    if (args.bound && *args.bound < 2) {
        err << "factor: --bound must be >= 2\n";
        return kExitInvalidInput;
    }
    Nat a = 0;
    std::optional<BaseMode> mode;
    if (args.base) {
        a = *args.base;
        if (a < 2 || a >= n) {
            err << "factor: base must satisfy 2 <= a < n\n";
            return kExitInvalidInput;
        }
    } else {
        mode = parse_base_mode(args.auto_base);
        if (!mode) {
            err << "factor: unknown base mode '" << args.auto_base << "'\n";
            return kExitInvalidInput;
        }
        Rng rng(case_seed(args.seed, 0));
        a = sample_base(n, *mode, rng);
    }

    PeriodRecord period;
    const bool coprime = gcd(a, n) == 1;
    if (coprime) period = multiplicative_order(a, n);
    const FactorOutcome outcome = run_strategy(*strategy, n, a, period, args.bound);

    Json j;
    j["n"] = n;
    j["a"] = a;
    j["base_mode"] = mode ? Json(to_string(*mode)) : Json("explicit");
    j["strategy"] = to_string(*strategy);
    if (*strategy == Strategy::dong2023) j["strategy_note"] = "reconstruction of the 2023 variant";
    j["bound"] = args.bound ? Json(*args.bound) : Json(nullptr);
    j["r"] = coprime ? Json(period.order) : Json(nullptr);
    j["r_factors"] = coprime ? to_json(period.factors) : Json(nullptr);
    j["status"] = to_string(outcome.status);
    j["factor"] = outcome.factor ? Json(*outcome.factor) : Json(nullptr);
    j["cofactor"] = outcome.factor ? Json(n / *outcome.factor) : Json(nullptr);
    j["witness"] = outcome.witness ? to_json(*outcome.witness) : Json(nullptr);
    std::vector<Nat> failed;
    for (const auto& attempt : outcome.attempts)
        if (attempt.kind == AttemptKind::divisor && !attempt.found()) failed.push_back(*attempt.divisor_z);
    j["failed_z"] = failed;
    j["attempts"] = to_json(outcome)["attempts"];
    j["gcd_count"] = outcome.gcd_count;
    j["failure_reason"] = outcome.failure_reason ? Json(to_string(*outcome.failure_reason)) : Json(nullptr);
    out << j.dump(2) << '\n';
    return outcome.succeeded() ? kExitOk : kExitMethodFailure;
}

int cmd_order(const OrderArgs& args, std::ostream& out, std::ostream& err) {
    if (args.n < 2 || args.a < 1 || args.a >= args.n) {
        err << "order: need n >= 2 and 1 <= a < n\n";
        return kExitInvalidInput;
    }
    if (Nat g = gcd(args.a, args.n); g > 1) {
        err << "order: gcd(a, n) = " << g << " > 1; shared factor " << g << "\n";
        return kExitInvalidInput;
    }
    const PeriodRecord period = multiplicative_order(args.a, args.n);
    Json j;
    j["n"] = args.n;
    j["a"] = args.a;
    j["r"] = period.order;
    j["factors"] = to_json(period.factors);
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_campaign(const CampaignArgs& args, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    CampaignConfig config;
    if (!args.config_file.empty()) {
        std::ifstream in(args.config_file);
        if (!in) {
            err << "campaign: cannot read config file " << args.config_file << "\n";
            return kExitIoError;
        }
        try {
            apply_config_json(Json::parse(in), config);
        } catch (const std::exception& e) {
            err << "campaign: invalid config file: " << e.what() << "\n";
            return kExitInvalidInput;
        }
    }
    auto given = [&](const char* name) { return sub.count(name) > 0; };
    if (given("--digits")) config.digits = args.digits;
    if (given("--trials")) config.trials = args.trials;
    if (given("--base-mode")) {
        auto mode = parse_base_mode(args.base_mode);
        if (!mode) {
            err << "campaign: unknown base mode '" << args.base_mode << "'\n";
            return kExitInvalidInput;
        }
        config.base_mode = *mode;
    }
    if (given("--strategy")) {
        auto strategy = parse_strategy(args.strategy);
        if (!strategy) {
            err << "campaign: unknown strategy '" << args.strategy << "'\n";
            return kExitInvalidInput;
        }
        config.strategy = *strategy;
    }
    if (given("--bound")) config.bound = args.bound;
    if (given("--seed")) config.master_seed = args.seed;
    if (given("--workers")) config.workers = args.workers;
    if (given("--retries")) config.retry_limit = args.retries;
    if (given("--first-case")) config.first_case_id = args.first_case;
    if (given("--prime-split")) {
        auto split = parse_prime_split(args.prime_split);
        if (!split) {
            err << "campaign: unknown prime split '" << args.prime_split << "'\n";
            return kExitInvalidInput;
        }
        config.prime_split = *split;
    }
    try {
        config.validate();
    } catch (const InvalidInput& e) {
        err << "campaign: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    std::ofstream file;
    if (!args.out_file.empty()) {
        file.open(args.out_file, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "campaign: cannot write " << args.out_file << "\n";
            return kExitIoError;
        }
    }
    RecordSink sink;
    if (file.is_open()) sink = [&](const TrialRecord& rec) { file << to_jsonl_line(rec) << '\n'; };
    const CampaignStats stats = run_campaign(config, sink);
    if (file.is_open()) {
        file.flush();
        if (!file) {
            err << "campaign: write to " << args.out_file << " failed\n";
            return kExitIoError;
        }
    }
    out << "config            " << to_json(config).dump() << '\n';
    if (config.strategy == Strategy::dong2023)
        out << "note              dong2023 is a reconstruction of the 2023 variant\n";
    write_summary(stats, out);
    return kExitOk;
}

int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err) {
    auto table = parse_report_table(args.table);
    if (!table) {
        err << "report: unknown table '" << args.table << "'\n";
        return kExitInvalidInput;
    }
    if (args.format != "csv" && args.format != "json") {
        err << "report: format must be csv or json\n";
        return kExitInvalidInput;
    }
    std::vector<TrialRecord> records;
    for (const auto& path : args.inputs) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            err << "report: cannot read " << path << "\n";
            return kExitIoError;
        }
        try {
            auto part = read_results(in, path);
            records.insert(records.end(), part.begin(), part.end());
        } catch (const ResultsLineError& e) {
            err << "report: malformed record at line " << e.line_number << " of " << e.source << ": " << e.what()
                << "\n";
            return kExitInvalidInput;
        }
    }
    const Report report = build_report(records);

    std::ofstream file;
    if (!args.out_file.empty()) {
        file.open(args.out_file, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "report: cannot write " << args.out_file << "\n";
            return kExitIoError;
        }
    }
    std::ostream& sink = file.is_open() ? static_cast<std::ostream&>(file) : out;
    if (args.format == "json")
        sink << report_json(report).dump(2) << '\n';
    else
        write_csv(report, *table, sink);
    sink.flush();
    if (!sink) {
        err << "report: write failed\n";
        return kExitIoError;
    }
    return kExitOk;
}

int cmd_verify_paper(std::ostream& out, Options options) {
    const auto fixtures = failure_fixtures();
    std::size_t passed = 0;
    const char* green = options.color ? "\x1b[32m" : "";
    const char* red = options.color ? "\x1b[31m" : "";
    const char* reset = options.color ? "\x1b[0m" : "";
    for (const auto& fixture : fixtures) {
        const FixtureCheck check = check_fixture(fixture);
        out << (check.passed ? green : red) << (check.passed ? "PASS" : "FAIL") << reset << "  digits=" << fixture.digits
            << " n=" << fixture.n << " a=" << fixture.a << " r=" << check.computed_r << " fail={";
        for (std::size_t i = 0; i < check.computed_fail_factors.size(); ++i)
            out << (i ? "," : "") << check.computed_fail_factors[i];
        out << "}" << (check.computed_fallback ? " fallback" : "");
        if (!check.passed) out << "  (" << check.detail << ")";
        out << '\n';
        if (check.passed) ++passed;
    }
    out << passed << "/" << fixtures.size() << " rows verified\n";
    return passed == fixtures.size() ? kExitOk : kExitMethodFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Options options) {
    CLI::App app{"All-z post-processing for Shor period finding: factor, order, campaign, report, verify-paper", "allz"};
    app.require_subcommand(1);

    FactorArgs factor;
    auto* factor_cmd = app.add_subcommand("factor", "Factor n from one base and its exact period");
    factor_cmd->add_option("n", factor.n, "Composite modulus")->required();
    auto* base_opt = factor_cmd->add_option("--base", factor.base, "Explicit base a");
    factor_cmd->add_option("--auto-base", factor.auto_base, "Sample the base: random | perfect_square")
        ->excludes(base_opt);
    factor_cmd->add_option("--strategy", factor.strategy, "traditional | dong2023 | allz");
    factor_cmd->add_option("--bound", factor.bound, "Largest prime z tried (allz)");
    factor_cmd->add_option("--seed", factor.seed, "Seed for --auto-base");

    OrderArgs order;
    auto* order_cmd = app.add_subcommand("order", "Multiplicative order of a mod n");
    order_cmd->add_option("n", order.n, "Modulus")->required();
    order_cmd->add_option("a", order.a, "Base")->required();

    CampaignArgs campaign;
    auto* campaign_cmd = app.add_subcommand("campaign", "Run a seeded Monte Carlo campaign");
    campaign_cmd->add_option("--config", campaign.config_file, "JSON file with CampaignConfig fields");
    campaign_cmd->add_option("--digits", campaign.digits, "Decimal digits of n (2..12)");
    campaign_cmd->add_option("--trials", campaign.trials, "Number of cases");
    campaign_cmd->add_option("--base-mode", campaign.base_mode, "random | perfect_square");
    campaign_cmd->add_option("--strategy", campaign.strategy, "traditional | dong2023 | allz");
    campaign_cmd->add_option("--bound", campaign.bound, "Largest prime z tried (allz)");
    campaign_cmd->add_option("--seed", campaign.seed, "Master seed");
    campaign_cmd->add_option("--workers", campaign.workers, "Worker threads");
    campaign_cmd->add_option("--retries", campaign.retries, "New bases per n after a failure");
    campaign_cmd->add_option("--first-case", campaign.first_case, "First case id (for split runs)");
    campaign_cmd->add_option("--prime-split", campaign.prime_split, "balanced | ceil_floor prime digit counts");
    campaign_cmd->add_option("--out", campaign.out_file, "JSONL results file");

    ReportArgs report;
    auto* report_cmd = app.add_subcommand("report", "Summarize one or more JSONL results files");
    report_cmd->add_option("--in", report.inputs, "Results files")->required();
    report_cmd->add_option("--format", report.format, "csv | json");
    report_cmd->add_option("--table", report.table, "CSV table: failures | success | bounds | structure");
    report_cmd->add_option("--out", report.out_file, "Output file (stdout when omitted)");

    auto* verify_cmd = app.add_subcommand("verify-paper", "Replay the published All-z failure cases");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInvalidInput;
    }

    try {
        if (*factor_cmd) return cmd_factor(factor, out, err);
        if (*order_cmd) return cmd_order(order, out, err);
        if (*campaign_cmd) return cmd_campaign(campaign, *campaign_cmd, out, err);
        if (*report_cmd) return cmd_report(report, out, err);
        if (*verify_cmd) return cmd_verify_paper(out, options);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitInvalidInput;
}

}  // namespace allz::cli
