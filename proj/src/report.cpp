#include "allz/report.hpp"

#include <string>

namespace allz {

namespace {

constexpr std::string_view kDong2023Label =
    "reconstruction: traditional rule, then z = 3 when 3 | r, then the perfect-square fallback";

std::string bound_text(const std::optional<Nat>& bound) { return bound ? std::to_string(*bound) : ""; }

std::string fail_factors(const TrialRecord& record) {
    std::string out;
    for (std::size_t i = 0; i < record.failed_z.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(record.failed_z[i]);
    }
    return out;
}

Json key_json(const GroupKey& key) {
    Json j;
    j["digits"] = key.digits;
    j["strategy"] = to_string(key.strategy);
    j["base_mode"] = to_string(key.base_mode);
    j["bound"] = key.bound ? Json(*key.bound) : Json(nullptr);
    return j;
}

void write_key(std::ostream& out, const GroupKey& key) {
    out << key.digits << ',' << to_string(key.strategy) << ',' << to_string(key.base_mode) << ','
        << bound_text(key.bound);
}

}  // namespace

Report build_report(std::span<const TrialRecord> records) {
    Report report;
    for (const auto& record : records) {
        CampaignStats one = stats_of(record);
        report.overall = merge_stats(report.overall, one);
        GroupKey key{record.digits, record.strategy, record.base_mode, record.bound};
        report.groups[key] = merge_stats(report.groups[key], one);
        if (record.status == TrialStatus::failure) report.failures.push_back(record);
    }
    return report;
}

std::optional<ReportTable> parse_report_table(std::string_view name) {
    if (name == "failures") return ReportTable::failures;
    if (name == "success") return ReportTable::success;
    if (name == "bounds") return ReportTable::bounds;
    if (name == "structure") return ReportTable::structure;
    return std::nullopt;
}

Json report_json(const Report& report) {
    Json j;
    j["overall"] = to_json(report.overall);

    Json groups = Json::array();
    for (const auto& [key, stats] : report.groups) {
        Json g = key_json(key);
        g["stats"] = to_json(stats);
        groups.push_back(g);
    }
    j["groups"] = groups;

    // Rows keyed by digit count, one column per strategy (unbounded runs).
    std::map<std::pair<int, BaseMode>, Json> rows;
    for (const auto& [key, stats] : report.groups) {
        if (key.bound) continue;
        Json& row = rows[{key.digits, key.base_mode}];
        if (row.is_null()) {
            row["digits"] = key.digits;
            row["base_mode"] = to_string(key.base_mode);
            for (Strategy s : {Strategy::traditional, Strategy::dong2023, Strategy::allz}) row[to_string(s)] = nullptr;
        }
        row[to_string(key.strategy)] = stats.success_rate().fixed(6);
    }
    Json table = Json::array();
    for (const auto& [_, row] : rows) table.push_back(row);
    j["success_table"] = table;

    Json curves = Json::array();
    for (const auto& [key, stats] : report.groups) {
        Json c = key_json(key);
        Json points = Json::object();
        for (std::size_t i = 0; i < kBoundClasses.size(); ++i)
            points[bound_class_label(i)] = stats.bound_class_rate(i).fixed(6);
        c["cumulative_success_by_bound"] = points;
        curves.push_back(c);
    }
    j["bound_curves"] = curves;

    Json structure = Json::array();
    for (const auto& [key, stats] : report.groups) {
        Json s = key_json(key);
        s["mean_r_digits"] = stats.mean_r_digits().fixed(6);
        s["mean_r_distinct_primes"] = stats.mean_r_distinct_primes().fixed(6);
        s["half_power_minus_one_given_even_r"] = stats.half_power_minus_one_rate().fixed(6);
        s["mean_gcd_count"] = stats.mean_gcd_count().fixed(6);
        structure.push_back(s);
    }
    j["r_structure"] = structure;

    Json failures = Json::array();
    for (const auto& r : report.failures) {
        Json f;
        f["digits"] = r.digits;
        f["n"] = r.n;
        f["a"] = r.a;
        f["r"] = r.r;
        f["fail_factors"] = r.failed_z;
        f["fallback_tried"] = r.fallback_tried;
        failures.push_back(f);
    }
    j["failures"] = failures;

    for (const auto& [key, _] : report.groups)
        if (key.strategy == Strategy::dong2023) {
            j["notes"]["dong2023"] = std::string(kDong2023Label);
            break;
        }
    return j;
}

void write_csv(const Report& report, ReportTable table, std::ostream& out) {
    switch (table) {
        case ReportTable::failures:
            out << "digits,n,a,r,fail_factors,fallback_tried\n";
            for (const auto& r : report.failures)
                out << r.digits << ',' << r.n << ',' << r.a << ',' << r.r << ',' << fail_factors(r) << ','
                    << (r.fallback_tried ? "true" : "false") << '\n';
            break;
        case ReportTable::success:
            out << "digits,strategy,base_mode,bound,trials,successes,success_rate_exact,success_rate\n";
            for (const auto& [key, s] : report.groups) {
                write_key(out, key);
                out << ',' << s.trials << ',' << s.successes << ',' << s.success_rate().exact() << ','
                    << s.success_rate().fixed(6) << '\n';
            }
            break;
        case ReportTable::bounds:
            out << "digits,strategy,base_mode,bound,trials";
            for (std::size_t i = 0; i < kBoundClasses.size(); ++i) out << ",class_" << bound_class_label(i);
            out << '\n';
            for (const auto& [key, s] : report.groups) {
                write_key(out, key);
                out << ',' << s.trials;
                for (std::size_t i = 0; i < kBoundClasses.size(); ++i) out << ',' << s.bound_class_rate(i).fixed(6);
                out << '\n';
            }
            break;
        case ReportTable::structure:
            out << "digits,strategy,base_mode,bound,trials,mean_r_digits,mean_r_distinct_primes,"
                   "half_power_minus_one_given_even_r,mean_gcd_count,fallback_successes\n";
            for (const auto& [key, s] : report.groups) {
                write_key(out, key);
                out << ',' << s.trials << ',' << s.mean_r_digits().fixed(6) << ','
                    << s.mean_r_distinct_primes().fixed(6) << ',' << s.half_power_minus_one_rate().fixed(6) << ','
                    << s.mean_gcd_count().fixed(6) << ',' << s.fallback_success_count << '\n';
            }
            break;
    }
}

void write_summary(const CampaignStats& s, std::ostream& out) {
    out << "trials            " << s.trials << '\n'
        << "successes         " << s.successes << '\n'
        << "failures          " << s.failures << '\n'
        << "success rate      " << s.success_rate().exact() << " = " << s.success_rate().fixed(6) << '\n';
    out << "failures by reason\n";
    if (s.failures_by_reason.empty()) out << "  (none)\n";
    for (const auto& [reason, count] : s.failures_by_reason) out << "  " << reason << "  " << count << '\n';
    out << "mean gcd count    " << s.mean_gcd_count().fixed(6) << '\n'
        << "mean r digits     " << s.mean_r_digits().fixed(6) << '\n'
        << "mean r primes     " << s.mean_r_distinct_primes().fixed(6) << '\n'
        << "P(a^(r/2)=-1 | r even)  " << s.half_power_minus_one_rate().fixed(6) << '\n'
        << "fallback tried    " << s.fallback_tried_count << '\n'
        << "fallback success  " << s.fallback_success_count << '\n';
    if (!s.attempts_per_success_histogram.empty() || s.unresolved) {
        out << "bases until split\n";
        for (const auto& [bases, count] : s.attempts_per_success_histogram)
            out << "  " << bases << "  " << count << '\n';
        out << "  unresolved  " << s.unresolved << '\n';
    }
    out << "cumulative success by z digit class\n";
    for (std::size_t i = 0; i < kBoundClasses.size(); ++i)
        out << "  <= " << bound_class_label(i) << "  " << s.cumulative_success_by_bound[i] << "  "
            << s.bound_class_rate(i).fixed(6) << '\n';
}

}  // namespace allz
