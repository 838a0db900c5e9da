#include "allz/stats.hpp"

#include <string>

namespace allz {

namespace {

__extension__ typedef unsigned __int128 u128;

template <typename Key>
void add_into(std::map<Key, std::uint64_t>& dst, const std::map<Key, std::uint64_t>& src) {
    for (const auto& [key, count] : src) dst[key] += count;
}

}  // namespace

std::string Rational::exact() const { return std::to_string(num) + "/" + std::to_string(den); }

std::string Rational::fixed(int places) const {
    if (den == 0) return "n/a";
    u128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    u128 scaled = (static_cast<u128>(num) * scale * 2 + den) / (static_cast<u128>(den) * 2);
    auto whole = static_cast<std::uint64_t>(scaled / scale);
    auto frac = static_cast<std::uint64_t>(scaled % scale);
    std::string out = std::to_string(whole);
    if (places > 0) {
        std::string digits = std::to_string(frac);
        out += "." + std::string(static_cast<std::size_t>(places) - digits.size(), '0') + digits;
    }
    return out;
}

std::string bound_class_label(std::size_t index) {
    return index == kUnboundedClass ? "inf" : std::to_string(kBoundClasses[index]);
}

CampaignStats merge_stats(const CampaignStats& lhs, const CampaignStats& rhs) {
    CampaignStats out = lhs;
    out.trials += rhs.trials;
    out.successes += rhs.successes;
    out.failures += rhs.failures;
    add_into(out.failures_by_reason, rhs.failures_by_reason);
    add_into(out.gcd_count_histogram, rhs.gcd_count_histogram);
    add_into(out.attempts_per_success_histogram, rhs.attempts_per_success_histogram);
    out.unresolved += rhs.unresolved;
    out.gcd_count_sum += rhs.gcd_count_sum;
    out.period_count += rhs.period_count;
    out.r_digits_sum += rhs.r_digits_sum;
    out.r_distinct_primes_sum += rhs.r_distinct_primes_sum;
    out.even_r_count += rhs.even_r_count;
    out.half_power_minus_one_count += rhs.half_power_minus_one_count;
    for (std::size_t i = 0; i < out.cumulative_success_by_bound.size(); ++i)
        out.cumulative_success_by_bound[i] += rhs.cumulative_success_by_bound[i];
    out.fallback_tried_count += rhs.fallback_tried_count;
    out.fallback_success_count += rhs.fallback_success_count;
    return out;
}

CampaignStats stats_of(const TrialRecord& record) {
    CampaignStats s;
    s.trials = 1;
    if (record.status == TrialStatus::success) {
        s.successes = 1;
        s.attempts_per_success_histogram[1] = 1;
        int needed = 0;  // digit count of the succeeding z; 0 credits every class
        if (record.succeeded_z && record.succeeded_z->kind == SuccessPath::Kind::divisor)
            needed = decimal_digits(record.succeeded_z->z);
        for (std::size_t i = 0; i < kBoundClasses.size(); ++i)
            if (i == kUnboundedClass || needed <= kBoundClasses[i]) s.cumulative_success_by_bound[i] = 1;
    } else {
        s.failures = 1;
        std::string reason = "error";
        if (record.status == TrialStatus::failure)
            reason = record.failure_reason ? std::string(to_string(*record.failure_reason)) : "unknown";
        s.failures_by_reason[reason] = 1;
        if (record.retry_resolved)
            s.attempts_per_success_histogram[1 + record.retries_used] = 1;
        else
            s.unresolved = 1;
    }
    s.gcd_count_histogram[record.gcd_count] = 1;
    s.gcd_count_sum = record.gcd_count;
    if (record.status != TrialStatus::error) {
        s.period_count = 1;
        s.r_digits_sum = static_cast<std::uint64_t>(record.r_digits);
        s.r_distinct_primes_sum = static_cast<std::uint64_t>(record.r_distinct_primes);
        s.even_r_count = record.r_even ? 1 : 0;
        s.half_power_minus_one_count = record.half_power_is_minus_one.value_or(false) ? 1 : 0;
    }
    s.fallback_tried_count = record.fallback_tried ? 1 : 0;
    s.fallback_success_count = record.fallback_succeeded ? 1 : 0;
    return s;
}

CampaignStats compute_metrics(std::span<const TrialRecord> records) {
    CampaignStats total;
    for (const auto& record : records) total = merge_stats(total, stats_of(record));
    return total;
}

}  // namespace allz
