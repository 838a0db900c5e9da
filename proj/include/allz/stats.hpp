#pragma once

// Mergeable campaign aggregates. Every field is a sum or a count, so
// merge_stats is associative and commutative with CampaignStats{} as identity.

#include "allz/trial_record.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace allz {

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 0;

    /// "num/den".
    std::string exact() const;
    /// Round-half-up decimal with `places` fractional digits; "n/a" when den = 0.
    std::string fixed(int places = 6) const;
    double approx() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
};

/// Bound classes by digit count of the smallest succeeding z: 1..4, then unbounded.
inline constexpr std::array<int, 5> kBoundClasses{1, 2, 3, 4, 0};
inline constexpr std::size_t kUnboundedClass = 4;
std::string bound_class_label(std::size_t index);

struct CampaignStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;  // includes error records
    std::map<std::string, std::uint64_t> failures_by_reason;
    std::map<unsigned, std::uint64_t> gcd_count_histogram;
    // Bases used until n split (1 = first base). Unresolved cases counted apart.
    std::map<unsigned, std::uint64_t> attempts_per_success_histogram;
    std::uint64_t unresolved = 0;
    std::uint64_t gcd_count_sum = 0;
    std::uint64_t period_count = 0;  // records with a computed r
    std::uint64_t r_digits_sum = 0;
    std::uint64_t r_distinct_primes_sum = 0;
    std::uint64_t even_r_count = 0;
    std::uint64_t half_power_minus_one_count = 0;
    std::array<std::uint64_t, 5> cumulative_success_by_bound{};
    std::uint64_t fallback_tried_count = 0;
    std::uint64_t fallback_success_count = 0;

    Rational success_rate() const { return {successes, trials}; }
    Rational mean_gcd_count() const { return {gcd_count_sum, trials}; }
    Rational mean_r_digits() const { return {r_digits_sum, period_count}; }
    Rational mean_r_distinct_primes() const { return {r_distinct_primes_sum, period_count}; }
    Rational half_power_minus_one_rate() const { return {half_power_minus_one_count, even_r_count}; }
    Rational bound_class_rate(std::size_t index) const { return {cumulative_success_by_bound[index], trials}; }

    friend bool operator==(const CampaignStats&, const CampaignStats&) = default;
};

CampaignStats merge_stats(const CampaignStats& lhs, const CampaignStats& rhs);

/// Contribution of a single record.
CampaignStats stats_of(const TrialRecord& record);

CampaignStats compute_metrics(std::span<const TrialRecord> records);

}  // namespace allz
