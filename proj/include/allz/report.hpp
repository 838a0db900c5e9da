#pragma once

#include "allz/json_io.hpp"
#include "allz/stats.hpp"
#include "allz/trial_record.hpp"

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace allz {

struct GroupKey {
    int digits = 0;
    Strategy strategy = Strategy::allz;
    BaseMode base_mode = BaseMode::random;
    std::optional<Nat> bound;

    friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

struct Report {
    CampaignStats overall;
    std::map<GroupKey, CampaignStats> groups;
    std::vector<TrialRecord> failures;  // input order
};

Report build_report(std::span<const TrialRecord> records);

enum class ReportTable { failures, success, bounds, structure };
std::optional<ReportTable> parse_report_table(std::string_view name);

Json report_json(const Report& report);

/// failures: digits,n,a,r,fail_factors,fallback_tried (fail_factors joined by ';').
void write_csv(const Report& report, ReportTable table, std::ostream& out);

/// Human-readable block printed after a campaign.
void write_summary(const CampaignStats& stats, std::ostream& out);

}  // namespace allz
