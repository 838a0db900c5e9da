#pragma once

// JSON encodings: the JSONL results stream, campaign config files and the
// objects printed by the CLI.

#include "allz/campaign.hpp"
#include "allz/period_oracle.hpp"
#include "allz/stats.hpp"
#include "allz/strategies.hpp"
#include "allz/trial_record.hpp"

#include <json.hpp>

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace allz {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const TrialRecord& record);
TrialRecord record_from_json(const Json& object);

/// One line of a results file, no trailing newline.
std::string to_jsonl_line(const TrialRecord& record);
/// Throws ParseError on malformed input.
TrialRecord parse_jsonl_line(const std::string& line);

struct ResultsLineError : ParseError {
    ResultsLineError(std::string source, std::size_t line_number, const std::string& message)
        : ParseError(source + ":" + std::to_string(line_number) + ": " + message),
          source(std::move(source)),
          line_number(line_number) {}
    std::string source;
    std::size_t line_number;
};

/// Reads every non-empty line; throws ResultsLineError naming the line.
std::vector<TrialRecord> read_results(std::istream& in, const std::string& source_name);

/// Overwrites fields present in `object` (names as in CampaignConfig).
void apply_config_json(const Json& object, CampaignConfig& config);
Json to_json(const CampaignConfig& config);

Json to_json(const FactorMultiset& factors);
Json to_json(const PeriodRecord& period);
Json to_json(const AttemptResult& attempt);
Json to_json(const FactorOutcome& outcome);
Json to_json(const CampaignStats& stats);

}  // namespace allz
