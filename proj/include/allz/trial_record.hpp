#pragma once

#include "allz/numtheory.hpp"
#include "allz/strategies.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace allz {

enum class BaseMode { random, perfect_square };

std::string_view to_string(BaseMode mode);
std::optional<BaseMode> parse_base_mode(std::string_view name);

enum class TrialStatus { success, failure, error };

std::string_view to_string(TrialStatus status);
std::optional<TrialStatus> parse_trial_status(std::string_view name);

/// How a success was reached: a prime z, the b^r fallback, or gcd(a, n).
struct SuccessPath {
    enum class Kind { divisor, fallback, shortcut };
    Kind kind = Kind::divisor;
    Nat z = 0;  // divisor only

    friend bool operator==(const SuccessPath&, const SuccessPath&) = default;
};

/// One simulated trial, flattened for the JSONL results stream.
struct TrialRecord {
    std::uint64_t case_id = 0;
    int digits = 0;
    Nat n = 0;
    Nat p = 0;
    Nat q = 0;
    Nat a = 0;
    BaseMode base_mode = BaseMode::random;
    std::uint64_t seed = 0;
    Strategy strategy = Strategy::allz;
    std::optional<Nat> bound;
    Nat r = 0;
    int r_digits = 0;
    int r_distinct_primes = 0;
    TrialStatus status = TrialStatus::failure;
    std::optional<Nat> factor;
    std::optional<SuccessPath> succeeded_z;
    std::vector<Nat> failed_z;
    bool fallback_tried = false;
    bool fallback_succeeded = false;
    unsigned gcd_count = 0;
    bool r_even = false;
    std::optional<bool> half_power_is_minus_one;  // only when r is even
    std::optional<FailureReason> failure_reason;
    unsigned retries_used = 0;    // extra bases drawn for this n after a failure
    bool retry_resolved = false;  // a later base split n within the retry budget
    std::optional<std::string> error;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

}  // namespace allz
