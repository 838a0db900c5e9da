#pragma once

// Classical post-processing of a period r: the traditional even-period rule,
// a reconstruction of the 2023 multiple-of-three / perfect-square variant, and
// the All-z decomposition over every distinct prime of r.

#include "allz/numtheory.hpp"
#include "allz/period_oracle.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace allz {

enum class AttemptKind {
    gcd_shortcut,  // gcd(a, n)
    divisor,       // gcd(a^(r/z) - 1, n)
    conjugate,     // gcd(a^(r/2) + 1, n), traditional rule only
    fallback,      // gcd(b^r - 1, n) for a = b^2
};

enum class AttemptOutcome { factor_found, trivial_one, trivial_n };

struct AttemptResult {
    AttemptKind kind = AttemptKind::divisor;
    std::optional<Nat> divisor_z;
    Nat gcd_value = 0;
    AttemptOutcome outcome = AttemptOutcome::trivial_one;

    bool found() const { return outcome == AttemptOutcome::factor_found; }

    friend bool operator==(const AttemptResult&, const AttemptResult&) = default;
};

enum class Status { success, failure };

enum class FailureReason {
    odd_period_unusable,
    half_power_minus_one,
    all_divisors_trivial,
    fallback_trivial,
};

struct FactorOutcome {
    Status status = Status::failure;
    std::optional<Nat> factor;
    std::optional<AttemptResult> witness;
    std::vector<AttemptResult> attempts;  // gcds evaluated after the shortcut, in order
    unsigned gcd_count = 0;               // attempts.size() + 1 for the shortcut gcd
    std::optional<FailureReason> failure_reason;

    bool succeeded() const { return status == Status::success; }

    friend bool operator==(const FactorOutcome&, const FactorOutcome&) = default;
};

enum class Strategy { traditional, dong2023, allz };

std::string_view to_string(AttemptKind kind);
std::string_view to_string(AttemptOutcome outcome);
std::string_view to_string(Status status);
std::string_view to_string(FailureReason reason);
std::string_view to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view name);
std::optional<FailureReason> parse_failure_reason(std::string_view name);

AttemptOutcome classify_gcd(Nat g, Nat n);

/// k = r / z, g = gcd(a^k - 1, n). Throws InvalidInput unless z is a prime dividing r.
AttemptResult attempt_divisor(Nat n, Nat a, Nat r, Nat z);

/// g = gcd(b^r - 1, n). Throws InvalidInput when gcd(b, n) > 1.
AttemptResult fallback_square(Nat n, Nat b, Nat r);

// The strategies below evaluate gcd(a, n) first and only read `period` when
// that gcd is 1; callers may pass an empty PeriodRecord in the shortcut case.

/// Every distinct prime z of r in ascending order (only z <= bound when a bound
/// is given), then the b^r fallback when a = b^2. Stops at the first factor.
FactorOutcome all_z(Nat n, Nat a, const PeriodRecord& period, std::optional<Nat> bound = std::nullopt);

FactorOutcome traditional_shor(Nat n, Nat a, const PeriodRecord& period);

/// Traditional rule, then z = 3 when 3 | r, then the perfect-square fallback.
/// Reconstructed from a one-line description of the 2023 variant.
FactorOutcome dong2023(Nat n, Nat a, const PeriodRecord& period);

FactorOutcome run_strategy(Strategy strategy, Nat n, Nat a, const PeriodRecord& period,
                           std::optional<Nat> bound = std::nullopt);

}  // namespace allz
