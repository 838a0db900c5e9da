#pragma once

// Monte Carlo harness: RSA-style semiprimes, base sampling, single trials and
// seeded parallel campaigns.

#include "allz/numtheory.hpp"
#include "allz/rng.hpp"
#include "allz/stats.hpp"
#include "allz/strategies.hpp"
#include "allz/trial_record.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace allz {

struct Semiprime {
    Nat n = 0;
    Nat p = 0;
    Nat q = 0;

    friend bool operator==(const Semiprime&, const Semiprime&) = default;
};

/// Digit counts of the two primes of a d-digit semiprime.
/// balanced: both ceil(d/2) digits. ceil_floor: ceil(d/2) and floor(d/2) digits.
enum class PrimeSplit { balanced, ceil_floor };

std::string_view to_string(PrimeSplit split);
std::optional<PrimeSplit> parse_prime_split(std::string_view name);

struct TrialCase {
    std::uint64_t case_id = 0;
    Semiprime semiprime;
    Nat a = 0;
    BaseMode base_mode = BaseMode::random;
    std::uint64_t seed = 0;
};

struct CampaignConfig {
    int digits = 5;
    std::uint64_t trials = 1000;
    BaseMode base_mode = BaseMode::random;
    Strategy strategy = Strategy::allz;
    std::optional<Nat> bound;
    std::uint64_t master_seed = 0;
    unsigned workers = 1;
    unsigned retry_limit = 0;
    std::uint64_t first_case_id = 0;  // lets a campaign be split into contiguous slices
    PrimeSplit prime_split = PrimeSplit::balanced;

    /// Throws InvalidInput describing the first violated constraint.
    void validate() const;
};

/// Uniform prime with exactly `digits` decimal digits (rejection sampling).
Nat random_prime(int digits, Rng& rng);

/// Distinct primes p, q with digit counts per `split`, rejected until pq has
/// exactly `digits` digits.
Semiprime sample_semiprime(int digits, Rng& rng, PrimeSplit split = PrimeSplit::balanced);

/// random: a uniform in [2, n-1] coprime to n.
/// perfect_square: b uniform in [2, isqrt(n-1)] with gcd(b, n) = 1, returns b^2.
Nat sample_base(Nat n, BaseMode mode, Rng& rng);

TrialCase make_case(std::uint64_t case_id, int digits, BaseMode mode, std::uint64_t master_seed,
                    PrimeSplit split = PrimeSplit::balanced);

/// Deterministic in the case. Precondition failures come back as a record
/// with status error and the message in `error`.
TrialRecord run_trial(const TrialCase& trial, Strategy strategy, std::optional<Nat> bound = std::nullopt);

/// One case of a campaign, including base retries on failure.
TrialRecord run_case(const CampaignConfig& config, std::uint64_t case_id);

using RecordSink = std::function<void(const TrialRecord&)>;

/// Runs config.trials cases on config.workers threads. The sink sees records
/// in ascending case_id order whatever the scheduling.
CampaignStats run_campaign(const CampaignConfig& config, const RecordSink& sink = {});

/// ceil(z^2 p (1 - p) / E^2).
std::uint64_t cochran_sample_size(double p_expected, double margin, double z_alpha);

}  // namespace allz
