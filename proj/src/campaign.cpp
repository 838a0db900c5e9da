#include "allz/campaign.hpp"

#include "allz/period_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace allz {

namespace {

constexpr int kMaxPrimeDraws = 1000000;
constexpr int kMaxBaseDraws = 1000000;
constexpr std::uint64_t kBlockPerWorker = 1024;

void check_case(const TrialCase& trial) {
    const auto& [n, p, q] = trial.semiprime;
    if (p == q || !is_probable_prime(p) || !is_probable_prime(q) || n != p * q)
        throw InvalidInput("trial case: n must be a product of two distinct primes");
    if (trial.a < 2 || trial.a >= n) throw InvalidInput("trial case: a must satisfy 2 <= a < n");
    if (gcd(trial.a, n) != 1) throw InvalidInput("trial case: gcd(a, n) must be 1");
    if (trial.base_mode == BaseMode::perfect_square && !perfect_square_root(trial.a))
        throw InvalidInput("trial case: perfect_square mode needs a square base");
}

void fill_outcome(TrialRecord& rec, const FactorOutcome& outcome) {
    rec.status = outcome.succeeded() ? TrialStatus::success : TrialStatus::failure;
    rec.factor = outcome.factor;
    rec.gcd_count = outcome.gcd_count;
    rec.failure_reason = outcome.failure_reason;
    for (const auto& attempt : outcome.attempts) {
        if (attempt.kind == AttemptKind::fallback) rec.fallback_tried = true;
        if (attempt.kind == AttemptKind::divisor && !attempt.found()) rec.failed_z.push_back(*attempt.divisor_z);
    }
    if (outcome.witness) {
        switch (outcome.witness->kind) {
            case AttemptKind::divisor:
            case AttemptKind::conjugate:
                rec.succeeded_z = SuccessPath{SuccessPath::Kind::divisor, *outcome.witness->divisor_z};
                break;
            case AttemptKind::fallback:
                rec.succeeded_z = SuccessPath{SuccessPath::Kind::fallback, 0};
                rec.fallback_succeeded = true;
                break;
            case AttemptKind::gcd_shortcut:
                rec.succeeded_z = SuccessPath{SuccessPath::Kind::shortcut, 0};
                break;
        }
    }
}

}  // namespace

std::string_view to_string(PrimeSplit split) {
    return split == PrimeSplit::balanced ? "balanced" : "ceil_floor";
}

std::optional<PrimeSplit> parse_prime_split(std::string_view name) {
    if (name == "balanced") return PrimeSplit::balanced;
    if (name == "ceil_floor") return PrimeSplit::ceil_floor;
    return std::nullopt;
}

void CampaignConfig::validate() const {
    if (digits < 2 || digits > 12) throw InvalidInput("config: digits must lie in [2, 12]");
    if (workers < 1) throw InvalidInput("config: workers must be >= 1");
    if (bound && *bound < 2) throw InvalidInput("config: bound must be >= 2");
    if (bound && strategy != Strategy::allz) throw InvalidInput("config: bound applies to the allz strategy only");
    if (trials > ~std::uint64_t{0} - first_case_id) throw InvalidInput("config: case id range overflows");
}

Nat random_prime(int digits, Rng& rng) {
    if (digits < 1 || digits > 18) throw InvalidInput("random_prime: digits must lie in [1, 18]");
    const Nat lo = pow10(digits - 1);
    const Nat hi = pow10(digits) - 1;
    for (int i = 0; i < kMaxPrimeDraws; ++i) {
        Nat candidate = rng.uniform(lo, hi);
        if (is_probable_prime(candidate)) return candidate;
    }
    throw std::runtime_error("random_prime: rejection budget exhausted");
}

Semiprime sample_semiprime(int digits, Rng& rng, PrimeSplit split) {
    if (digits < 2) throw InvalidInput("sample_semiprime: digits must be >= 2");
    const int p_digits = (digits + 1) / 2;
    const int q_digits = split == PrimeSplit::balanced ? p_digits : digits / 2;
    for (int i = 0; i < kMaxPrimeDraws; ++i) {
        Nat p = random_prime(p_digits, rng);
        Nat q = random_prime(q_digits, rng);
        if (p == q) continue;
        Nat n = p * q;
        if (decimal_digits(n) == digits) return {n, p, q};
    }
    throw std::runtime_error("sample_semiprime: rejection budget exhausted");
}

Nat sample_base(Nat n, BaseMode mode, Rng& rng) {
    if (n < 6) throw InvalidInput("sample_base: n must be >= 6");
    if (mode == BaseMode::random) {
        for (int i = 0; i < kMaxBaseDraws; ++i) {
            Nat a = rng.uniform(2, n - 1);
            if (gcd(a, n) == 1) return a;
        }
    } else {
        const Nat top = integer_sqrt(n - 1);
        if (top >= 2) {
            for (int i = 0; i < kMaxBaseDraws; ++i) {
                Nat b = rng.uniform(2, top);
                if (gcd(b, n) == 1) return b * b;
            }
        }
    }
    throw InvalidInput("sample_base: no admissible base for n = " + std::to_string(n));
}

TrialCase make_case(std::uint64_t case_id, int digits, BaseMode mode, std::uint64_t master_seed,
                    PrimeSplit split) {
    TrialCase trial;
    trial.case_id = case_id;
    trial.base_mode = mode;
    trial.seed = case_seed(master_seed, case_id);
    Rng rng(trial.seed);
    trial.semiprime = sample_semiprime(digits, rng, split);
    trial.a = sample_base(trial.semiprime.n, mode, rng);
    return trial;
}

TrialRecord run_trial(const TrialCase& trial, Strategy strategy, std::optional<Nat> bound) {
    TrialRecord rec;
    rec.case_id = trial.case_id;
    rec.n = trial.semiprime.n;
    rec.p = trial.semiprime.p;
    rec.q = trial.semiprime.q;
    rec.digits = decimal_digits(rec.n);
    rec.a = trial.a;
    rec.base_mode = trial.base_mode;
    rec.seed = trial.seed;
    rec.strategy = strategy;
    rec.bound = bound;
    try {
        check_case(trial);
        const Nat n = rec.n;
        const FactorMultiset lambda = factorize(carmichael_exponent(rec.p, rec.q));
        const PeriodRecord period = multiplicative_order(rec.a, n, lambda);
        rec.r = period.order;
        rec.r_digits = decimal_digits(period.order);
        rec.r_distinct_primes = static_cast<int>(period.factors.distinct());
        rec.r_even = period.order % 2 == 0;
        if (rec.r_even) rec.half_power_is_minus_one = mod_pow(rec.a, period.order / 2, n) == n - 1;
        fill_outcome(rec, run_strategy(strategy, n, rec.a, period, bound));
        if (rec.status == TrialStatus::success && rec.factor != rec.p && rec.factor != rec.q)
            throw std::logic_error("trial: reported factor is neither p nor q");
    } catch (const std::exception& e) {
        rec.status = TrialStatus::error;
        rec.error = e.what();
    }
    return rec;
}

TrialRecord run_case(const CampaignConfig& config, std::uint64_t case_id) {
    TrialCase trial;
    trial.case_id = case_id;
    trial.base_mode = config.base_mode;
    trial.seed = case_seed(config.master_seed, case_id);
    Rng rng(trial.seed);
    try {
        trial.semiprime = sample_semiprime(config.digits, rng, config.prime_split);
        trial.a = sample_base(trial.semiprime.n, config.base_mode, rng);
    } catch (const std::exception& e) {
        TrialRecord rec;
        rec.case_id = case_id;
        rec.digits = config.digits;
        rec.base_mode = config.base_mode;
        rec.seed = trial.seed;
        rec.strategy = config.strategy;
        rec.bound = config.bound;
        rec.status = TrialStatus::error;
        rec.error = e.what();
        return rec;
    }
    TrialRecord rec = run_trial(trial, config.strategy, config.bound);
    if (rec.status != TrialStatus::failure) return rec;
    for (unsigned retry = 1; retry <= config.retry_limit; ++retry) {
        TrialCase again = trial;
        again.a = sample_base(trial.semiprime.n, config.base_mode, rng);
        rec.retries_used = retry;
        if (run_trial(again, config.strategy, config.bound).status == TrialStatus::success) {
            rec.retry_resolved = true;
            break;
        }
    }
    return rec;
}

CampaignStats run_campaign(const CampaignConfig& config, const RecordSink& sink) {
    config.validate();
    CampaignStats total;
    const std::uint64_t block = kBlockPerWorker * config.workers;
    std::vector<TrialRecord> buffer;
    for (std::uint64_t start = 0; start < config.trials; start += block) {
        const std::uint64_t count = std::min(block, config.trials - start);
        buffer.assign(count, TrialRecord{});
        std::atomic<std::uint64_t> next{0};
        auto work = [&] {
            for (std::uint64_t i; (i = next.fetch_add(1)) < count;)
                buffer[i] = run_case(config, config.first_case_id + start + i);
        };
        if (config.workers == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < config.workers; ++w) pool.emplace_back(work);
        }
        for (const auto& rec : buffer) {
            if (sink) sink(rec);
            total = merge_stats(total, stats_of(rec));
        }
    }
    return total;
}

std::uint64_t cochran_sample_size(double p_expected, double margin, double z_alpha) {
    if (!(margin > 0)) throw InvalidInput("cochran_sample_size: margin must be > 0");
    if (!(z_alpha > 0)) throw InvalidInput("cochran_sample_size: z_alpha must be > 0");
    if (!(p_expected >= 0 && p_expected <= 1)) throw InvalidInput("cochran_sample_size: p must lie in [0, 1]");
    const long double z = z_alpha;
    const long double p = p_expected;
    const long double e = margin;
    const long double m = z * z * p * (1 - p) / (e * e);
    // Inputs such as 1.96 are not exact binaries; absorb representation error
    // so exact-integer values are not pushed up by one.
    const long double snapped = std::nearbyint(m);
    if (std::fabs(m - snapped) <= m * 1e-14L) return static_cast<std::uint64_t>(snapped);
    return static_cast<std::uint64_t>(std::ceil(m));
}

}  // namespace allz
