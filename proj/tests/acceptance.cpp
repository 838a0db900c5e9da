// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Seeds are fixed up front; the thresholds are the published tolerances.

#include "allz/campaign.hpp"
#include "allz/json_io.hpp"
#include "allz/paper_fixtures.hpp"
#include "allz/period_oracle.hpp"
#include "allz/stats.hpp"
#include "allz/strategies.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fmt/format.h>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace allz;

namespace {

constexpr std::uint64_t kSeed = 1;

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Verdict {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << v.detail
              << fmt::format(" ({:.2f} s)", seconds) << std::endl;
}

std::vector<TrialRecord> collect(const CampaignConfig& config, CampaignStats* stats = nullptr) {
    std::vector<TrialRecord> records;
    records.reserve(config.trials);
    CampaignStats s = run_campaign(config, [&](const TrialRecord& r) { records.push_back(r); });
    if (stats) *stats = s;
    return records;
}

CampaignConfig config_for(int digits, std::uint64_t trials, Strategy strategy, BaseMode mode, std::uint64_t seed) {
    CampaignConfig c;
    c.digits = digits;
    c.trials = trials;
    c.strategy = strategy;
    c.base_mode = mode;
    c.master_seed = seed;
    c.workers = workers();
    return c;
}

bool factors_valid(const std::vector<TrialRecord>& records, std::string& why) {
    for (const auto& r : records) {
        if (r.status == TrialStatus::error) {
            why = "error record at case " + std::to_string(r.case_id) + ": " + r.error.value_or("");
            return false;
        }
        if (r.status == TrialStatus::success && r.factor != r.p && r.factor != r.q) {
            why = "bad factor at case " + std::to_string(r.case_id);
            return false;
        }
    }
    return true;
}

std::string jsonl(const CampaignConfig& config) {
    std::string out;
    run_campaign(config, [&](const TrialRecord& r) { (out += to_jsonl_line(r)) += '\n'; });
    return out;
}

CampaignStats random_stats(std::mt19937_64& rng) {
    auto small = [&] { return rng() % 1000; };
    CampaignStats s;
    s.successes = small();
    s.failures = small();
    s.trials = s.successes + s.failures;
    const char* reasons[] = {"odd_period_unusable", "half_power_minus_one", "all_divisors_trivial",
                             "fallback_trivial"};
    for (int i = rng() % 4; i > 0; --i) s.failures_by_reason[reasons[rng() % 4]] += small();
    for (int i = rng() % 4; i > 0; --i) s.gcd_count_histogram[1 + rng() % 6] += small();
    for (int i = rng() % 3; i > 0; --i) s.attempts_per_success_histogram[1 + rng() % 3] += small();
    s.unresolved = small();
    s.gcd_count_sum = small();
    s.period_count = small();
    s.r_digits_sum = small();
    s.r_distinct_primes_sum = small();
    s.even_r_count = small();
    s.half_power_minus_one_count = small();
    for (auto& c : s.cumulative_success_by_bound) c = small();
    s.fallback_tried_count = small();
    s.fallback_success_count = small();
    return s;
}

}  // namespace

int main() {
    const auto total_start = std::chrono::steady_clock::now();

    criterion(1, "published failure-table replay", [] {
        const auto start = std::chrono::steady_clock::now();
        std::size_t ok = 0;
        std::string bad;
        for (const auto& f : failure_fixtures()) {
            const FixtureCheck check = check_fixture(f);
            if (check.passed)
                ++ok;
            else
                bad += " n=" + std::to_string(f.n) + " a=" + std::to_string(f.a) + " (" + check.detail + ")";
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::size_t rows = failure_fixtures().size();
        return Verdict{ok == 13 && rows == 13 && s < 1.0,
                       fmt::format("{}/{} rows verified, {:.4f} s (limit 1 s){}", ok, rows, s, bad)};
    });

    criterion(2, "order-oracle equivalence, semiprimes n < 10^4", [] {
        const auto start = std::chrono::steady_clock::now();
        std::uint64_t pairs = 0, mismatches = 0;
        for (const auto& sp : oracle::semiprimes_below(10000))
            for (Nat a = 1; a < sp.n; ++a) {
                if (gcd(a, sp.n) != 1) continue;
                ++pairs;
                if (multiplicative_order(a, sp.n).order != order_brute_force(a, sp.n)) ++mismatches;
            }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return Verdict{mismatches == 0 && s < 120.0,
                       fmt::format("{} pairs, {} mismatches, {:.1f} s (limit 120 s)", pairs, mismatches, s)};
    });

    criterion(3, "success-rate comparison at 4-6 digits, 10000 trials each", [] {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        for (int d : {4, 5, 6}) {
            Rational rate[3];
            for (Strategy s : {Strategy::traditional, Strategy::dong2023, Strategy::allz}) {
                CampaignStats stats;
                std::string why;
                if (!factors_valid(collect(config_for(d, 10000, s, BaseMode::random, kSeed), &stats), why))
                    return Verdict{false, why};
                rate[static_cast<int>(s)] = stats.success_rate();
            }
            const double t = rate[0].approx(), g = rate[1].approx(), z = rate[2].approx();
            const bool ok = z >= 0.95 && z <= 1.0 && t >= 0.65 && t <= 0.80 && t < g && g < z;
            v.pass = v.pass && ok;
            v.detail += fmt::format("d={} traditional={} dong2023={} allz={}; ", d, rate[0].fixed(), rate[1].fixed(),
                                    rate[2].fixed());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        v.pass = v.pass && s < 300.0;
        v.detail += fmt::format("{:.1f} s (limit 300 s)", s);
        return v;
    });

    // Criteria 4-6 share one 7-digit record set.
    const auto seven_start = std::chrono::steady_clock::now();
    CampaignStats seven_stats;
    const std::vector<TrialRecord> seven =
        collect(config_for(7, 50000, Strategy::allz, BaseMode::random, kSeed), &seven_stats);
    const double seven_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - seven_start).count();

    criterion(4, "7-digit near-perfection, 50000 trials", [&] {
        std::string why;
        if (!factors_valid(seven, why)) return Verdict{false, why};
        const bool ok = seven_stats.failures <= 10 && seven_stats.successes * 10000 >= seven_stats.trials * 9998 &&
                        seven_seconds < 900.0;
        return Verdict{ok, fmt::format("success {} = {}, {} failures (limit 10), {:.1f} s (limit 900 s)",
                                       seven_stats.success_rate().exact(), seven_stats.success_rate().fixed(),
                                       seven_stats.failures, seven_seconds)};
    });

    criterion(5, "bounded-divisor sensitivity on the 7-digit set", [&] {
        const Rational class3 = seven_stats.bound_class_rate(2);
        std::uint64_t mismatches = 0;
        for (const auto& r : seven) {
            const FactorMultiset hint = factorize(carmichael_exponent(r.p, r.q));
            const PeriodRecord period = multiplicative_order(r.a, r.n, hint);
            const FactorOutcome bounded = all_z(r.n, r.a, period, 9999);
            if (bounded.succeeded() != (r.status == TrialStatus::success)) ++mismatches;
        }
        return Verdict{class3.approx() >= 0.995 && mismatches == 0,
                       fmt::format("class <= 3 digits {} (limit 0.995000), class <= 4 status mismatches {}",
                                   class3.fixed(), mismatches)};
    });

    criterion(6, "GCD economy at 7 digits", [&] {
        const Rational mean = seven_stats.mean_gcd_count();
        return Verdict{mean.approx() < 5.0, fmt::format("mean gcd_count {} (limit < 5)", mean.fixed())};
    });

    criterion(7, "perfect-square vs random base structure at 6-8 digits", [] {
        Verdict v;
        for (int d : {6, 7, 8}) {
            CampaignStats rnd, sq;
            collect(config_for(d, 10000, Strategy::allz, BaseMode::random, kSeed), &rnd);
            collect(config_for(d, 10000, Strategy::allz, BaseMode::perfect_square, kSeed), &sq);
            const double rd = rnd.mean_r_digits().approx(), sd = sq.mean_r_digits().approx();
            const double rp = rnd.mean_r_distinct_primes().approx(), sp = sq.mean_r_distinct_primes().approx();
            v.pass = v.pass && sd < rd && sp < rp;
            v.detail += fmt::format("d={} r_digits {} < {}, r_primes {} < {}; ", d, sq.mean_r_digits().fixed(),
                                    rnd.mean_r_digits().fixed(), sq.mean_r_distinct_primes().fixed(),
                                    rnd.mean_r_distinct_primes().fixed());
        }
        return v;
    });

    criterion(8, "property suites", [&] {
        std::vector<std::string> broken;

        // Superset and factor validity, exhaustive over semiprimes n < 10^4.
        std::uint64_t pairs = 0, superset_breaks = 0, invalid = 0;
        for (const auto& sp : oracle::semiprimes_below(10000)) {
            const FactorMultiset hint = factorize(carmichael_exponent(sp.p, sp.q));
            for (Nat a = 2; a < sp.n; ++a) {
                if (gcd(a, sp.n) != 1) continue;
                ++pairs;
                const PeriodRecord period = multiplicative_order(a, sp.n, hint);
                const FactorOutcome t = traditional_shor(sp.n, a, period);
                const FactorOutcome g = dong2023(sp.n, a, period);
                const FactorOutcome z = all_z(sp.n, a, period);
                if ((t.succeeded() && !g.succeeded()) || (g.succeeded() && !z.succeeded())) ++superset_breaks;
                for (const FactorOutcome* o : {&t, &g, &z})
                    if (o->succeeded() && *o->factor != sp.p && *o->factor != sp.q) ++invalid;
            }
        }
        if (superset_breaks) broken.push_back("superset");
        if (invalid) broken.push_back("factor validity (exhaustive)");

        // Bound monotonicity on 10^4 random 7-digit cases.
        const std::vector<Nat> bounds{2, 3, 5, 7, 11, 31, 97, 101, 997, 1009, 9973, 9999};
        std::uint64_t monotone_breaks = 0, cap_breaks = 0;
        for (std::uint64_t id = 0; id < 10000; ++id) {
            const TrialCase c = make_case(id, 7, id % 2 ? BaseMode::perfect_square : BaseMode::random, kSeed + 100);
            const Nat n = c.semiprime.n;
            const PeriodRecord period =
                multiplicative_order(c.a, n, factorize(carmichael_exponent(c.semiprime.p, c.semiprime.q)));
            bool previous = false;
            for (Nat b : bounds) {
                const bool ok = all_z(n, c.a, period, b).succeeded();
                if (previous && !ok) ++monotone_breaks;
                previous = ok;
            }
            const Nat largest = period.factors.empty() ? 2 : std::max<Nat>(2, period.factors.entries.back().prime);
            if (all_z(n, c.a, period, largest).status != all_z(n, c.a, period).status) ++cap_breaks;
        }
        if (monotone_breaks || cap_breaks) broken.push_back("bound monotonicity");

        // Merge laws on 10^3 random triples.
        std::mt19937_64 rng(kSeed);
        std::uint64_t law_breaks = 0;
        for (int i = 0; i < 1000; ++i) {
            const CampaignStats x = random_stats(rng), y = random_stats(rng), z = random_stats(rng);
            if (merge_stats(merge_stats(x, y), z) != merge_stats(x, merge_stats(y, z))) ++law_breaks;
            if (merge_stats(x, y) != merge_stats(y, x)) ++law_breaks;
            if (merge_stats(CampaignStats{}, x) != x || merge_stats(x, CampaignStats{}) != x) ++law_breaks;
        }
        if (law_breaks) broken.push_back("merge laws");

        // Determinism across runs and worker counts.
        CampaignConfig c = config_for(6, 5000, Strategy::allz, BaseMode::random, kSeed + 200);
        c.workers = 1;
        const std::string first = jsonl(c), second = jsonl(c);
        c.workers = 4;
        const std::string parallel = jsonl(c);
        const bool deterministic = first == second && first == parallel && !first.empty();
        if (!deterministic) broken.push_back("determinism");

        // Factor validity on every campaign success.
        std::string why;
        if (!factors_valid(seven, why)) broken.push_back("factor validity (campaign): " + why);

        std::string detail = fmt::format(
            "superset {} pairs/{} breaks, monotonicity 10000 cases/{} breaks/{} cap mismatches, merge laws {} breaks, "
            "JSONL {} bytes identical x3: {}",
            pairs, superset_breaks, monotone_breaks, cap_breaks, law_breaks, first.size(), deterministic);
        for (const auto& b : broken) detail += "; broken: " + b;
        return Verdict{broken.empty(), detail};
    });

    criterion(9, "Cochran helper", [] {
        const std::uint64_t base = cochran_sample_size(0.5, 0.01, 1.96);
        std::mt19937_64 rng(kSeed);
        int mismatches = 0;
        for (int i = 0; i < 1000; ++i) {
            const Nat p = rng() % 10001, e = 1 + rng() % 10000, z = 1 + rng() % 400;
            if (cochran_sample_size(p / 1e4, e / 1e4, z / 100.0) != oracle::cochran_exact(p, e, z)) ++mismatches;
        }
        return Verdict{base == 9604 && mismatches == 0,
                       fmt::format("(0.5, 0.01, 1.96) -> {}, {} of 1000 random inputs mismatch", base, mismatches)};
    });

    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count();
    std::cout << fmt::format("{}/9 criteria passed in {:.1f} s", 9 - failures, total) << std::endl;
    return failures == 0 ? 0 : 1;
}
