#include "allz/strategies.hpp"

#include <string>

namespace allz {

namespace {

// Returns a completed outcome when gcd(a, n) already splits n.
std::optional<FactorOutcome> shortcut(Nat n, Nat a) {
    Nat g0 = gcd(a, n);
    if (g0 == 1) return std::nullopt;
    FactorOutcome out;
    out.gcd_count = 1;
    AttemptResult attempt{AttemptKind::gcd_shortcut, std::nullopt, g0, classify_gcd(g0, n)};
    if (attempt.found()) {
        out.status = Status::success;
        out.factor = g0;
        out.witness = attempt;
    } else {
        // a = 0 mod n; nothing to learn from the period.
        out.failure_reason = FailureReason::all_divisors_trivial;
    }
    return out;
}

// Appends an attempt; returns true when it produced a factor.
bool record(FactorOutcome& out, const AttemptResult& attempt) {
    out.attempts.push_back(attempt);
    ++out.gcd_count;
    if (!attempt.found()) return false;
    out.status = Status::success;
    out.factor = attempt.gcd_value;
    out.witness = attempt;
    out.failure_reason.reset();
    return true;
}

FactorOutcome fresh() {
    FactorOutcome out;
    out.gcd_count = 1;
    return out;
}

bool try_fallback(FactorOutcome& out, Nat n, Nat a, Nat r) {
    auto b = perfect_square_root(a);
    if (!b || *b < 2) return false;
    if (record(out, fallback_square(n, *b, r))) return true;
    out.failure_reason = FailureReason::fallback_trivial;
    return false;
}

}  // namespace

std::string_view to_string(AttemptKind kind) {
    switch (kind) {
        case AttemptKind::gcd_shortcut: return "gcd_shortcut";
        case AttemptKind::divisor: return "divisor";
        case AttemptKind::conjugate: return "conjugate";
        case AttemptKind::fallback: return "fallback";
    }
    return "?";
}

std::string_view to_string(AttemptOutcome outcome) {
    switch (outcome) {
        case AttemptOutcome::factor_found: return "factor_found";
        case AttemptOutcome::trivial_one: return "trivial_one";
        case AttemptOutcome::trivial_n: return "trivial_n";
    }
    return "?";
}

std::string_view to_string(Status status) {
    return status == Status::success ? "success" : "failure";
}

std::string_view to_string(FailureReason reason) {
    switch (reason) {
        case FailureReason::odd_period_unusable: return "odd_period_unusable";
        case FailureReason::half_power_minus_one: return "half_power_minus_one";
        case FailureReason::all_divisors_trivial: return "all_divisors_trivial";
        case FailureReason::fallback_trivial: return "fallback_trivial";
    }
    return "?";
}

std::string_view to_string(Strategy strategy) {
    switch (strategy) {
        case Strategy::traditional: return "traditional";
        case Strategy::dong2023: return "dong2023";
        case Strategy::allz: return "allz";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
    for (Strategy s : {Strategy::traditional, Strategy::dong2023, Strategy::allz})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

std::optional<FailureReason> parse_failure_reason(std::string_view name) {
    for (FailureReason r : {FailureReason::odd_period_unusable, FailureReason::half_power_minus_one,
                            FailureReason::all_divisors_trivial, FailureReason::fallback_trivial})
        if (to_string(r) == name) return r;
    return std::nullopt;
}

AttemptOutcome classify_gcd(Nat g, Nat n) {
    if (g == n) return AttemptOutcome::trivial_n;
    if (g <= 1) return AttemptOutcome::trivial_one;
    return AttemptOutcome::factor_found;
}

AttemptResult attempt_divisor(Nat n, Nat a, Nat r, Nat z) {
    if (z == 0 || r % z != 0)
        throw InvalidInput("attempt_divisor: z = " + std::to_string(z) + " does not divide r = " +
                           std::to_string(r));
    if (!is_probable_prime(z)) throw InvalidInput("attempt_divisor: z = " + std::to_string(z) + " is not prime");
    Nat g = gcd_power_minus_one(a, r / z, n);
    return {AttemptKind::divisor, z, g, classify_gcd(g, n)};
}

AttemptResult fallback_square(Nat n, Nat b, Nat r) {
    if (gcd(b, n) != 1) throw InvalidInput("fallback_square: gcd(b, n) > 1");
    Nat g = gcd_power_minus_one(b, r, n);
    return {AttemptKind::fallback, std::nullopt, g, classify_gcd(g, n)};
}

FactorOutcome all_z(Nat n, Nat a, const PeriodRecord& period, std::optional<Nat> bound) {
    if (auto early = shortcut(n, a)) return *early;
    FactorOutcome out = fresh();
    const Nat r = period.order;
    std::vector<Nat> primes;
    if (bound)
        primes = distinct_primes_bounded(r, *bound);
    else
        primes = period.factors.product() == r ? period.factors.primes() : factorize(r).primes();
    for (Nat z : primes)
        if (record(out, attempt_divisor(n, a, r, z))) return out;
    out.failure_reason = FailureReason::all_divisors_trivial;
    try_fallback(out, n, a, r);
    return out;
}

FactorOutcome traditional_shor(Nat n, Nat a, const PeriodRecord& period) {
    if (auto early = shortcut(n, a)) return *early;
    FactorOutcome out = fresh();
    const Nat r = period.order;
    if (r % 2 != 0) {
        out.failure_reason = FailureReason::odd_period_unusable;
        return out;
    }
    Nat t = mod_pow(a, r / 2, n);
    if (t == n - 1) {
        out.failure_reason = FailureReason::half_power_minus_one;
        return out;
    }
    Nat minus = gcd((t + n - 1) % n, n);
    if (record(out, {AttemptKind::divisor, Nat{2}, minus, classify_gcd(minus, n)})) return out;
    Nat plus = gcd((t + 1) % n, n);
    if (record(out, {AttemptKind::conjugate, Nat{2}, plus, classify_gcd(plus, n)})) return out;
    out.failure_reason = FailureReason::all_divisors_trivial;
    return out;
}

FactorOutcome dong2023(Nat n, Nat a, const PeriodRecord& period) {
    FactorOutcome out = traditional_shor(n, a, period);
    if (out.succeeded() || gcd(a, n) != 1) return out;
    const Nat r = period.order;
    if (r % 3 == 0) {
        if (record(out, attempt_divisor(n, a, r, 3))) return out;
        out.failure_reason = FailureReason::all_divisors_trivial;
    }
    try_fallback(out, n, a, r);
    return out;
}

FactorOutcome run_strategy(Strategy strategy, Nat n, Nat a, const PeriodRecord& period,
                           std::optional<Nat> bound) {
    switch (strategy) {
        case Strategy::traditional: return traditional_shor(n, a, period);
        case Strategy::dong2023: return dong2023(n, a, period);
        case Strategy::allz: return all_z(n, a, period, bound);
    }
    throw InvalidInput("run_strategy: unknown strategy");
}

}  // namespace allz
