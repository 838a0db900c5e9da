#include "allz/period_oracle.hpp"

#include <string>

namespace allz {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr Nat kBruteForceLimit = 1000000;

}  // namespace

Nat carmichael_exponent(Nat p, Nat q) {
    if (p == q) throw InvalidInput("carmichael_exponent: p and q must be distinct");
    if (!is_probable_prime(p) || !is_probable_prime(q))
        throw InvalidInput("carmichael_exponent: p and q must be prime");
    return lcm(p - 1, q - 1);
}

Nat carmichael_lambda(const FactorMultiset& n_factors) {
    Nat lambda = 1;
    for (const auto& [p, k] : n_factors.entries) {
        Nat part;
        if (p == 2) {
            part = k == 1 ? 1 : k == 2 ? 2 : Nat{1} << (k - 2);
        } else {
            part = p - 1;
            for (unsigned i = 1; i < k; ++i) part *= p;
        }
        lambda = lcm(lambda, part);
    }
    return lambda;
}

PeriodRecord multiplicative_order(Nat a, Nat n, const std::optional<FactorMultiset>& exponent_hint) {
    if (n < 2) throw InvalidInput("multiplicative_order: n must be >= 2");
    if (a == 0 || a >= n) throw InvalidInput("multiplicative_order: a must satisfy 1 <= a < n");
    if (Nat g = gcd(a, n); g > 1)
        throw PreconditionError("multiplicative_order: gcd(a, n) = " + std::to_string(g) + " > 1");

    FactorMultiset exponent = exponent_hint ? *exponent_hint : factorize(carmichael_lambda(factorize(n)));
    Nat order = exponent.product();
    if (mod_pow(a, order, n) != 1)
        throw InvalidInput("multiplicative_order: exponent hint is not a multiple of the order");

    PeriodRecord out;
    for (const auto& [z, k] : exponent.entries) {
        unsigned kept = k;
        while (kept > 0 && mod_pow(a, order / z, n) == 1) {
            order /= z;
            --kept;
        }
        out.factors.add(z, kept);
    }
    out.order = order;
    return out;
}

Nat order_brute_force(Nat a, Nat n) {
    if (n < 2 || n > kBruteForceLimit)
        throw InvalidInput("order_brute_force: n must lie in [2, 10^6]");
    a %= n;
    if (gcd(a, n) != 1) throw PreconditionError("order_brute_force: gcd(a, n) > 1");
    // Barrett reduction: x * a < 2^40, so one correction step suffices.
    const Nat reciprocal = ~Nat{0} / n;
    Nat x = a % n;
    Nat r = 1;
    while (x != 1) {
        Nat product = x * a;
        Nat q = static_cast<Nat>((static_cast<u128>(product) * reciprocal) >> 64);
        x = product - q * n;
        if (x >= n) x -= n;
        ++r;
    }
    return r;
}

PeriodRecord with_bound(PeriodRecord period, Nat bound) {
    period.bound = bound;
    period.bounded_primes = distinct_primes_bounded(period.order, bound);
    return period;
}

bool certifies_order(const PeriodRecord& period, Nat a, Nat n) {
    if (period.order == 0 || period.factors.product() != period.order) return false;
    if (mod_pow(a, period.order, n) != 1) return false;
    for (Nat z : period.factors.primes())
        if (mod_pow(a, period.order / z, n) == 1) return false;
    return true;
}

}  // namespace allz
