#pragma once

// Exact multiplicative order, standing in for ideal phase estimation. The
// oracle may factor n; the strategies only ever see (n, a, PeriodRecord).

#include "allz/numtheory.hpp"

#include <optional>
#include <vector>

namespace allz {

struct PeriodRecord {
    Nat order = 0;
    FactorMultiset factors;             // complete factorization of order
    std::optional<Nat> bound;           // set when a bounded view was taken
    std::vector<Nat> bounded_primes;    // primes <= bound dividing order

    bool bounded() const { return bound.has_value(); }

    friend bool operator==(const PeriodRecord&, const PeriodRecord&) = default;
};

/// lcm(p - 1, q - 1) for distinct primes p, q.
Nat carmichael_exponent(Nat p, Nat q);

/// Carmichael lambda of the integer whose factorization is given.
Nat carmichael_lambda(const FactorMultiset& n_factors);

/// Least r >= 1 with a^r = 1 (mod n), fully factored. exponent_hint, when
/// given, is the factorization of some multiple of the order (for instance
/// lambda(n)); otherwise lambda(n) is derived by factoring n.
PeriodRecord multiplicative_order(Nat a, Nat n,
                                  const std::optional<FactorMultiset>& exponent_hint = std::nullopt);

/// Successive multiplication. Guarded to n <= 10^6.
Nat order_brute_force(Nat a, Nat n);

/// Attaches the distinct primes of the order that do not exceed bound.
PeriodRecord with_bound(PeriodRecord period, Nat bound);

/// a^r = 1 and a^(r/z) != 1 for every prime z | r.
bool certifies_order(const PeriodRecord& period, Nat a, Nat n);

}  // namespace allz
