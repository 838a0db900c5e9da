#include "allz/period_oracle.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace allz;

TEST_CASE("carmichael_exponent examples") {
    CHECK(carmichael_exponent(3, 5) == 4);
    CHECK(carmichael_exponent(11, 13) == 60);
    // 1008 = 2^4 3^2 7, 2002 = 2 7 11 13.
    CHECK(carmichael_exponent(1009, 2003) == 16 * 9 * 7 * 11 * 13);
}

TEST_CASE("carmichael_exponent rejects bad input") {
    CHECK_THROWS_AS(carmichael_exponent(7, 7), InvalidInput);
    CHECK_THROWS_AS(carmichael_exponent(9, 7), InvalidInput);
    CHECK_THROWS_AS(carmichael_exponent(1, 7), InvalidInput);
}

TEST_CASE("carmichael_lambda of prime powers") {
    CHECK(carmichael_lambda(factorize(8)) == 2);
    CHECK(carmichael_lambda(factorize(16)) == 4);
    CHECK(carmichael_lambda(factorize(4)) == 2);
    CHECK(carmichael_lambda(factorize(2)) == 1);
    CHECK(carmichael_lambda(factorize(9)) == 6);
    CHECK(carmichael_lambda(factorize(561)) == 80);
    CHECK(carmichael_lambda(factorize(1)) == 1);
}

TEST_CASE("multiplicative_order examples") {
    CHECK(multiplicative_order(2, 15).order == 4);
    CHECK(multiplicative_order(1316667, 2540107).order == 27);
    const PeriodRecord r = multiplicative_order(36, 1406371);
    CHECK(r.order == 15);
    CHECK(r.factors == FactorMultiset{{{3, 1}, {5, 1}}});
    CHECK(multiplicative_order(1, 15).order == 1);
    CHECK(multiplicative_order(1, 15).factors.empty());
}

TEST_CASE("multiplicative_order preconditions") {
    CHECK_THROWS_AS(multiplicative_order(5, 15), PreconditionError);
    CHECK_THROWS_AS(multiplicative_order(0, 15), InvalidInput);
    CHECK_THROWS_AS(multiplicative_order(15, 15), InvalidInput);
    CHECK_THROWS_AS(multiplicative_order(1, 1), InvalidInput);
    // 2^3 != 1 mod 15, so 3 cannot be a multiple of the order.
    CHECK_THROWS_AS(multiplicative_order(2, 15, factorize(3)), InvalidInput);
}

TEST_CASE("multiplicative_order with a hint matches the hintless path") {
    const Nat p = 1567, q = 1621, n = p * q;
    const FactorMultiset hint = factorize(carmichael_exponent(p, q));
    for (Nat a : {2ULL, 3ULL, 1316667ULL, 2540106ULL, 12345ULL})
        CHECK(multiplicative_order(a, n, hint) == multiplicative_order(a, n));
    // Any multiple of the order works as a hint.
    CHECK(multiplicative_order(2, 15, factorize(4 * 9 * 5)).order == 4);
}

TEST_CASE("multiplicative_order on general composites") {
    CHECK(multiplicative_order(3, 16).order == oracle::order(3, 16));
    CHECK(multiplicative_order(2, 27).order == oracle::order(2, 27));
    CHECK(multiplicative_order(7, 1000).order == oracle::order(7, 1000));
}

TEST_CASE("order_brute_force examples") {
    CHECK(order_brute_force(2, 21) == 6);
    CHECK(order_brute_force(4, 21) == 3);
    CHECK(order_brute_force(1, 15) == 1);
    CHECK_THROWS_AS(order_brute_force(2, 1000003), InvalidInput);
    CHECK_THROWS_AS(order_brute_force(3, 15), PreconditionError);
}

TEST_CASE("order_brute_force agrees with the naive loop") {
    for (Nat n = 2; n < 400; ++n)
        for (Nat a = 1; a < n; ++a)
            if (oracle::gcd(a, n) == 1) REQUIRE(order_brute_force(a, n) == oracle::order(a, n));
    CHECK(order_brute_force(2, 999983) == oracle::order(2, 999983));
}

TEST_CASE("oracle equivalence and certificates on semiprimes below 2000") {
    for (const auto& s : oracle::semiprimes_below(2000)) {
        const Nat lambda = carmichael_exponent(s.p, s.q);
        const FactorMultiset hint = factorize(lambda);
        for (Nat a = 1; a < s.n; ++a) {
            if (gcd(a, s.n) != 1) continue;
            const PeriodRecord r = multiplicative_order(a, s.n, hint);
            REQUIRE(r.order == order_brute_force(a, s.n));
            REQUIRE(certifies_order(r, a, s.n));
            REQUIRE(lambda % r.order == 0);
        }
    }
}

TEST_CASE("with_bound keeps only small primes") {
    PeriodRecord r = multiplicative_order(3012304, 3825407);
    REQUIRE(r.order == 46);
    CHECK_FALSE(r.bounded());
    PeriodRecord b = with_bound(r, 10);
    CHECK(b.bounded());
    CHECK(b.bounded_primes == std::vector<Nat>{2});
    CHECK(with_bound(r, 23).bounded_primes == std::vector<Nat>{2, 23});
}

TEST_CASE("certifies_order rejects non-minimal periods") {
    PeriodRecord r{12, factorize(12), std::nullopt, {}};
    CHECK_FALSE(certifies_order(r, 2, 15));  // true order is 4
    CHECK(certifies_order(multiplicative_order(2, 15), 2, 15));
}
