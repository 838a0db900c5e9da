#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library code paths they check.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 pow_mod(u64 base, u64 exponent, u64 modulus) {
    u64 r = 1 % modulus;
    for (u64 i = 0; i < exponent; ++i) r = r * (base % modulus) % modulus;
    return r;
}

/// Largest d dividing both, by downward search.
inline u64 gcd(u64 x, u64 y) {
    if (x == 0) return y;
    if (y == 0) return x;
    for (u64 d = x < y ? x : y; d > 1; --d)
        if (x % d == 0 && y % d == 0) return d;
    return 1;
}

inline bool is_prime(u64 x) {
    if (x < 2) return false;
    for (u64 d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

inline std::vector<bool> sieve(u64 limit) {
    std::vector<bool> prime(limit + 1, true);
    prime[0] = false;
    if (limit >= 1) prime[1] = false;
    for (u64 i = 2; i * i <= limit; ++i)
        if (prime[i])
            for (u64 j = i * i; j <= limit; j += i) prime[j] = false;
    return prime;
}

/// prime -> multiplicity by trial division over every integer.
inline std::map<u64, unsigned> factor(u64 x) {
    std::map<u64, unsigned> out;
    for (u64 d = 2; d * d <= x; ++d)
        while (x % d == 0) {
            ++out[d];
            x /= d;
        }
    if (x > 1) ++out[x];
    return out;
}

inline u64 order(u64 a, u64 n) {
    u64 x = a % n;
    u64 r = 1;
    while (x != 1) {
        x = x * a % n;
        ++r;
    }
    return r;
}

struct Semiprime {
    u64 n, p, q;
};

/// Every n = p * q < limit with p < q prime.
inline std::vector<Semiprime> semiprimes_below(u64 limit) {
    auto prime = sieve(limit);
    std::vector<Semiprime> out;
    for (u64 p = 2; p * p < limit; ++p) {
        if (!prime[p]) continue;
        for (u64 q = p + 1; p * q < limit; ++q)
            if (prime[q]) out.push_back({p * q, p, q});
    }
    return out;
}

/// ceil(z^2 p (1 - p) / E^2) for p = p_num / 10^4, E = e_num / 10^4,
/// z = z_num / 100, in exact integer arithmetic:
/// z_num^2 * p_num * (10^4 - p_num) / (10^4 * e_num^2).
inline u64 cochran_exact(u64 p_num, u64 e_num, u64 z_num) {
    __extension__ typedef unsigned __int128 u128;
    u128 numerator = static_cast<u128>(z_num) * z_num * p_num * (10000 - p_num);
    u128 denominator = static_cast<u128>(10000) * e_num * e_num;
    return static_cast<u64>((numerator + denominator - 1) / denominator);
}

}  // namespace oracle
