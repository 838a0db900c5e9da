#include "allz/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace allz {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr Nat kTrialLimit = 10000;

Nat add_mod(Nat a, Nat b, Nat m) {
    Nat s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

bool miller_rabin_round(Nat n, Nat witness, Nat d, unsigned s) {
    Nat x = mod_pow(witness % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's cycle-finding rho. Returns a nontrivial divisor of composite n, or n
// when this constant c fails (the caller retries with another c).
Nat rho_brent(Nat n, Nat c) {
    if (n % 2 == 0) return 2;
    Nat y = 2, x = 2, ys = 2, q = 1, g = 1;
    const Nat m = 128;
    Nat r = 1;
    auto f = [&](Nat v) { return add_mod(mul_mod(v, v, n), c, n); };
    do {
        x = y;
        for (Nat i = 0; i < r; ++i) y = f(y);
        Nat k = 0;
        while (k < r && g == 1) {
            ys = y;
            Nat steps = std::min(m, r - k);
            for (Nat i = 0; i < steps; ++i) {
                y = f(y);
                q = mul_mod(q, x > y ? x - y : y - x, n);
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_into(Nat x, FactorMultiset& out) {
    if (x == 1) return;
    if (is_probable_prime(x)) {
        out.add(x);
        return;
    }
    for (Nat c = 1;; ++c) {
        Nat d = rho_brent(x, c);
        if (d != x && d != 1) {
            factor_into(d, out);
            factor_into(x / d, out);
            return;
        }
    }
}

}  // namespace

Nat FactorMultiset::product() const {
    Nat value = 1;
    for (const auto& e : entries)
        for (unsigned i = 0; i < e.multiplicity; ++i) value *= e.prime;
    return value;
}

std::vector<Nat> FactorMultiset::primes() const {
    std::vector<Nat> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.prime);
    return out;
}

void FactorMultiset::add(Nat prime, unsigned multiplicity) {
    if (multiplicity == 0) return;
    auto it = std::lower_bound(entries.begin(), entries.end(), prime,
                               [](const PrimePower& e, Nat p) { return e.prime < p; });
    if (it != entries.end() && it->prime == prime)
        it->multiplicity += multiplicity;
    else
        entries.insert(it, PrimePower{prime, multiplicity});
}

Nat mul_mod(Nat a, Nat b, Nat modulus) {
    return static_cast<Nat>(static_cast<u128>(a) * b % modulus);
}

Nat mod_pow(Nat base, Nat exponent, Nat modulus) {
    if (modulus < 2) throw InvalidInput("mod_pow: modulus must be >= 2");
    Nat result = 1;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    return result;
}

Nat gcd(Nat x, Nat y) { return std::gcd(x, y); }

Nat lcm(Nat x, Nat y) {
    if (x == 0 || y == 0) return 0;
    return x / gcd(x, y) * y;
}

Nat gcd_power_minus_one(Nat base, Nat exponent, Nat n) {
    Nat t = mod_pow(base, exponent, n);
    return gcd((t + n - 1) % n, n);
}

bool is_probable_prime(Nat x) {
    static constexpr std::array<Nat, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (x < 2) return false;
    for (Nat p : kWitnesses) {
        if (x == p) return true;
        if (x % p == 0) return false;
    }
    Nat d = x - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (Nat w : kWitnesses)
        if (!miller_rabin_round(x, w, d, s)) return false;
    return true;
}

Nat integer_sqrt(Nat x) {
    if (x < 2) return x;
    // Floating estimate, then exact correction.
    Nat r = static_cast<Nat>(std::sqrt(static_cast<long double>(x)));
    while (static_cast<u128>(r) * r > x) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

std::optional<Nat> perfect_square_root(Nat x) {
    Nat r = integer_sqrt(x);
    if (static_cast<u128>(r) * r == x) return r;
    return std::nullopt;
}

FactorMultiset factorize(Nat x) {
    if (x == 0) throw InvalidInput("factorize: zero has no prime factorization");
    FactorMultiset out;
    for (Nat d = 2; d <= kTrialLimit && d * d <= x; d += (d == 2 ? 1 : 2)) {
        unsigned m = 0;
        while (x % d == 0) {
            x /= d;
            ++m;
        }
        out.add(d, m);
    }
    if (x > 1) factor_into(x, out);
    return out;
}

std::vector<Nat> distinct_primes_bounded(Nat x, Nat bound) {
    if (x == 0) throw InvalidInput("distinct_primes_bounded: x must be >= 1");
    std::vector<Nat> out;
    for (Nat d = 2; d <= bound && x > 1; d += (d == 2 ? 1 : 2)) {
        if (d * d > x) {
            // What remains has no divisor below d, so it is prime.
            if (x <= bound) out.push_back(x);
            break;
        }
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    return out;
}

int decimal_digits(Nat x) {
    int digits = 1;
    while (x >= 10) {
        x /= 10;
        ++digits;
    }
    return digits;
}

Nat pow10(int exponent) {
    Nat v = 1;
    for (int i = 0; i < exponent; ++i) v *= 10;
    return v;
}

}  // namespace allz
