#pragma once

// Exact machine-integer number theory: modular powers, gcd, primality,
// integer square roots and factorization of values below 2^63.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace allz {

using Nat = std::uint64_t;

class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Violated caller contract that the calling layer should have ruled out.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

struct PrimePower {
    Nat prime = 0;
    unsigned multiplicity = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly ascending, multiplicities >= 1.
struct FactorMultiset {
    std::vector<PrimePower> entries;

    Nat product() const;
    std::vector<Nat> primes() const;
    std::size_t distinct() const { return entries.size(); }
    bool empty() const { return entries.empty(); }

    /// Multiplies in prime^multiplicity, keeping entries sorted.
    void add(Nat prime, unsigned multiplicity = 1);

    friend bool operator==(const FactorMultiset&, const FactorMultiset&) = default;
};

Nat mul_mod(Nat a, Nat b, Nat modulus);

/// base^exponent mod modulus. Throws InvalidInput when modulus < 2.
Nat mod_pow(Nat base, Nat exponent, Nat modulus);

Nat gcd(Nat x, Nat y);
Nat lcm(Nat x, Nat y);

/// gcd(base^exponent - 1, n), reducing the power mod n before subtracting.
Nat gcd_power_minus_one(Nat base, Nat exponent, Nat n);

/// Deterministic Miller-Rabin. The witness set {2, 3, 5, ..., 37} (the first
/// twelve primes) has no strong pseudoprime below 3.3 * 10^24, so the answer is
/// exact for every 64-bit input.
bool is_probable_prime(Nat x);

Nat integer_sqrt(Nat x);
std::optional<Nat> perfect_square_root(Nat x);

/// Trial division up to 10^4, then Brent's variant of Pollard rho with fixed
/// seeds. factorize(1) is empty; factorize(0) throws InvalidInput.
FactorMultiset factorize(Nat x);

/// Distinct primes p <= bound dividing x, found by trial division alone.
std::vector<Nat> distinct_primes_bounded(Nat x, Nat bound);

int decimal_digits(Nat x);
Nat pow10(int exponent);

}  // namespace allz
