#pragma once

// Prime generation, deterministic 64-bit primality, and complete
// factorization (trial division below 1e5, then Brent rho).

#include <cstdint>
#include <utility>
#include <vector>

#include "e26/modarith.hpp"

namespace e26 {

// Memory cap for sieve(); limits above it are rejected rather than thrashing.
inline constexpr u64 kSieveCap = 100'000'000;

// All primes p with 2 <= p <= limit, ascending. sieve(1) is empty.
std::vector<u64> sieve(u64 limit, u64 cap = kSieveCap);

// Deterministic for every 64-bit n: Miller-Rabin with the fixed base set
// {2,3,5,7,11,13,17,19,23,29,31,37}, which is exact below 3.3e24.
bool is_prime(u64 n);

// Multiset of (prime, multiplicity) with primes strictly increasing.
// factorize(1) has an empty factor list; factorize(0) is rejected.
struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, u64>> factors;

    u64 value() const;  // reassembles n from the factor list
};

Factorization factorize(u64 n);

}  // namespace e26
