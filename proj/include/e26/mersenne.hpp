#pragma once

// Mersenne numbers 2^p - 1: Euler's 2p+1 exclusion rule, trial-factor search
// over q = 2kp+1, exponent classification, and the perfect-number audit.

#include <cstdint>
#include <optional>
#include <vector>

#include "e26/modarith.hpp"

namespace e26 {

// A prime exponent p. The exact value 2^p - 1 is computable iff p <= 63.
struct MersenneCandidate {
    u64 p;

    explicit MersenneCandidate(u64 p);  // composite p is rejected

    std::optional<u64> exact_value() const;
};

// True iff p == 3 (mod 4) and 2p+1 is prime, in which case 2p+1 divides
// 2^p - 1 and the exponent cannot yield a perfect number. p = 3 is the one
// self-divisor case (2*3+1 == 2^3-1) and is not excluded.
bool exclusion_applies(u64 p);

// All primes p <= limit with exclusion_applies(p), ascending.
std::vector<u64> excluded_exponents(u64 limit);

// Smallest prime q = 2kp+1 with k <= k_max and 2^p == 1 (mod q), skipping
// 2^p - 1 itself. Every actual prime factor of 2^p - 1 is == 1 (mod 2p) and
// == +-1 (mod 8); filter_mod8 applies the second condition as a sieve and
// can be switched off to rescan without it. p must be an odd prime.
std::optional<u64> find_mersenne_factor(u64 p, u64 k_max,
                                        bool filter_mod8 = true);

enum class MersenneClass {
    mersenne_prime,          // 2^p - 1 is prime (definitive; p <= 63 only)
    composite_with_factor,   // a 2kp+1 factor was found
    composite_by_primality,  // composite by is_prime; no factor within k_max
    no_small_factor,         // p > 63, scan exhausted; not a primality claim
};

struct ExponentClassification {
    u64 p;
    MersenneClass kind;
    u64 factor = 0;  // set when kind == composite_with_factor

    bool operator==(const ExponentClassification&) const = default;
};

ExponentClassification classify_exponent(u64 p, u64 k_max);

// 2^(n-1) * (2^n - 1) for 1 <= n <= 31. Carries no perfection claim.
u64 perfect_number(u64 n);

// sigma(n) == 2n, with sigma computed multiplicatively from factorize(n).
bool is_perfect(u64 n);

// Euler's list of exponents claimed to yield perfect numbers.
inline constexpr u64 kEulerPerfectExponents[] = {1, 2, 3, 5, 7, 13,
                                                 17, 19, 31, 41, 47};

// An entry of that list rejected by the audit, with its refutation.
struct PerfectRefutation {
    u64 exponent;
    bool not_perfect_value = false;  // exponent 1: 2^0*(2^1-1) = 1, sigma(1) != 2
    std::optional<u64> factor;       // prime factor of 2^exponent - 1 otherwise

    bool operator==(const PerfectRefutation&) const = default;
};

struct PerfectAudit {
    u64 limit = 0;
    std::vector<u64> euler_list;                // the fixed historical list
    std::vector<u64> computed_list;             // p <= limit with 2^p-1 prime
    std::vector<u64> agreements;
    std::vector<PerfectRefutation> euler_only;  // refuted entries
    std::vector<u64> computed_only;             // missed by the historical list
};

// Audits kEulerPerfectExponents against the computed classification for all
// p <= limit. limit must be <= 63 so that every verdict is definitive.
PerfectAudit audit_perfect_list(u64 limit, u64 k_max);

}  // namespace e26
