#pragma once

// Property-scan engines for the theorems in E26: the two-base form of the
// little theorem, Theorems 1-3 (prime, prime-power, and squarefree-product
// moduli), and the residue-class rules for 3^n +- 1, 3^n +- 2^n, 6^n +- 1 and
// 2^m +- 1 together with their quadratic-character cross-check.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "e26/modarith.hpp"

namespace e26 {

// A partition of exponents n modulo `modulus` predicting, for primes
// q = 2n+1, whether q divides x^n + y^n (plus classes), x^n - y^n (minus
// classes), or is itself divisible by a fixed small prime (excluded classes).
struct ResidueClassRule {
    std::string name;
    u64 x = 0;
    u64 y = 0;
    u64 modulus = 0;
    std::vector<u64> plus_classes;
    std::vector<u64> minus_classes;
    std::vector<u64> excluded_classes;
    u64 excluded_divisor = 0;  // shared prime factor of 2n+1 on excluded classes

    // Validates the partition: classes sorted, disjoint, jointly covering
    // 0..modulus-1, and excluded_divisor dividing 2r+1 and 2*modulus for
    // every excluded class r (so that it divides 2n+1 for all n == r).
    ResidueClassRule(std::string name, u64 x, u64 y, u64 modulus,
                     std::vector<u64> plus_classes,
                     std::vector<u64> minus_classes,
                     std::vector<u64> excluded_classes, u64 excluded_divisor);
};

struct ScanCounterexample {
    std::string what;  // which assertion failed
    u64 modulus = 0;
    u64 a = 0;
    u64 b = 0;
    u64 value = 0;

    bool operator==(const ScanCounterexample&) const = default;
};

// A residue a^(n-1) mod n outside {0,1}, certifying n composite.
struct CompositeWitness {
    u64 n = 0;
    u64 a = 0;
    u64 residue = 0;

    bool operator==(const CompositeWitness&) const = default;
};

struct ScanReport {
    std::string id;
    std::string bounds;  // echo of the scanned ranges
    u64 instances = 0;
    std::vector<ScanCounterexample> counterexamples;
    std::vector<CompositeWitness> witnesses;  // theorem-1 completeness side

    bool passed() const { return counterexamples.empty(); }
};

// For every prime q <= q_bound and all a, b <= ab_bound not divisible by q:
// q | a^(q-1) - b^(q-1).
ScanReport check_main_theorem(u64 q_bound, u64 ab_bound);

// For composite c, a pair (a, b) with c not dividing a^(c-1) - b^(c-1).
// Searches b = 1 first (a^(c-1) mod c outside {0,1}), which succeeds for
// every composite c; a pair scan stands behind it as a fallback.
std::pair<u64, u64> find_composite_witness(u64 c);

// Theorem 1: a^(n-1) mod n is 0 or 1 for prime n; for composite n the scan
// must also find a witness residue outside {0,1} (completeness side).
ScanReport check_theorem1(u64 n_bound, u64 a_bound);

// Theorem 2: a^(n^(m-1)(n-1)) mod n^m is 0 or 1 for prime n, every m with
// n^m < 2^63.
ScanReport check_theorem2(u64 n_bound, u64 a_bound);

// Theorem 3: for distinct primes with product N < 2^63 and A the lcm of
// p-1 over the set, a^A == 1 (mod N) for every a coprime to N.
ScanReport check_theorem3(const std::vector<u64>& primes, u64 a_bound);

// The four rules stated in E26: T4 (3^n +- 1), T5 (3^n +- 2^n),
// T6 (6^n +- 1), and P2 (2^m +- 1).
std::vector<ResidueClassRule> builtin_rules();

// Scans every odd prime q = 2n+1 <= q_bound against the rule: divisibility
// on plus/minus classes, exactly-one, the fixed divisor on excluded classes,
// and agreement with the legendre_symbol oracle.
ScanReport check_rule(const ResidueClassRule& rule, u64 q_bound);

// For every odd prime q = 2m+1 <= q_bound: 2^(2m) == 1 (mod q) and exactly
// one of 2^m == +1, 2^m == -1 (mod q).
ScanReport check_square_split(u64 q_bound);

}  // namespace e26
