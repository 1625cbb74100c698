#pragma once

// Symbolic numbers of the shape base^exponent +- 1: algebraic divisors,
// cofactor coefficients, modular divisibility, and the Fermat numbers
// 2^(2^m)+1 with their factor search. Values beyond 64 bits are never
// materialized; divisibility is always decided modularly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "e26/modarith.hpp"

namespace e26 {

// base^exponent + sign with base >= 2, exponent >= 1, sign in {-1, +1}.
struct PowerForm {
    u64 base;
    u64 exponent;
    int sign;

    PowerForm(u64 base, u64 exponent, int sign);

    // Present iff the value fits in 64 bits.
    std::optional<u64> exact_value() const;

    std::string to_string() const;  // e.g. "2^32+1"

    bool operator==(const PowerForm&) const = default;
};

// Index m of the Fermat number 2^(2^m)+1. The exact value fits 64 bits only
// for m <= 5; everything else must stay modular.
struct FermatIndex {
    u64 m;
    explicit FermatIndex(u64 m) : m(m) {}
};

// Structural divisors:
//   sign -1: base^d - 1 for every proper divisor d of the exponent;
//   sign +1: base^(exponent/d) + 1 for every odd divisor d > 1 of the
//            exponent (none when the exponent is a power of two).
// Sorted by exponent, ascending.
std::vector<PowerForm> algebraic_divisors(const PowerForm& f);

// Alternating coefficients [+1, -1, ..., +1] (length k, k odd) of the
// cofactor of a^l + 1 inside a^(k*l) + 1.
std::vector<int> cofactor_coefficients(u64 k);

// Whether d >= 2 divides base^exponent + sign.
bool divides_power_form(u64 d, const PowerForm& f);

// Exact value of 2^(2^m)+1 for m <= 5. Larger m exceed 64 bits and are
// rejected; use pow_tower2_mod for modular work on them.
u64 fermat_value(FermatIndex m);

enum class FermatSearchStrategy {
    all_primes,    // scan every prime up to the bound
    special_form,  // scan only q = k*2^(m+2)+1 (post-paper acceleration)
};

// Smallest prime q <= bound dividing 2^(2^m)+1, excluding the Fermat number
// itself. nullopt when no factor exists below the bound.
std::optional<u64> find_fermat_factor(FermatIndex m, u64 bound,
                                      FermatSearchStrategy strategy);

}  // namespace e26
