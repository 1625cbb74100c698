#pragma once

// Overflow-safe modular arithmetic on 64-bit naturals. Everything else in the
// library reduces to these primitives. All functions are pure; moduli up to
// 2^64-1 are exact (intermediate products go through a 128-bit multiply).

#include <cstdint>

namespace e26 {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// A value together with its modulus. value < modulus holds after every
// operation; modulus 1 is legal and every residue mod 1 is 0.
struct Residue {
    u64 value;
    u64 modulus;

    // Reduces v mod m. m == 0 is rejected.
    Residue(u64 v, u64 m);

    Residue mul(const Residue& rhs) const;  // moduli must match
    Residue pow(u64 exp) const;

    bool operator==(const Residue&) const = default;
};

// (a*b) mod m, exact for every 64-bit m. Inputs are reduced mod m first.
u64 mul_mod(u64 a, u64 b, u64 m);

// base^exp mod m by square-and-multiply. pow_mod(x, 0, m) == 1 mod m.
u64 pow_mod(u64 base, u64 exp, u64 m);

// base^(2^k) mod m by k successive squarings; handles exponents 2^k that do
// not fit in 64 bits (k >= 64).
u64 pow_tower2_mod(u64 base, u64 k, u64 m);

// Greatest common divisor; gcd(0, b) == b.
u64 gcd(u64 a, u64 b);

// Least e >= 1 with a^e == 1 (mod m). Requires m >= 2 and gcd(a, m) == 1.
u64 multiplicative_order(u64 a, u64 m);

// 0 if p | a, +1 if a is a quadratic residue mod p, -1 otherwise, computed by
// the Euler criterion a^((p-1)/2) mod p. p must be an odd prime.
int legendre_symbol(u64 a, u64 p);

}  // namespace e26
