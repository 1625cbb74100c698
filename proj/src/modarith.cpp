#include "e26/modarith.hpp"

#include <numeric>
#include <stdexcept>

#include "e26/primes.hpp"

namespace e26 {

namespace {

void require_modulus(u64 m) {
    if (m == 0) throw std::invalid_argument("modulus must be >= 1");
}

}  // namespace

Residue::Residue(u64 v, u64 m) : value(0), modulus(m) {
    require_modulus(m);
    value = v % m;
}

Residue Residue::mul(const Residue& rhs) const {
    if (modulus != rhs.modulus)
        throw std::invalid_argument("Residue moduli differ");
    return Residue(mul_mod(value, rhs.value, modulus), modulus);
}

Residue Residue::pow(u64 exp) const {
    return Residue(pow_mod(value, exp, modulus), modulus);
}

u64 mul_mod(u64 a, u64 b, u64 m) {
    require_modulus(m);
    return u64(u128(a % m) * u128(b % m) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    require_modulus(m);
    u64 result = 1 % m;
    u64 b = base % m;
    while (exp > 0) {
        if (exp & 1) result = u64(u128(result) * b % m);
        b = u64(u128(b) * b % m);
        exp >>= 1;
    }
    return result;
}

u64 pow_tower2_mod(u64 base, u64 k, u64 m) {
    require_modulus(m);
    u64 r = base % m;
    for (u64 i = 0; i < k; ++i) r = u64(u128(r) * r % m);
    return r;
}

u64 gcd(u64 a, u64 b) {
    return std::gcd(a, b);
}

u64 multiplicative_order(u64 a, u64 m) {
    if (m < 2) throw std::invalid_argument("multiplicative_order: m must be >= 2");
    a %= m;
    if (gcd(a, m) != 1)
        throw std::invalid_argument("multiplicative_order: a and m must be coprime");

    u64 phi = 1;
    for (const auto& [p, e] : factorize(m).factors) {
        phi *= p - 1;
        for (u64 i = 1; i < e; ++i) phi *= p;
    }

    // The order divides phi; strip each prime of phi while a^(t/p) stays 1.
    u64 t = phi;
    for (const auto& [p, e] : factorize(phi).factors) {
        (void)e;
        while (t % p == 0 && pow_mod(a, t / p, m) == 1) t /= p;
    }
    return t;
}

int legendre_symbol(u64 a, u64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    a %= p;
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace e26
