#include "e26/primes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace e26 {

std::vector<u64> sieve(u64 limit, u64 cap) {
    if (limit > cap)
        throw std::invalid_argument("sieve: limit exceeds the memory cap");
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 p = 2; p * p <= limit; ++p) {
        if (composite[p]) continue;
        for (u64 q = p * p; q <= limit; q += p) composite[q] = true;
    }
    for (u64 p = 2; p <= limit; ++p)
        if (!composite[p]) primes.push_back(p);
    return primes;
}

namespace {

constexpr u64 kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : kMrBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    const int s = std::countr_zero(n - 1);
    const u64 d = (n - 1) >> s;
    for (u64 a : kMrBases) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 Factorization::value() const {
    u64 v = 1;
    for (const auto& [p, e] : factors)
        for (u64 i = 0; i < e; ++i) v *= p;
    return v;
}

namespace {

const std::vector<u64>& trial_primes() {
    static const std::vector<u64> table = sieve(100'000);
    return table;
}

// Brent's cycle variant of Pollard rho with polynomial x^2 + c. Returns a
// nontrivial divisor, or n itself when this c fails (caller retries).
u64 brent_rho(u64 n, u64 c) {
    auto f = [&](u64 x) { return u64((u128(x) * x + c) % n); };
    u64 x = 2, y = 2, ys = 2, d = 1, q = 1, r = 1;
    const u64 block = 128;
    while (d == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        for (u64 k = 0; k < r && d == 1; k += block) {
            ys = y;
            const u64 steps = std::min(block, r - k);
            for (u64 i = 0; i < steps; ++i) {
                y = f(y);
                q = mul_mod(q, x > y ? x - y : y - x, n);
            }
            d = gcd(q, n);
        }
        r *= 2;
    }
    if (d == n) {
        // Backtrack one step at a time from the last saved point.
        do {
            ys = f(ys);
            d = gcd(x > ys ? x - ys : ys - x, n);
        } while (d == 1);
    }
    return d;
}

void factor_into(u64 n, std::map<u64, u64>& acc) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++acc[n];
        return;
    }
    u64 d = n;
    for (u64 c = 1; d == n || d == 1; ++c) d = brent_rho(n, c);
    factor_into(d, acc);
    factor_into(n / d, acc);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization result;
    result.n = n;
    std::map<u64, u64> acc;
    u64 rest = n;
    for (u64 p : trial_primes()) {
        if (p * p > rest) break;
        while (rest % p == 0) {
            ++acc[p];
            rest /= p;
        }
    }
    if (rest > 1) {
        if (is_prime(rest))
            ++acc[rest];
        else
            factor_into(rest, acc);
    }
    result.factors.assign(acc.begin(), acc.end());
    return result;
}

}  // namespace e26
