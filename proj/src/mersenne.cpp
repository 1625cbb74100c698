#include "e26/mersenne.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <stdexcept>

#include "e26/primes.hpp"

namespace e26 {

MersenneCandidate::MersenneCandidate(u64 p_) : p(p_) {
    if (!is_prime(p))
        throw std::invalid_argument("MersenneCandidate: exponent must be prime");
}

std::optional<u64> MersenneCandidate::exact_value() const {
    if (p > 63) return std::nullopt;
    return (u64(1) << p) - 1;
}

bool exclusion_applies(u64 p) {
    if (!is_prime(p))
        throw std::invalid_argument("exclusion_applies: p must be prime");
    if (p > (std::numeric_limits<u64>::max() - 1) / 2)
        throw std::invalid_argument("exclusion_applies: 2p+1 overflows");
    if (p % 4 != 3 || !is_prime(2 * p + 1)) return false;
    if (p == 3) return false;  // 2*3+1 == 2^3-1: self-divisor, proves nothing
    if (pow_mod(2, p, 2 * p + 1) != 1)
        throw std::logic_error(
            "exclusion_applies: 2p+1 prime and p == 3 (mod 4), "
            "yet 2p+1 does not divide 2^p-1");
    return true;
}

std::vector<u64> excluded_exponents(u64 limit) {
    std::vector<u64> out;
    for (u64 p : sieve(limit))
        if (exclusion_applies(p)) out.push_back(p);
    return out;
}

std::optional<u64> find_mersenne_factor(u64 p, u64 k_max, bool filter_mod8) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("find_mersenne_factor: p must be an odd prime");
    const u64 self = p <= 63 ? (u64(1) << p) - 1 : 0;
    const u64 k_cap = (std::numeric_limits<u64>::max() - 1) / (2 * p);
    for (u64 k = 1; k <= k_max && k <= k_cap; ++k) {
        const u64 q = 2 * k * p + 1;
        if (filter_mod8 && q % 8 != 1 && q % 8 != 7) continue;
        if (q == self) continue;
        if (!is_prime(q)) continue;
        if (pow_mod(2, p, q) == 1) return q;
    }
    return std::nullopt;
}

ExponentClassification classify_exponent(u64 p, u64 k_max) {
    const MersenneCandidate candidate(p);
    if (auto value = candidate.exact_value()) {
        if (is_prime(*value)) return {p, MersenneClass::mersenne_prime, 0};
        if (auto q = find_mersenne_factor(p, k_max))
            return {p, MersenneClass::composite_with_factor, *q};
        return {p, MersenneClass::composite_by_primality, 0};
    }
    if (auto q = find_mersenne_factor(p, k_max))
        return {p, MersenneClass::composite_with_factor, *q};
    return {p, MersenneClass::no_small_factor, 0};
}

u64 perfect_number(u64 n) {
    if (n < 1 || n > 31)
        throw std::invalid_argument("perfect_number: n must be in 1..31");
    return (u64(1) << (n - 1)) * ((u64(1) << n) - 1);
}

bool is_perfect(u64 n) {
    if (n == 0) throw std::invalid_argument("is_perfect: n must be >= 1");
    u128 sigma = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        u128 term = 1, pw = 1;
        for (u64 i = 0; i < e; ++i) {
            pw *= p;
            term += pw;
        }
        sigma *= term;
    }
    return sigma == u128(2) * n;
}

PerfectAudit audit_perfect_list(u64 limit, u64 k_max) {
    if (limit > 63)
        throw std::invalid_argument(
            "audit_perfect_list: limit must be <= 63 so verdicts stay definitive");
    PerfectAudit audit;
    audit.limit = limit;
    audit.euler_list.assign(std::begin(kEulerPerfectExponents),
                            std::end(kEulerPerfectExponents));

    for (u64 p : sieve(limit))
        if (classify_exponent(p, k_max).kind == MersenneClass::mersenne_prime)
            audit.computed_list.push_back(p);

    auto computed = [&](u64 e) {
        return std::find(audit.computed_list.begin(), audit.computed_list.end(),
                         e) != audit.computed_list.end();
    };
    for (u64 e : audit.euler_list) {
        if (e > limit) continue;
        if (computed(e)) {
            audit.agreements.push_back(e);
            continue;
        }
        PerfectRefutation refutation;
        refutation.exponent = e;
        if (e == 1) {
            // 2^0 * (2^1 - 1) = 1, and sigma(1) = 1 != 2.
            refutation.not_perfect_value = true;
        } else {
            const auto cls = classify_exponent(e, k_max);
            if (cls.kind == MersenneClass::composite_with_factor)
                refutation.factor = cls.factor;
        }
        audit.euler_only.push_back(refutation);
    }
    for (u64 p : audit.computed_list) {
        const bool listed =
            std::find(audit.euler_list.begin(), audit.euler_list.end(), p) !=
            audit.euler_list.end();
        if (!listed) audit.computed_only.push_back(p);
    }
    return audit;
}

}  // namespace e26
