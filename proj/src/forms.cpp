#include "e26/forms.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "e26/primes.hpp"

namespace e26 {

PowerForm::PowerForm(u64 base_, u64 exponent_, int sign_)
    : base(base_), exponent(exponent_), sign(sign_) {
    if (base < 2) throw std::invalid_argument("PowerForm: base must be >= 2");
    if (exponent < 1) throw std::invalid_argument("PowerForm: exponent must be >= 1");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("PowerForm: sign must be +1 or -1");
}

std::optional<u64> PowerForm::exact_value() const {
    if (exponent >= 64) return std::nullopt;  // base >= 2, so base^64 overflows
    u64 v = 1;
    for (u64 i = 0; i < exponent; ++i) {
        if (v > std::numeric_limits<u64>::max() / base) return std::nullopt;
        v *= base;
    }
    if (sign > 0) {
        if (v == std::numeric_limits<u64>::max()) return std::nullopt;
        return v + 1;
    }
    return v - 1;
}

std::string PowerForm::to_string() const {
    return std::to_string(base) + "^" + std::to_string(exponent) +
           (sign > 0 ? "+1" : "-1");
}

std::vector<PowerForm> algebraic_divisors(const PowerForm& f) {
    std::vector<PowerForm> out;
    if (f.sign < 0) {
        for (u64 d = 1; d <= f.exponent / 2; ++d)
            if (f.exponent % d == 0) out.emplace_back(f.base, d, -1);
    } else {
        std::vector<u64> exps;
        for (u64 d = 3; d <= f.exponent; d += 2)
            if (f.exponent % d == 0) exps.push_back(f.exponent / d);
        std::sort(exps.begin(), exps.end());
        for (u64 e : exps) out.emplace_back(f.base, e, +1);
    }
    return out;
}

std::vector<int> cofactor_coefficients(u64 k) {
    if (k % 2 == 0)
        throw std::invalid_argument("cofactor_coefficients: k must be odd");
    std::vector<int> coeffs(k);
    for (u64 i = 0; i < k; ++i) coeffs[i] = i % 2 == 0 ? 1 : -1;
    return coeffs;
}

bool divides_power_form(u64 d, const PowerForm& f) {
    if (d < 2) throw std::invalid_argument("divides_power_form: d must be >= 2");
    const u64 target = f.sign > 0 ? d - 1 : 1;  // -sign mod d
    return Residue(f.base, d).pow(f.exponent).value == target;
}

u64 fermat_value(FermatIndex m) {
    if (m.m > 5)
        throw std::invalid_argument(
            "fermat_value: 2^(2^m)+1 exceeds 64 bits for m > 5; "
            "use the modular operations instead");
    return (u64(1) << (u64(1) << m.m)) + 1;
}

std::optional<u64> find_fermat_factor(FermatIndex m, u64 bound,
                                      FermatSearchStrategy strategy) {
    if (bound < 3) throw std::invalid_argument("find_fermat_factor: bound must be >= 3");
    if (bound > kSieveCap)
        throw std::invalid_argument("find_fermat_factor: bound exceeds the sieve cap");

    const u64 self = m.m <= 5 ? fermat_value(m) : 0;
    auto divides_fermat = [&](u64 q) {
        // q | 2^(2^m)+1  <=>  2^(2^m) == -1 (mod q); skip the number itself.
        return q != self && pow_tower2_mod(2, m.m, q) == q - 1;
    };

    if (strategy == FermatSearchStrategy::all_primes) {
        for (u64 q : sieve(bound))
            if (divides_fermat(q)) return q;
        return std::nullopt;
    }

    // Any prime factor of 2^(2^m)+1 has the shape k*2^(m+2)+1 (m >= 2).
    if (m.m + 2 >= 64) return std::nullopt;
    const u64 step = u64(1) << (m.m + 2);
    for (u64 q = step + 1; q <= bound; q += step)
        if (is_prime(q) && divides_fermat(q)) return q;
    return std::nullopt;
}

}  // namespace e26
