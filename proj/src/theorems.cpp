#include "e26/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "e26/primes.hpp"

namespace e26 {

namespace {

bool contains(const std::vector<u64>& sorted, u64 v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::string bounds_text(std::initializer_list<std::pair<const char*, u64>> parts) {
    std::string out;
    for (const auto& [name, value] : parts) {
        if (!out.empty()) out += ", ";
        out += name;
        out += " <= ";
        out += std::to_string(value);
    }
    return out;
}

}  // namespace

ResidueClassRule::ResidueClassRule(std::string name_, u64 x_, u64 y_,
                                   u64 modulus_, std::vector<u64> plus,
                                   std::vector<u64> minus,
                                   std::vector<u64> excluded, u64 divisor)
    : name(std::move(name_)),
      x(x_),
      y(y_),
      modulus(modulus_),
      plus_classes(std::move(plus)),
      minus_classes(std::move(minus)),
      excluded_classes(std::move(excluded)),
      excluded_divisor(divisor) {
    if (modulus == 0) throw std::invalid_argument(name + ": modulus must be >= 1");
    if (x < 2 || y < 1 || y >= x)
        throw std::invalid_argument(name + ": need x > y >= 1, x >= 2");

    std::vector<u64> all;
    for (const auto* cls : {&plus_classes, &minus_classes, &excluded_classes}) {
        if (!std::is_sorted(cls->begin(), cls->end()))
            throw std::invalid_argument(name + ": classes must be sorted");
        all.insert(all.end(), cls->begin(), cls->end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument(name + ": classes overlap");
    if (all.size() != modulus || (!all.empty() && all.back() >= modulus))
        throw std::invalid_argument(name + ": classes must partition 0..modulus-1");

    if (excluded_classes.empty() != (excluded_divisor == 0))
        throw std::invalid_argument(name + ": excluded classes and divisor mismatch");
    for (u64 r : excluded_classes) {
        // 2n+1 for n == r (mod M) runs through 2r+1 + 2kM, so the divisor
        // must divide both 2r+1 and 2M to cover the whole class.
        if ((2 * r + 1) % excluded_divisor != 0 ||
            (2 * modulus) % excluded_divisor != 0)
            throw std::invalid_argument(name +
                                        ": excluded divisor does not cover class " +
                                        std::to_string(r));
    }
}

ScanReport check_main_theorem(u64 q_bound, u64 ab_bound) {
    if (q_bound < 2 || ab_bound < 2)
        throw std::invalid_argument("check_main_theorem: bounds must be >= 2");
    ScanReport report;
    report.id = "main";
    report.bounds = bounds_text({{"q", q_bound}, {"a,b", ab_bound}});

    std::vector<u64> residue(ab_bound + 1, 0);
    for (u64 q : sieve(q_bound)) {
        for (u64 a = 1; a <= ab_bound; ++a)
            residue[a] = a % q == 0 ? 0 : pow_mod(a, q - 1, q);
        for (u64 a = 1; a <= ab_bound; ++a) {
            if (a % q == 0) continue;
            for (u64 b = a; b <= ab_bound; ++b) {
                if (b % q == 0) continue;
                ++report.instances;
                if (residue[a] != residue[b]) {
                    const u64 diff = (residue[a] + q - residue[b]) % q;
                    report.counterexamples.push_back(
                        {"q does not divide a^(q-1) - b^(q-1)", q, a, b, diff});
                }
            }
        }
    }
    return report;
}

std::pair<u64, u64> find_composite_witness(u64 c) {
    if (c < 4 || is_prime(c))
        throw std::invalid_argument("find_composite_witness: c must be composite");
    for (u64 a = 2; a < c; ++a) {
        const u64 r = pow_mod(a, c - 1, c);
        if (r != 0 && r != 1) return {a, 1};
    }
    // Pair-scan fallback; the b = 1 pass succeeds for every composite c.
    for (u64 a = 2; a < c; ++a) {
        const u64 ra = pow_mod(a, c - 1, c);
        for (u64 b = 1; b < a; ++b)
            if (ra != pow_mod(b, c - 1, c)) return {a, b};
    }
    throw std::logic_error("find_composite_witness: no witness below c");
}

ScanReport check_theorem1(u64 n_bound, u64 a_bound) {
    if (n_bound < 2 || a_bound < 2)
        throw std::invalid_argument("check_theorem1: bounds must be >= 2");
    ScanReport report;
    report.id = "theorem1";
    report.bounds = bounds_text({{"n", n_bound}, {"a", a_bound}});
    for (u64 n = 2; n <= n_bound; ++n) {
        if (is_prime(n)) {
            for (u64 a = 1; a <= a_bound; ++a) {
                ++report.instances;
                const u64 r = pow_mod(a, n - 1, n);
                if (r != 0 && r != 1)
                    report.counterexamples.push_back(
                        {"a^(n-1) mod n outside {0,1} for prime n", n, a, 0, r});
            }
        } else {
            bool found = false;
            for (u64 a = 2; a <= a_bound && !found; ++a) {
                ++report.instances;
                const u64 r = pow_mod(a, n - 1, n);
                if (r != 0 && r != 1) {
                    report.witnesses.push_back({n, a, r});
                    found = true;
                }
            }
            if (!found)
                report.counterexamples.push_back(
                    {"no residue outside {0,1} found for composite n", n, 0, 0, 0});
        }
    }
    return report;
}

ScanReport check_theorem2(u64 n_bound, u64 a_bound) {
    if (n_bound < 2 || a_bound < 2)
        throw std::invalid_argument("check_theorem2: bounds must be >= 2");
    ScanReport report;
    report.id = "theorem2";
    report.bounds = bounds_text({{"n", n_bound}, {"a", a_bound}});
    const u64 modulus_cap = u64(1) << 63;
    for (u64 n : sieve(n_bound)) {
        u64 modulus = n;       // n^m
        u64 exponent = n - 1;  // n^(m-1) * (n-1) < n^m
        for (;;) {
            for (u64 a = 1; a <= a_bound; ++a) {
                ++report.instances;
                const u64 r = pow_mod(a, exponent, modulus);
                if (r != 0 && r != 1)
                    report.counterexamples.push_back(
                        {"a^(n^(m-1)(n-1)) mod n^m outside {0,1}", modulus, a, 0, r});
            }
            if (modulus > (modulus_cap - 1) / n) break;
            modulus *= n;
            exponent *= n;
        }
    }
    return report;
}

ScanReport check_theorem3(const std::vector<u64>& primes, u64 a_bound) {
    if (primes.empty())
        throw std::invalid_argument("check_theorem3: prime set must be nonempty");
    if (a_bound < 2)
        throw std::invalid_argument("check_theorem3: a_bound must be >= 2");
    std::set<u64> seen;
    u128 product = 1;
    u64 shared_exponent = 1;  // lcm of p-1 over the set
    for (u64 p : primes) {
        if (!is_prime(p))
            throw std::invalid_argument("check_theorem3: set contains a composite");
        if (!seen.insert(p).second)
            throw std::invalid_argument("check_theorem3: repeated prime");
        product *= p;
        if (product >= u128(1) << 63)
            throw std::invalid_argument("check_theorem3: product exceeds 2^63");
        shared_exponent = std::lcm(shared_exponent, p - 1);
    }
    const u64 modulus = u64(product);

    ScanReport report;
    report.id = "theorem3";
    report.bounds = bounds_text({{"a", a_bound}});
    report.bounds += ", N = " + std::to_string(modulus) +
                     ", A = " + std::to_string(shared_exponent);
    for (u64 a = 1; a <= a_bound; ++a) {
        if (gcd(a, modulus) != 1) continue;  // only coprime a are asserted
        ++report.instances;
        const u64 r = pow_mod(a, shared_exponent, modulus);
        if (r != 1)
            report.counterexamples.push_back(
                {"a^A mod N != 1 for coprime a", modulus, a, shared_exponent, r});
    }
    return report;
}

std::vector<ResidueClassRule> builtin_rules() {
    std::vector<ResidueClassRule> rules;
    rules.emplace_back("T4", 3, 1, 6,
                       std::vector<u64>{2, 3}, std::vector<u64>{0, 5},
                       std::vector<u64>{1, 4}, 3);
    rules.emplace_back("T5", 3, 2, 12,
                       std::vector<u64>{3, 5, 6, 8}, std::vector<u64>{0, 2, 9, 11},
                       std::vector<u64>{1, 4, 7, 10}, 3);
    rules.emplace_back("T6", 6, 1, 12,
                       std::vector<u64>{3, 5, 6, 8}, std::vector<u64>{0, 2, 9, 11},
                       std::vector<u64>{1, 4, 7, 10}, 3);
    rules.emplace_back("P2", 2, 1, 4,
                       std::vector<u64>{1, 2}, std::vector<u64>{0, 3},
                       std::vector<u64>{}, 0);
    return rules;
}

ScanReport check_rule(const ResidueClassRule& rule, u64 q_bound) {
    if (q_bound < 5)
        throw std::invalid_argument("check_rule: q_bound must be >= 5");
    ScanReport report;
    report.id = rule.name;
    report.bounds = bounds_text({{"q", q_bound}});
    for (u64 q : sieve(q_bound)) {
        if (q == 2) continue;
        const u64 n = (q - 1) / 2;
        const u64 cls = n % rule.modulus;
        ++report.instances;

        if (contains(rule.excluded_classes, cls)) {
            if (q % rule.excluded_divisor != 0)
                report.counterexamples.push_back(
                    {"excluded class without the fixed divisor", q, n, cls, 0});
            continue;
        }
        if (rule.x * rule.y % q == 0) {
            report.counterexamples.push_back(
                {"q divides x*y outside the excluded classes", q, n, cls, 0});
            continue;
        }

        const u64 xr = pow_mod(rule.x, n, q);
        const u64 yr = pow_mod(rule.y, n, q);
        const bool plus_holds = (xr + yr) % q == 0;
        const bool minus_holds = xr == yr;
        const bool expect_plus = contains(rule.plus_classes, cls);

        if (plus_holds == minus_holds)
            report.counterexamples.push_back(
                {"not exactly one of x^n +- y^n divisible", q, n, xr, yr});
        if (expect_plus && !plus_holds)
            report.counterexamples.push_back(
                {"plus class but q does not divide x^n + y^n", q, n, cls,
                 (xr + yr) % q});
        if (!expect_plus && !minus_holds)
            report.counterexamples.push_back(
                {"minus class but q does not divide x^n - y^n", q, n, cls,
                 (xr + q - yr) % q});

        // Independent oracle: q | x^n + y^n iff x/y is a non-residue mod q.
        const u64 ratio = mul_mod(rule.x, pow_mod(rule.y, q - 2, q), q);
        const int symbol = legendre_symbol(ratio, q);
        if (symbol != (expect_plus ? -1 : 1))
            report.counterexamples.push_back(
                {"legendre oracle disagrees with the class verdict", q, n, cls,
                 u64(symbol + 1)});
    }
    return report;
}

ScanReport check_square_split(u64 q_bound) {
    if (q_bound < 3)
        throw std::invalid_argument("check_square_split: q_bound must be >= 3");
    ScanReport report;
    report.id = "square-split";
    report.bounds = bounds_text({{"q", q_bound}});
    for (u64 q : sieve(q_bound)) {
        if (q == 2) continue;
        const u64 m = (q - 1) / 2;
        ++report.instances;
        if (pow_mod(2, 2 * m, q) != 1)
            report.counterexamples.push_back(
                {"2^(2m) mod q != 1", q, m, 0, pow_mod(2, 2 * m, q)});
        const u64 half = pow_mod(2, m, q);
        if ((half == 1) == (half == q - 1))
            report.counterexamples.push_back(
                {"2^m not congruent to exactly one of +-1", q, m, 0, half});
    }
    return report;
}

}  // namespace e26
