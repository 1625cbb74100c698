#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "e26/forms.hpp"
#include "e26/mersenne.hpp"
#include "e26/primes.hpp"

using namespace e26;

TEST_CASE("MersenneCandidate") {
    CHECK(MersenneCandidate(13).exact_value() == 8191);
    CHECK(MersenneCandidate(61).exact_value() == 2305843009213693951ull);
    CHECK(MersenneCandidate(67).exact_value() == std::nullopt);
    CHECK_THROWS_AS(MersenneCandidate(15), std::invalid_argument);
}

TEST_CASE("exclusion_applies") {
    CHECK(exclusion_applies(11));
    CHECK(exclusion_applies(23));
    CHECK(exclusion_applies(83));
    CHECK(exclusion_applies(239));
    CHECK_FALSE(exclusion_applies(3));  // 2*3+1 == 2^3-1 itself
    CHECK_FALSE(exclusion_applies(7));  // 15 is composite
    CHECK_FALSE(exclusion_applies(13));  // 13 == 1 (mod 4)
    CHECK_FALSE(exclusion_applies(31));
    CHECK_THROWS_AS(exclusion_applies(9), std::invalid_argument);
}

TEST_CASE("excluded_exponents lists") {
    CHECK(excluded_exponents(10).empty());
    CHECK(excluded_exponents(239) ==
          std::vector<u64>{11, 23, 83, 131, 179, 191, 239});
    CHECK(excluded_exponents(500) ==
          std::vector<u64>{11, 23, 83, 131, 179, 191, 239, 251, 359, 419, 431,
                           443, 491});
}

TEST_CASE("every excluded exponent is certified by 2p+1") {
    for (u64 p : excluded_exponents(10'000)) {
        REQUIRE(is_prime(2 * p + 1));
        REQUIRE(p % 4 == 3);
        REQUIRE(pow_mod(2, p, 2 * p + 1) == 1);
        if (p < 64) REQUIRE(2 * p + 1 < (u64(1) << p) - 1);  // proper divisor
    }
}

TEST_CASE("find_mersenne_factor fixed values") {
    CHECK(find_mersenne_factor(11, 10) == 23);
    CHECK(find_mersenne_factor(23, 10) == 47);
    CHECK(find_mersenne_factor(37, 10) == 223);
    CHECK(find_mersenne_factor(43, 10) == 431);
    CHECK(find_mersenne_factor(73, 10) == 439);
    CHECK(find_mersenne_factor(29, 100) == 233);
    CHECK(find_mersenne_factor(41, 200) == 13367);
    CHECK(find_mersenne_factor(47, 100) == 2351);
    CHECK(find_mersenne_factor(53, 100) == 6361);
    CHECK(find_mersenne_factor(59, 2000) == 179951);
    CHECK(find_mersenne_factor(37, 2) == std::nullopt);  // 223 needs k = 3
    // prime Mersenne numbers: nothing to find, the value itself is skipped
    CHECK(find_mersenne_factor(5, 100) == std::nullopt);
    CHECK(find_mersenne_factor(3, 100) == std::nullopt);
    CHECK(find_mersenne_factor(13, 10'000) == std::nullopt);
    CHECK_THROWS_AS(find_mersenne_factor(2, 10), std::invalid_argument);
    CHECK_THROWS_AS(find_mersenne_factor(21, 10), std::invalid_argument);
}

TEST_CASE("found factors really divide and carry the stated shape") {
    for (u64 p : sieve(100)) {
        if (p == 2) continue;
        const auto q = find_mersenne_factor(p, 1000);
        if (!q) continue;
        REQUIRE(is_prime(*q));
        REQUIRE(*q % (2 * p) == 1);
        REQUIRE((*q % 8 == 1 || *q % 8 == 7));
        REQUIRE(pow_mod(2, p, *q) == 1);
        if (p <= 63) REQUIRE(divides_power_form(*q, PowerForm(2, p, -1)));
    }
}

TEST_CASE("the mod-8 filter changes nothing but the work") {
    for (u64 p : sieve(100)) {
        if (p == 2) continue;
        REQUIRE(find_mersenne_factor(p, 1000, true) ==
                find_mersenne_factor(p, 1000, false));
    }
}

TEST_CASE("classify_exponent") {
    using enum MersenneClass;
    CHECK(classify_exponent(2, 10).kind == mersenne_prime);
    CHECK(classify_exponent(31, 10).kind == mersenne_prime);
    CHECK(classify_exponent(61, 10).kind == mersenne_prime);
    CHECK(classify_exponent(11, 10) ==
          ExponentClassification{11, composite_with_factor, 23});
    CHECK(classify_exponent(41, 200) ==
          ExponentClassification{41, composite_with_factor, 13367});
    CHECK(classify_exponent(41, 10).kind == composite_by_primality);
    CHECK(classify_exponent(67, 100'000).kind == no_small_factor);
    CHECK(classify_exponent(83, 10) ==
          ExponentClassification{83, composite_with_factor, 167});
    CHECK_THROWS_AS(classify_exponent(15, 10), std::invalid_argument);
}

TEST_CASE("classification below 64 agrees with direct primality") {
    const std::vector<u64> expected{2, 3, 5, 7, 13, 17, 19, 31, 61};
    std::vector<u64> got;
    for (u64 p : sieve(63)) {
        const auto cls = classify_exponent(p, 100'000);
        const u64 value = (u64(1) << p) - 1;
        if (cls.kind == MersenneClass::mersenne_prime) {
            got.push_back(p);
            REQUIRE(is_prime(value));
        } else {
            REQUIRE_FALSE(is_prime(value));
            if (cls.kind == MersenneClass::composite_with_factor)
                REQUIRE(value % cls.factor == 0);
        }
    }
    REQUIRE(got == expected);
}

TEST_CASE("perfect_number") {
    CHECK(perfect_number(1) == 1);
    CHECK(perfect_number(2) == 6);
    CHECK(perfect_number(3) == 28);
    CHECK(perfect_number(5) == 496);
    CHECK(perfect_number(7) == 8128);
    CHECK(perfect_number(13) == 33550336);
    CHECK(perfect_number(31) == 2305843008139952128ull);
    CHECK_THROWS_AS(perfect_number(0), std::invalid_argument);
    CHECK_THROWS_AS(perfect_number(32), std::invalid_argument);
}

TEST_CASE("is_perfect fixed values") {
    CHECK(is_perfect(6));
    CHECK(is_perfect(28));
    CHECK(is_perfect(496));
    CHECK(is_perfect(8128));
    CHECK(is_perfect(33550336));
    CHECK(is_perfect(8589869056ull));
    CHECK(is_perfect(137438691328ull));
    CHECK(is_perfect(2305843008139952128ull));
    CHECK_FALSE(is_perfect(1));
    CHECK_FALSE(is_perfect(2096128));  // 2^10 * (2^11 - 1), but 2047 = 23 * 89
    CHECK_FALSE(is_perfect(2047));
    CHECK_THROWS_AS(is_perfect(0), std::invalid_argument);
}

TEST_CASE("is_perfect agrees with the divisor-sum oracle below 10^5") {
    for (u64 n = 1; n <= 100'000; ++n) {
        u64 aliquot = 0;
        for (u64 d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            aliquot += d;
            const u64 other = n / d;
            if (other != d) aliquot += other;
        }
        aliquot -= n;  // drop n itself
        REQUIRE(is_perfect(n) == (aliquot == n));
    }
}

TEST_CASE("audit_perfect_list at 47") {
    const auto audit = audit_perfect_list(47, 100'000);
    CHECK(audit.limit == 47);
    CHECK(audit.euler_list ==
          std::vector<u64>{1, 2, 3, 5, 7, 13, 17, 19, 31, 41, 47});
    CHECK(audit.computed_list == std::vector<u64>{2, 3, 5, 7, 13, 17, 19, 31});
    CHECK(audit.agreements == std::vector<u64>{2, 3, 5, 7, 13, 17, 19, 31});
    CHECK(audit.computed_only.empty());
    REQUIRE(audit.euler_only.size() == 3);
    CHECK(audit.euler_only[0] == PerfectRefutation{1, true, std::nullopt});
    CHECK(audit.euler_only[1] == PerfectRefutation{41, false, 13367});
    CHECK(audit.euler_only[2] == PerfectRefutation{47, false, 2351});
    // the refutations re-verify directly
    CHECK_FALSE(is_perfect(perfect_number(1)));
    CHECK(pow_mod(2, 41, 13367) == 1);
    CHECK(pow_mod(2, 47, 2351) == 1);
}

TEST_CASE("audit_perfect_list at 63 finds the unlisted 61") {
    const auto audit = audit_perfect_list(63, 100'000);
    CHECK(audit.computed_list ==
          std::vector<u64>{2, 3, 5, 7, 13, 17, 19, 31, 61});
    CHECK(audit.computed_only == std::vector<u64>{61});
    CHECK_THROWS_AS(audit_perfect_list(64, 10), std::invalid_argument);
}

TEST_CASE("audit partition invariant") {
    for (u64 limit : {2ull, 7ull, 31ull, 47ull, 63ull}) {
        const auto audit = audit_perfect_list(limit, 100'000);
        std::vector<u64> joined = audit.agreements;
        for (const auto& r : audit.euler_only) joined.push_back(r.exponent);
        std::sort(joined.begin(), joined.end());
        std::vector<u64> in_range;
        for (u64 e : audit.euler_list)
            if (e <= limit) in_range.push_back(e);
        REQUIRE(joined == in_range);
    }
}
