#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <set>
#include <string>

#include "e26/ledger.hpp"
#include "e26/primes.hpp"

using namespace e26;

namespace {

std::optional<u64> look(const WitnessList& witness, const std::string& key) {
    for (const auto& [name, value] : witness)
        if (name == key) return value;
    return std::nullopt;
}

}  // namespace

TEST_CASE("catalog shape") {
    const auto& claims = catalog();
    REQUIRE(claims.size() == 27);
    for (std::size_t i = 0; i < claims.size(); ++i) {
        char id[4] = {};
        std::snprintf(id, sizeof id, "C%02zu", i + 1);
        CHECK(claims[i].id == id);
        CHECK_FALSE(claims[i].statement.empty());
        CHECK_FALSE(claims[i].check.empty());
        CHECK(claims[i].run != nullptr);
    }
    std::set<std::string> expected_disagree;
    for (const auto& c : claims)
        if (!c.expected_agree) expected_disagree.insert(c.id);
    CHECK(expected_disagree == std::set<std::string>{"C04", "C19"});

    CHECK(find_claim("C01") == &claims[0]);
    CHECK(find_claim("C27") == &claims[26]);
    CHECK(find_claim("C99") == nullptr);
    CHECK(find_claim("c01") == nullptr);
    CHECK(to_string(claims[0].category) == "fermat");
    CHECK(to_string(find_claim("C19")->category) == "perfect");
    CHECK(to_string(find_claim("C23")->category) == "theorem");
}

TEST_CASE("C01 recovers the 641 divisor") {
    const auto outcome = run_claim(*find_claim("C01"));
    CHECK(outcome.computed_verdict == Verdict::holds);
    CHECK(outcome.agrees_with_paper);
    CHECK(outcome.error.empty());
    CHECK(outcome.witness == WitnessList{{"factor", 641}});
}

TEST_CASE("C04 exposes the printed 7 against the computed 17") {
    const auto outcome = run_claim(*find_claim("C04"));
    CHECK(outcome.computed_verdict == Verdict::fails);
    CHECK_FALSE(outcome.agrees_with_paper);
    CHECK(outcome.witness ==
          WitnessList{{"printed_m2", 7}, {"computed_m2", 17}});
}

TEST_CASE("C05 holds with no witness") {
    const auto outcome = run_claim(*find_claim("C05"));
    CHECK(outcome.computed_verdict == Verdict::holds);
    CHECK(outcome.witness.empty());
}

TEST_CASE("C11 splits 2047") {
    const auto outcome = run_claim(*find_claim("C11"));
    CHECK(outcome.computed_verdict == Verdict::holds);
    CHECK(outcome.witness == WitnessList{{"p1", 23}, {"p2", 89}});
}

TEST_CASE("C19 refutes three entries of the perfect-number list") {
    const auto outcome = run_claim(*find_claim("C19"));
    CHECK(outcome.computed_verdict == Verdict::fails);
    CHECK_FALSE(outcome.agrees_with_paper);
    CHECK(outcome.witness == WitnessList{{"aliquot_sum_of_1", 0},
                                         {"factor_of_2^41-1", 13367},
                                         {"factor_of_2^47-1", 2351}});
}

TEST_CASE("claim runs are deterministic") {
    for (const char* id : {"C01", "C04", "C14"}) {
        const auto first = run_claim(*find_claim(id));
        const auto second = run_claim(*find_claim(id));
        CHECK(first.computed_verdict == second.computed_verdict);
        CHECK(first.agrees_with_paper == second.agrees_with_paper);
        CHECK(first.witness == second.witness);
    }
}

TEST_CASE("run_all matches the expected finding pattern") {
    const auto [outcomes, summary] = run_all();
    REQUIRE(outcomes.size() == 27);
    for (std::size_t i = 1; i < outcomes.size(); ++i)
        CHECK(outcomes[i - 1].id < outcomes[i].id);

    CHECK(summary.agree == 25);
    CHECK(summary.disagree == 2);
    CHECK(summary.errors == 0);

    std::set<std::string> disagreeing;
    for (const auto& o : outcomes) {
        CHECK(o.error.empty());
        if (!o.agrees_with_paper) disagreeing.insert(o.id);
    }
    CHECK(disagreeing == std::set<std::string>{"C04", "C19"});
    CHECK(matches_expected_pattern(outcomes));

    SUBCASE("tampered outcomes break the pattern") {
        auto flipped = outcomes;
        flipped[0].agrees_with_paper = !flipped[0].agrees_with_paper;
        CHECK_FALSE(matches_expected_pattern(flipped));

        auto errored = outcomes;
        errored[5].computed_verdict = Verdict::error;
        CHECK_FALSE(matches_expected_pattern(errored));

        auto renamed = outcomes;
        renamed[3].id = "C99";
        CHECK_FALSE(matches_expected_pattern(renamed));
    }

    SUBCASE("every witness re-verifies by direct computation") {
        for (const auto& o : outcomes) {
            if (o.id == "C01") {
                CHECK(look(o.witness, "factor") == 641);
                CHECK(pow_tower2_mod(2, 5, 641) == 640);
            } else if (o.id == "C02") {
                CHECK(look(o.witness, "value") == (u64(1) << 32) + 1);
            } else if (o.id == "C03") {
                for (u64 m = 0; m <= 4; ++m) {
                    const auto v =
                        look(o.witness, "F" + std::to_string(m));
                    REQUIRE(v.has_value());
                    CHECK(is_prime(*v));
                    CHECK(*v == (u64(1) << (u64(1) << m)) + 1);
                }
            } else if (o.id == "C04") {
                CHECK(look(o.witness, "printed_m2") == 7);
                CHECK(look(o.witness, "computed_m2") == (u64(1) << 4) + 1);
            } else if (o.id == "C06") {
                CHECK(pow_mod(30, 2, *look(o.witness, "divisor")) == 17 - 1);
            } else if (o.id == "C07") {
                CHECK(pow_mod(50, 2, *look(o.witness, "divisor")) == 41 - 1);
            } else if (o.id == "C08") {
                CHECK(pow_mod(10, 4, *look(o.witness, "divisor")) == 73 - 1);
            } else if (o.id == "C09") {
                CHECK(pow_mod(6, 8, *look(o.witness, "divisor")) == 17 - 1);
            } else if (o.id == "C10") {
                CHECK(pow_mod(6, 128, *look(o.witness, "divisor")) == 257 - 1);
            } else if (o.id == "C11" || o.id == "C13") {
                const u64 n = o.id == "C11" ? 2047 : 511;
                CHECK(*look(o.witness, "p1") * *look(o.witness, "p2") == n);
                CHECK(is_prime(*look(o.witness, "p1")));
                CHECK(is_prime(*look(o.witness, "p2")));
            } else if (o.id == "C12") {
                CHECK(pow_mod(2, 23, *look(o.witness, "divisor")) == 1);
            } else if (o.id == "C14") {
                for (const auto& [key, p] : o.witness) {
                    CHECK(is_prime(2 * p + 1));
                    CHECK(pow_mod(2, p, 2 * p + 1) == 1);
                }
            } else if (o.id == "C15" || o.id == "C16" || o.id == "C17" ||
                       o.id == "C18") {
                const u64 p = o.id == "C15"   ? 37
                              : o.id == "C16" ? 43
                              : o.id == "C17" ? 29
                                              : 73;
                const auto q = look(o.witness, "divisor");
                REQUIRE(q.has_value());
                CHECK(pow_mod(2, p, *q) == 1);
            } else if (o.id == "C19") {
                CHECK(look(o.witness, "aliquot_sum_of_1") == 0);
                CHECK(pow_mod(2, 41, *look(o.witness, "factor_of_2^41-1")) == 1);
                CHECK(pow_mod(2, 47, *look(o.witness, "factor_of_2^47-1")) == 1);
            } else if (o.id == "C20") {
                const u64 n = *look(o.witness, "composite_witness_n");
                const u64 a = *look(o.witness, "composite_witness_a");
                const u64 r = *look(o.witness, "composite_witness_residue");
                CHECK_FALSE(is_prime(n));
                CHECK(pow_mod(a, n - 1, n) == r);
                CHECK(r != 0);
                CHECK(r != 1);
            } else {
                // scans that hold carry no instance counts, only emptiness
                CHECK(o.witness.empty());
            }
        }
    }
}
