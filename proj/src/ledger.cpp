#include "e26/ledger.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "e26/forms.hpp"
#include "e26/mersenne.hpp"
#include "e26/primes.hpp"
#include "e26/theorems.hpp"

namespace e26 {

std::string_view to_string(ClaimCategory c) {
    switch (c) {
        case ClaimCategory::fermat: return "fermat";
        case ClaimCategory::mersenne: return "mersenne";
        case ClaimCategory::perfect: return "perfect";
        case ClaimCategory::theorem: return "theorem";
        case ClaimCategory::misc: return "misc";
    }
    return "misc";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::error: return "error";
    }
    return "error";
}

namespace {

// A single stated divisibility: d | base^exponent + sign.
Claim divisor_claim(std::string id, ClaimCategory category, std::string statement,
                    u64 d, PowerForm f, std::string note = {}) {
    Claim c;
    c.id = std::move(id);
    c.category = category;
    c.statement = std::move(statement);
    c.check = "divides_power_form(" + std::to_string(d) + ", " + f.to_string() +
              ") == true";
    c.euler_verdict = EulerVerdict::asserted_true;
    c.expected_agree = true;
    c.note = std::move(note);
    c.run = [d, f] {
        CheckResult r;
        r.holds = divides_power_form(d, f);
        r.witness.emplace_back("divisor", d);
        return r;
    };
    return c;
}

// A stated two-prime factorization of a small number.
Claim factorization_claim(std::string id, std::string statement, u64 n, u64 p1,
                          u64 p2, std::string note = {}) {
    Claim c;
    c.id = std::move(id);
    c.category = ClaimCategory::mersenne;
    c.statement = std::move(statement);
    c.check = "factorize(" + std::to_string(n) + ") == {" + std::to_string(p1) +
              ", " + std::to_string(p2) + "}";
    c.euler_verdict = EulerVerdict::asserted_true;
    c.expected_agree = true;
    c.note = std::move(note);
    c.run = [n, p1, p2] {
        CheckResult r;
        const auto f = factorize(n);
        r.holds = f.factors ==
                  std::vector<std::pair<u64, u64>>{{p1, 1}, {p2, 1}};
        for (std::size_t i = 0; i < f.factors.size(); ++i)
            r.witness.emplace_back("p" + std::to_string(i + 1),
                                   f.factors[i].first);
        return r;
    };
    return c;
}

// A stated Mersenne factor that the 2kp+1 scan must also produce.
Claim mersenne_scan_claim(std::string id, std::string statement, u64 p,
                          u64 expected_q, std::string note = {}) {
    Claim c;
    c.id = std::move(id);
    c.category = ClaimCategory::mersenne;
    c.statement = std::move(statement);
    c.check = "find_mersenne_factor(" + std::to_string(p) + ", k_max=10) == " +
              std::to_string(expected_q) + " and the factor divides 2^" +
              std::to_string(p) + "-1";
    c.euler_verdict = EulerVerdict::asserted_true;
    c.expected_agree = true;
    c.note = std::move(note);
    c.run = [p, expected_q] {
        CheckResult r;
        const auto q = find_mersenne_factor(p, 10);
        r.holds = q == expected_q &&
                  divides_power_form(expected_q, PowerForm(2, p, -1));
        r.witness.emplace_back("divisor", expected_q);
        return r;
    };
    return c;
}

// A rule scan at q <= 1e6; holds iff the scan finds no counterexample.
Claim rule_scan_claim(std::string id, std::string statement,
                      std::size_t rule_index, std::string note = {}) {
    Claim c;
    c.id = std::move(id);
    c.category = ClaimCategory::theorem;
    c.statement = std::move(statement);
    const auto rules = builtin_rules();
    c.check = "check_rule(" + rules[rule_index].name +
              ", q_bound=1000000) finds no counterexample";
    c.euler_verdict = EulerVerdict::asserted_true;
    c.expected_agree = true;
    c.note = std::move(note);
    c.run = [rule_index] {
        CheckResult r;
        const auto report = check_rule(builtin_rules()[rule_index], 1'000'000);
        r.holds = report.passed();
        if (!report.passed()) {
            r.witness.emplace_back("counterexample_q",
                                   report.counterexamples.front().modulus);
            r.witness.emplace_back("counterexample_n",
                                   report.counterexamples.front().a);
        }
        return r;
    };
    return c;
}

std::vector<Claim> build_catalog() {
    std::vector<Claim> claims;

    {
        Claim c;
        c.id = "C01";
        c.category = ClaimCategory::fermat;
        c.statement = "this number can be divided by 641";
        c.check = "find_fermat_factor(m=5, bound=10000, all_primes) == 641 "
                  "and 641 divides 2^32+1";
        c.euler_verdict = EulerVerdict::asserted_true;
        c.expected_agree = true;
        c.run = [] {
            CheckResult r;
            const auto q = find_fermat_factor(FermatIndex(5), 10'000,
                                              FermatSearchStrategy::all_primes);
            r.holds = q == 641 && divides_power_form(641, PowerForm(2, 32, +1));
            if (q) r.witness.emplace_back("factor", *q);
            return r;
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "C02";
        c.category = ClaimCategory::fermat;
        c.statement = "it is 2^{2^5}+1=2^{32}+1=4294967297";
        c.check = "fermat_value(5) == 4294967297";
        c.euler_verdict = EulerVerdict::asserted_true;
        c.expected_agree = true;
        c.run = [] {
            CheckResult r;
            const u64 v = fermat_value(FermatIndex(5));
            r.holds = v == 4294967297ull;
            r.witness.emplace_back("value", v);
            return r;
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "C03";
        c.category = ClaimCategory::fermat;
        c.statement = "3,5,17,257,65537 etc. to infinity are prime";
        c.check = "is_prime(fermat_value(m)) for m in 0..4 and no prime "
                  "factor below 10^6";
        c.euler_verdict = EulerVerdict::asserted_prime;
        c.expected_agree = true;
        c.note = "checked for m <= 4 only; the m = 5 continuation is refuted "
                 "by C01";
        c.run = [] {
            CheckResult r;
            r.holds = true;
            for (u64 m = 0; m <= 4; ++m) {
                const u64 v = fermat_value(FermatIndex(m));
                const bool no_factor =
                    !find_fermat_factor(FermatIndex(m), 1'000'000,
                                        FermatSearchStrategy::all_primes)
                         .has_value();
                r.holds = r.holds && is_prime(v) && no_factor;
                r.witness.emplace_back("F" + std::to_string(m), v);
            }
            return r;
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "C04";
        c.category = ClaimCategory::fermat;
        c.statement = "for these yields the numbers 5,7,257 and 65537, which "
                      "all occur among the prime numbers in the table";
        c.check = "printed list {5,7,257,65537} == fermat_value(m) for m in 1..4";
        c.euler_verdict = EulerVerdict::listed;
        c.expected_agree = false;
        c.note = "the printed 7 is a misprint: 2^(2^2)+1 = 17";
        c.run = [] {
            CheckResult r;
            const u64 printed[] = {5, 7, 257, 65537};
            r.holds = true;
            for (u64 m = 1; m <= 4; ++m) {
                const u64 v = fermat_value(FermatIndex(m));
                if (v != printed[m - 1]) {
                    r.holds = false;
                    r.witness.emplace_back("printed_m" + std::to_string(m),
                                           printed[m - 1]);
                    r.witness.emplace_back("computed_m" + std::to_string(m), v);
                }
            }
            return r;
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "C05";
        c.category = ClaimCategory::fermat;
        c.statement = "the formula a^2+1 can be divided by 5 whenever a=5b+-3";
        c.check = "5 | a^2+1 iff a mod 5 in {2,3}, for all a <= 10^4";
        c.euler_verdict = EulerVerdict::asserted_true;
        c.expected_agree = true;
        c.run = [] {
            CheckResult r;
            r.holds = true;
            for (u64 a = 1; a <= 10'000; ++a) {
                const bool divides = (mul_mod(a, a, 5) + 1) % 5 == 0;
                const bool in_class = a % 5 == 2 || a % 5 == 3;
                if (divides != in_class) {
                    r.holds = false;
                    r.witness.emplace_back("counterexample_a", a);
                    break;
                }
            }
            return r;
        };
        claims.push_back(std::move(c));
    }

    claims.push_back(divisor_claim("C06", ClaimCategory::fermat,
                                   "30^2+1 can be divided by 17", 17,
                                   PowerForm(30, 2, +1)));
    claims.push_back(divisor_claim("C07", ClaimCategory::fermat, "50^2+1 by 41",
                                   41, PowerForm(50, 2, +1)));
    claims.push_back(divisor_claim("C08", ClaimCategory::fermat,
                                   "10^4+1 has the divisor 73", 73,
                                   PowerForm(10, 4, +1)));
    claims.push_back(divisor_claim("C09", ClaimCategory::fermat,
                                   "6^8+1 has the divisor 17", 17,
                                   PowerForm(6, 8, +1)));
    claims.push_back(divisor_claim("C10", ClaimCategory::fermat,
                                   "6^{128}+1 is divisible by 257", 257,
                                   PowerForm(6, 128, +1)));

    claims.push_back(factorization_claim(
        "C11", "2^{11}-1, i.e. 2047, has the divisors 23 and 89", 2047, 23, 89));
    {
        Claim c;
        c.id = "C12";
        c.category = ClaimCategory::mersenne;
        c.statement = "2^{23}-1 can be divided by 47";
        c.check = "divides_power_form(47, 2^23-1) and exclusion_applies(23)";
        c.euler_verdict = EulerVerdict::asserted_true;
        c.expected_agree = true;
        c.note = "47 = 2*23+1, the exclusion-rule divisor";
        c.run = [] {
            CheckResult r;
            r.holds = divides_power_form(47, PowerForm(2, 23, -1)) &&
                      exclusion_applies(23);
            r.witness.emplace_back("divisor", 47);
            return r;
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "C13";
        c.category = ClaimCategory::mersenne;
        c.statement = "has 511 or 2^9-1 as a prime, while it is divisible by "
                      "2^3-1, i.e. 7";
        c.check = "factorize(511) == {7, 73}, 2^3-1 among the algebraic "
                  "divisors of 2^9-1, and 7 | 2^9-1";
        c.euler_verdict = EulerVerdict::asserted_true;
        c.expected_agree = true;
        c.note = "the 511 entry is Wolff's; the text supplies the refutation";
        c.run = [] {
            CheckResult r;
            const auto f = factorize(511);
            const auto divs = algebraic_divisors(PowerForm(2, 9, -1));
            const bool has_cube = std::find(divs.begin(), divs.end(),
                                            PowerForm(2, 3, -1)) != divs.end();
            r.holds = f.factors ==
                          std::vector<std::pair<u64, u64>>{{7, 1}, {73, 1}} &&
                      has_cube && divides_power_form(7, PowerForm(2, 9, -1));
            for (std::size_t i = 0; i < f.factors.size(); ++i)
                r.witness.emplace_back("p" + std::to_string(i + 1),
                                       f.factors[i].first);
            return r;
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "C14";
        c.category = ClaimCategory::mersenne;
        c.statement = "the following cases should be excluded: 11, 23, 83, "
                      "131, 179, 191, 239 etc.";
        c.check = "excluded_exponents(239) == [11,23,83,131,179,191,239]";
        c.euler_verdict = EulerVerdict::listed;
        c.expected_agree = true;
        c.note = "the rule behind the list: p == 3 (mod 4) with 2p+1 prime "
                 "forces 2p+1 | 2^p-1";
        c.run = [] {
            CheckResult r;
            const auto got = excluded_exponents(239);
            r.holds = got == std::vector<u64>{11, 23, 83, 131, 179, 191, 239};
            for (std::size_t i = 0; i < got.size(); ++i)
                r.witness.emplace_back("p" + std::to_string(i + 1), got[i]);
            return r;
        };
        claims.push_back(std::move(c));
    }

    claims.push_back(mersenne_scan_claim(
        "C15", "2^{37}-1 can be divided by 223", 37, 223));
    claims.push_back(mersenne_scan_claim("C16", "2^{43}-1 by 431", 43, 431));
    claims.push_back(divisor_claim(
        "C17", ClaimCategory::mersenne, "2^{29}-1 by 1103", 1103,
        PowerForm(2, 29, -1),
        "233 also divides 2^29-1 and is smaller; the text names 1103"));
    claims.push_back(mersenne_scan_claim(
        "C18", "2^{73}-1 by 439", 73, 439));

    {
        Claim c;
        c.id = "C19";
        c.category = ClaimCategory::perfect;
        c.statement = "11 perfect numbers arise from the following numbers "
                      "taken for n, 1, 2, 3, 5, 7, 13, 17, 19, 31, 41, 47";
        c.check = "audit_perfect_list(47, k_max=100000): the historical list "
                  "matches the computed exponents exactly";
        c.euler_verdict = EulerVerdict::listed;
        c.expected_agree = false;
        c.note = "wrong on three entries: n=1 yields 1 (not perfect); "
                 "2^41-1 and 2^47-1 are composite";
        c.run = [] {
            CheckResult r;
            const auto audit = audit_perfect_list(47, 100'000);
            r.holds = audit.euler_only.empty() && audit.computed_only.empty();
            for (const auto& refutation : audit.euler_only) {
                if (refutation.not_perfect_value)
                    r.witness.emplace_back("aliquot_sum_of_1", 0);
                else if (refutation.factor)
                    r.witness.emplace_back(
                        "factor_of_2^" + std::to_string(refutation.exponent) +
                            "-1",
                        *refutation.factor);
            }
            return r;
        };
        claims.push_back(std::move(c));
    }

    {
        Claim c;
        c.id = "C20";
        c.category = ClaimCategory::theorem;
        c.statement = "If n is a prime number, all powers having the exponent "
                      "n-1 leave either nothing or 1 when divided by n";
        c.check = "check_theorem1(n_bound=2000, a_bound=2000) finds no "
                  "counterexample and a composite witness for every composite n";
        c.euler_verdict = EulerVerdict::asserted_true;
        c.expected_agree = true;
        c.run = [] {
            CheckResult r;
            const auto report = check_theorem1(2000, 2000);
            r.holds = report.passed();
            if (!report.witnesses.empty()) {
                const auto& w = report.witnesses.front();
                r.witness.emplace_back("composite_witness_n", w.n);
                r.witness.emplace_back("composite_witness_a", w.a);
                r.witness.emplace_back("composite_witness_residue", w.residue);
            }
            return r;
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "C21";
        c.category = ClaimCategory::theorem;
        c.statement = "every power whose exponent is n^{m-1}(n-1) leaves "
                      "either 0 or 1 when divided by n^m";
        c.check = "check_theorem2(n_bound=50, a_bound=200) finds no "
                  "counterexample";
        c.euler_verdict = EulerVerdict::asserted_true;
        c.expected_agree = true;
        c.run = [] {
            CheckResult r;
            r.holds = check_theorem2(50, 200).passed();
            return r;
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "C22";
        c.category = ClaimCategory::theorem;
        c.statement = "let A be the least common multiple of them decreased "
                      "by unity ... any power of the exponent A, like a^A, "
                      "divided by mnpq etc. will leave either 0 or 1";
        c.check = "check_theorem3(S, a_bound=500) finds no counterexample for "
                  "every subset S of the primes below 30 with 1 <= |S| <= 3";
        c.euler_verdict = EulerVerdict::asserted_true;
        c.expected_agree = true;
        c.note = "non-coprime bases can leave other residues (e.g. 3^4 mod 15 "
                 "= 6); the theorem's own exclusion covers them";
        c.run = [] {
            CheckResult r;
            r.holds = true;
            const auto ps = sieve(29);
            const auto scan = [&](std::vector<u64> subset) {
                if (!check_theorem3(subset, 500).passed()) r.holds = false;
            };
            for (std::size_t i = 0; i < ps.size(); ++i) {
                scan({ps[i]});
                for (std::size_t j = i + 1; j < ps.size(); ++j) {
                    scan({ps[i], ps[j]});
                    for (std::size_t k = j + 1; k < ps.size(); ++k)
                        scan({ps[i], ps[j], ps[k]});
                }
            }
            return r;
        };
        claims.push_back(std::move(c));
    }

    claims.push_back(rule_scan_claim(
        "C23",
        "3^n+1 will be able to be divided by 2n+1, if either n=6p+2 or "
        "n=6p+3; while 3^n-1 will be able to be divided by 2n+1 if either "
        "n=6p or n=6p-1",
        0));
    claims.push_back(rule_scan_claim(
        "C24",
        "3^n+2^n can be divided by 2n+1 if n=12p+3, 12p+5, 12p+6 or 12p+8, "
        "And 3^n-2^n can be divided by 2n+1 if n=12, 12p+2, 12p+9 or 12p+11",
        1,
        "the printed class \"n=12\" is read as n == 0 (mod 12); the "
        "remaining classes fix the period at 12"));
    claims.push_back(rule_scan_claim(
        "C25",
        "Under the same conditions which held for 3^n+2^n, 6^n+1 can also be "
        "divided by 2n+1; and 6^n-1 under those which held for 3^n-2^n",
        2));
    claims.push_back(rule_scan_claim(
        "C26",
        "2^m+1 can be divided if m=4p+1 or 4p+2; while 2^m-1 will have the "
        "divisor 2m+1 if m=4p or 4p-1",
        3));

    {
        Claim c;
        c.id = "C27";
        c.category = ClaimCategory::theorem;
        c.statement = "2^{2m}-1 will always be able to be divided by 2m+1 if "
                      "2m+1 is a prime number";
        c.check = "check_square_split(q_bound=1000000) finds no counterexample";
        c.euler_verdict = EulerVerdict::asserted_true;
        c.expected_agree = true;
        c.note = "with the split corollary: 2m+1 divides exactly one of "
                 "2^m+1, 2^m-1";
        c.run = [] {
            CheckResult r;
            r.holds = check_square_split(1'000'000).passed();
            return r;
        };
        claims.push_back(std::move(c));
    }

    return claims;
}

}  // namespace

const std::vector<Claim>& catalog() {
    static const std::vector<Claim> claims = build_catalog();
    return claims;
}

const Claim* find_claim(std::string_view id) {
    for (const auto& c : catalog())
        if (c.id == id) return &c;
    return nullptr;
}

ClaimOutcome run_claim(const Claim& c) {
    ClaimOutcome outcome;
    outcome.id = c.id;
    const auto start = std::chrono::steady_clock::now();
    try {
        const CheckResult result = c.run();
        outcome.computed_verdict = result.holds ? Verdict::holds : Verdict::fails;
        outcome.agrees_with_paper = result.holds;
        outcome.witness = result.witness;
    } catch (const std::exception& e) {
        outcome.computed_verdict = Verdict::error;
        outcome.agrees_with_paper = false;
        outcome.error = e.what();
    }
    const auto end = std::chrono::steady_clock::now();
    outcome.elapsed_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    return outcome;
}

std::pair<std::vector<ClaimOutcome>, RunSummary> run_all() {
    std::vector<ClaimOutcome> outcomes;
    outcomes.reserve(catalog().size());
    for (const auto& c : catalog()) outcomes.push_back(run_claim(c));
    std::sort(outcomes.begin(), outcomes.end(),
              [](const ClaimOutcome& a, const ClaimOutcome& b) {
                  return a.id < b.id;
              });
    RunSummary summary;
    for (const auto& o : outcomes) {
        if (o.computed_verdict == Verdict::error)
            ++summary.errors;
        else if (o.agrees_with_paper)
            ++summary.agree;
        else
            ++summary.disagree;
    }
    return {std::move(outcomes), summary};
}

bool matches_expected_pattern(const std::vector<ClaimOutcome>& outcomes) {
    for (const auto& o : outcomes) {
        if (o.computed_verdict == Verdict::error) return false;
        const Claim* c = find_claim(o.id);
        if (c == nullptr || o.agrees_with_paper != c->expected_agree)
            return false;
    }
    return true;
}

}  // namespace e26
