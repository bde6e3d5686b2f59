#include "markoff/oracles.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "markoff/enumerate.hpp"
#include "support/naive_oracles.hpp"

using markoff::count_quadratic_roots;
using markoff::Natural;

TEST_CASE("count_quadratic_roots small cases") {
    auto result = count_quadratic_roots(13, 1);
    CHECK(result.solutions == std::vector<Natural>{5});  // 8 is the root above m/2

    result = count_quadratic_roots(10, 1);  // m = 2 * 5
    CHECK(result.solutions == std::vector<Natural>{3});

    result = count_quadratic_roots(9, 1);  // squares mod 9 miss -1
    CHECK(result.solutions.empty());
}

TEST_CASE("count_quadratic_roots rejects bad moduli and non-coprime r") {
    CHECK_THROWS_AS((void)count_quadratic_roots(8, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)count_quadratic_roots(100, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)count_quadratic_roots(15, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)count_quadratic_roots(9, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)count_quadratic_roots(13, 0), std::invalid_argument);
}

TEST_CASE("word-sized and big-integer scans agree") {
    for (unsigned long m : {9UL, 13UL, 25UL, 27UL, 49UL, 50UL, 121UL}) {
        for (unsigned long r = 1; r < m; ++r) {
            if (std::gcd(r, m) != 1) {
                continue;
            }
            const auto fast = markoff::detail::scan_quadratic_roots<std::uint64_t>(m, r);
            const auto big =
                markoff::detail::scan_quadratic_roots<Natural>(Natural(m), Natural(r));
            REQUIRE(fast.size() == big.size());
            for (std::size_t i = 0; i < fast.size(); ++i) {
                CHECK(big[i] == fast[i]);
            }
        }
    }
}

TEST_CASE("lemma 2 sweep finds nothing, and counts what it visited") {
    const auto summary = markoff::sweep_lemma2(50);
    CHECK(summary.violations.empty());

    // Recount the valid moduli and coprime pairs with trial division.
    std::size_t moduli = 0, pairs = 0;
    for (std::uint64_t m = 3; m <= 50; ++m) {
        std::uint64_t odd = m;
        unsigned twos = 0;
        while (odd % 2 == 0) {
            odd /= 2;
            ++twos;
        }
        const auto factors = testsupport::trial_factorize(odd);
        if (twos > 1 || odd == 1 || factors.size() != 1) {
            continue;
        }
        ++moduli;
        for (std::uint64_t r = 1; r < m; ++r) {
            if (std::gcd(r, m) == 1) {
                ++pairs;
            }
        }
    }
    CHECK(summary.moduli_checked == moduli);
    CHECK(summary.pairs_checked == pairs);
}

TEST_CASE("lemma 2 sweep at the minimal bound") {
    const auto summary = markoff::sweep_lemma2(3);
    CHECK(summary.moduli_checked == 1);
    CHECK(summary.pairs_checked == 2);  // r in {1, 2}; only x = 1 is scanned
    CHECK(summary.violations.empty());
}

TEST_CASE("lemma 2 sweep below the smallest modulus is empty") {
    const auto summary = markoff::sweep_lemma2(2);
    CHECK(summary.moduli_checked == 0);
    CHECK(summary.pairs_checked == 0);
    CHECK(summary.violations.empty());
}

TEST_CASE("lemma 1 sweep on a tiny range, counted by hand") {
    const auto summary = markoff::sweep_lemma1(3);
    // Coprime pairs: (1,1) s=2, (1,2) s=5, (1,3) s=10, (2,3) s=13.
    // Odd divisors: {1}, {1,5}, {1,5}, {1,13}.
    CHECK(summary.pairs_checked == 4);
    CHECK(summary.divisors_checked == 7);
    CHECK(summary.violations.empty());
}

TEST_CASE("lemma 1 sweep up to 60") {
    const auto summary = markoff::sweep_lemma1(60);
    CHECK(summary.violations.empty());
}

TEST_CASE("rewrite identities on the worked examples") {
    CHECK(markoff::check_rewrites(markoff::make_triple(1, 2, 5)));
    CHECK(markoff::check_rewrites(markoff::make_triple(1, 1, 1)));
    CHECK(markoff::check_rewrites(markoff::make_triple(2, 5, 29)));
}

TEST_CASE("rewrite identities over a full enumeration") {
    const auto report = markoff::enumerate_up_to(100000);
    for (const auto& t : report.triples) {
        if (!markoff::check_rewrites(t)) {
            FAIL("rewrite identity failed for " << t.str());
        }
    }
}
