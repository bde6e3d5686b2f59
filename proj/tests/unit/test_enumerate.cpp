#include "markoff/enumerate.hpp"

#include <vector>

#include "doctest.h"
#include "support/naive_oracles.hpp"

using markoff::enumerate_up_to;
using markoff::make_triple;
using markoff::MarkoffTriple;
using markoff::multiplicity;
using markoff::Natural;

namespace {

std::vector<MarkoffTriple> from_oracle(std::uint64_t bound) {
    std::vector<MarkoffTriple> out;
    for (const auto& [a, b, c] : testsupport::brute_force_triples(bound)) {
        out.push_back(make_triple(static_cast<unsigned long>(a),
                                  static_cast<unsigned long>(b),
                                  static_cast<unsigned long>(c)));
    }
    return out;
}

}  // namespace

TEST_CASE("enumeration prefix up to 30") {
    const auto report = enumerate_up_to(30);
    CHECK(report.triples ==
          std::vector<MarkoffTriple>{make_triple(1, 1, 1), make_triple(1, 1, 2),
                                     make_triple(1, 2, 5), make_triple(1, 5, 13),
                                     make_triple(2, 5, 29)});
}

TEST_CASE("enumeration with bound 1 is just the root") {
    const auto report = enumerate_up_to(1);
    CHECK(report.triples == std::vector<MarkoffTriple>{make_triple(1, 1, 1)});
    CHECK_THROWS_AS((void)enumerate_up_to(0), std::invalid_argument);
}

TEST_CASE("the first 12 triples, with the corrected 12th entry") {
    const auto report = enumerate_up_to(700);
    const std::vector<MarkoffTriple> expected{
        make_triple(1, 1, 1),    make_triple(1, 1, 2),   make_triple(1, 2, 5),
        make_triple(1, 5, 13),   make_triple(2, 5, 29),  make_triple(1, 13, 34),
        make_triple(1, 34, 89),  make_triple(2, 29, 169), make_triple(5, 13, 194),
        make_triple(1, 89, 233), make_triple(5, 29, 433),
        // The triple with largest element 610 is (1, 233, 610); the often
        // quoted (89, 233, 610) does not solve the equation.
        make_triple(1, 233, 610)};
    CHECK(report.triples == expected);
    CHECK(report.triples == from_oracle(700));
}

TEST_CASE("enumeration agrees with the brute-force oracle up to 300") {
    CHECK(enumerate_up_to(300).triples == from_oracle(300));
}

TEST_CASE("filtering a larger enumeration matches a direct one") {
    const auto big = enumerate_up_to(700);
    for (unsigned long bound : {1UL, 2UL, 5UL, 29UL, 30UL, 100UL, 433UL, 699UL}) {
        std::vector<MarkoffTriple> filtered;
        for (const MarkoffTriple& t : big.triples) {
            if (t.c() <= bound) {
                filtered.push_back(t);
            }
        }
        if (enumerate_up_to(bound).triples != filtered) {
            FAIL("filtered enumeration mismatch at bound " << bound);
        }
    }
}

TEST_CASE("registry keys are exactly the distinct largest elements") {
    const auto report = enumerate_up_to(1000);
    CHECK(report.registry.size() == report.triples.size());  // no multiplicities
    for (const MarkoffTriple& t : report.triples) {
        const auto it = report.registry.find(t.c());
        REQUIRE(it != report.registry.end());
        CHECK(it->second == std::vector<MarkoffTriple>{t});
    }
}

TEST_CASE("multiplicity lookups") {
    const auto report = enumerate_up_to(1000);
    CHECK(multiplicity(report, 610) == 1);
    CHECK(multiplicity(report, 6) == 0);
    CHECK(multiplicity(report, 1) == 1);
    CHECK_THROWS_AS((void)multiplicity(report, 1001), std::invalid_argument);
}

TEST_CASE("reduction paths stay below the enumeration bound") {
    const auto report = enumerate_up_to(100000);
    for (const MarkoffTriple& t : report.triples) {
        for (const MarkoffTriple& step : markoff::reduce_to_root(t).steps) {
            if (step.c() > report.bound) {
                FAIL("descent escaped the bound from " << t.str());
            }
        }
    }
}
