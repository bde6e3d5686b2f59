#include "markoff/triple.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "markoff/enumerate.hpp"

using markoff::InvalidTripleError;
using markoff::make_triple;
using markoff::MarkoffTriple;
using markoff::Natural;
using markoff::neighbors;
using markoff::reduce_step;
using markoff::reduce_to_root;

TEST_CASE("make_triple canonicalizes and validates") {
    const MarkoffTriple t = make_triple(5, 1, 2);
    CHECK(t.a() == 1);
    CHECK(t.b() == 2);
    CHECK(t.c() == 5);
    CHECK(t.str() == "(1, 2, 5)");

    CHECK(make_triple(1, 1, 1) == make_triple(1, 1, 1));
    CHECK(make_triple(1, 1, 1).is_singular());
    CHECK(make_triple(1, 1, 2).is_singular());
    CHECK_FALSE(make_triple(1, 2, 5).is_singular());
}

TEST_CASE("make_triple rejects the misprinted (89, 233, 610)") {
    try {
        (void)make_triple(89, 233, 610);
        FAIL("expected InvalidTripleError");
    } catch (const InvalidTripleError& e) {
        CHECK(e.lhs() == 434310);    // 89^2 + 233^2 + 610^2
        CHECK(e.rhs() == 37948710);  // 3 * 89 * 233 * 610
    }
}

TEST_CASE("make_triple rejects non-solutions and non-positive input") {
    CHECK_THROWS_AS((void)make_triple(1, 2, 3), InvalidTripleError);
    CHECK_THROWS_AS((void)make_triple(2, 2, 2), InvalidTripleError);
    CHECK_THROWS_AS((void)make_triple(0, 1, 1), std::invalid_argument);
}

TEST_CASE("neighbors of the first few triples") {
    CHECK(neighbors(make_triple(1, 5, 13)) ==
          std::vector<MarkoffTriple>{make_triple(1, 2, 5), make_triple(1, 13, 34),
                                     make_triple(5, 13, 194)});
    CHECK(neighbors(make_triple(1, 1, 1)) ==
          std::vector<MarkoffTriple>{make_triple(1, 1, 2)});
    CHECK(neighbors(make_triple(1, 1, 2)) ==
          std::vector<MarkoffTriple>{make_triple(1, 1, 1), make_triple(1, 2, 5)});
}

TEST_CASE("reduce_step examples") {
    CHECK(reduce_step(make_triple(2, 5, 29)) == make_triple(1, 2, 5));
    CHECK(reduce_step(make_triple(1, 2, 5)) == make_triple(1, 1, 2));
    CHECK(reduce_step(make_triple(1, 1, 2)) == make_triple(1, 1, 1));
    CHECK(reduce_step(make_triple(1, 1, 1)) == make_triple(1, 1, 2));
}

TEST_CASE("reduce_to_root records the whole path") {
    const auto path = reduce_to_root(make_triple(2, 5, 29)).steps;
    REQUIRE(path.size() == 4);
    CHECK(path[0] == make_triple(2, 5, 29));
    CHECK(path[1] == make_triple(1, 2, 5));
    CHECK(path[2] == make_triple(1, 1, 2));
    CHECK(path[3] == make_triple(1, 1, 1));

    CHECK(reduce_to_root(make_triple(1, 1, 1)).steps.size() == 1);

    const auto longer = reduce_to_root(make_triple(5, 13, 194)).steps;
    REQUIRE(longer.size() == 5);
    CHECK(longer[1] == make_triple(1, 5, 13));
    CHECK(longer.back() == make_triple(1, 1, 1));
}

TEST_CASE("check_lemma3 examples and exclusions") {
    CHECK(markoff::check_lemma3(make_triple(2, 5, 29)));  // 29 > 20; c' = 1, 5 > 4
    CHECK(markoff::check_lemma3(make_triple(1, 5, 13)));  // 13 > 10; c' = 2, 5 > 4
    CHECK_THROWS_AS((void)markoff::check_lemma3(make_triple(1, 2, 5)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)markoff::check_lemma3(make_triple(1, 1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)markoff::check_lemma3(make_triple(1, 1, 1)),
                    std::invalid_argument);
}

TEST_CASE("ordering is ascending largest element with (b, a) tie-break") {
    std::vector<MarkoffTriple> v{make_triple(5, 13, 194), make_triple(1, 1, 1),
                                 make_triple(2, 29, 169), make_triple(1, 13, 34)};
    std::sort(v.begin(), v.end());
    CHECK(v.front() == make_triple(1, 1, 1));
    CHECK(v.back() == make_triple(5, 13, 194));
}

TEST_CASE("Vieta relations and neighbor involution over an enumeration") {
    const auto report = markoff::enumerate_up_to(100000);
    for (const MarkoffTriple& t : report.triples) {
        const Natural conjugate = 3 * t.a() * t.b() - t.c();
        CHECK(t.c() + conjugate == 3 * t.a() * t.b());
        CHECK(t.c() * conjugate == t.a() * t.a() + t.b() * t.b());

        for (const MarkoffTriple& u : neighbors(t)) {
            const auto back = neighbors(u);
            if (std::find(back.begin(), back.end(), t) == back.end()) {
                FAIL("involution failed between " << t.str() << " and " << u.str());
            }
        }

        if (!t.is_singular()) {
            CHECK(t.a() < t.b());
            CHECK(t.b() < t.c());
            CHECK(reduce_step(t).c() < t.c());
        }
    }
}
