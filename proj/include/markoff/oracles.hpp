#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "markoff/arith.hpp"
#include "markoff/triple.hpp"

namespace markoff {

/// All x with 0 < x < m/2 and x^2 + r = 0 (mod m), found by exhaustive
/// search. The search is unconditional: it never assumes the at-most-one
/// conclusion it exists to test.
struct QuadraticRootCount {
    Natural m;
    Natural r;
    std::vector<Natural> solutions;
};

/// Requires m = p^n or 2p^n for an odd prime p (validated) and gcd(r, m) = 1;
/// rejects anything else. The interval bound is the strict rational
/// comparison 2x < m, so no division is involved.
QuadraticRootCount count_quadratic_roots(const Natural& m, const Natural& r);

struct Lemma2Violation {
    Natural m;
    Natural r;
    std::vector<Natural> solutions;  // two or more
};

struct Lemma2Summary {
    std::size_t moduli_checked = 0;
    std::size_t pairs_checked = 0;
    std::vector<Lemma2Violation> violations;  // expected empty
};

/// Runs count_quadratic_roots for every valid modulus m <= max_m and every
/// r in [1, m) coprime to m, recording any (m, r) with two or more roots.
Lemma2Summary sweep_lemma2(const Natural& max_m);

struct Lemma1Violation {
    Natural x;
    Natural y;
    Natural divisor;  // odd divisor of x^2 + y^2 with divisor mod 4 != 1
};

struct Lemma1Summary {
    std::size_t pairs_checked = 0;
    std::size_t divisors_checked = 0;
    std::vector<Lemma1Violation> violations;  // expected empty
};

/// For every coprime pair 1 <= x <= y <= max_xy, enumerates all odd divisors
/// of x^2 + y^2 by trial division and records any that are not 1 mod 4.
Lemma1Summary sweep_lemma1(const Natural& max_xy);

/// The exact rewrite identities (a-b)^2 + c^2 = ab(3c-2) and
/// (a+b)^2 + c^2 = ab(3c+2); both follow algebraically from the Markoff
/// equation, and this evaluates them directly.
bool check_rewrites(const MarkoffTriple& t);

namespace detail {

/// Exhaustive root scan over 0 < 2x < m, generic so the word-sized fast path
/// and the big-integer path share one implementation.
template <typename Int>
std::vector<Int> scan_quadratic_roots(const Int& m, const Int& r) {
    std::vector<Int> solutions;
    for (Int x = 1; 2 * x < m; ++x) {
        if ((x * x + r) % m == 0) {
            solutions.push_back(x);
        }
    }
    return solutions;
}

}  // namespace detail

}  // namespace markoff
