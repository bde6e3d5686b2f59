#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "markoff/arith.hpp"

namespace markoff {

/// Thrown when (a, b, c) does not satisfy a^2 + b^2 + c^2 = 3abc. Carries
/// both sides of the equation so callers can report the exact mismatch.
class InvalidTripleError : public std::invalid_argument {
public:
    InvalidTripleError(Natural lhs, Natural rhs);

    const Natural& lhs() const { return lhs_; }
    const Natural& rhs() const { return rhs_; }

private:
    Natural lhs_;  // a^2 + b^2 + c^2
    Natural rhs_;  // 3abc
};

/// A Markoff triple: positive integers with a^2 + b^2 + c^2 = 3abc, stored
/// as the canonical ascending representative a <= b <= c. Construction
/// verifies the equation eagerly; instances are immutable values.
///
/// Ordering is (c, b, a) lexicographic, i.e. ascending largest element with
/// ties broken by b then a -- the emission order used everywhere.
class MarkoffTriple {
public:
    MarkoffTriple(Natural a, Natural b, Natural c);

    const Natural& a() const { return a_; }
    const Natural& b() const { return b_; }
    const Natural& c() const { return c_; }

    /// (1,1,1) and (1,1,2); every other triple has three distinct elements.
    bool is_singular() const;

    friend bool operator==(const MarkoffTriple& x, const MarkoffTriple& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }
    friend std::strong_ordering operator<=>(const MarkoffTriple& x,
                                            const MarkoffTriple& y) {
        if (int k = cmp(x.c_, y.c_); k != 0) return k <=> 0;
        if (int k = cmp(x.b_, y.b_); k != 0) return k <=> 0;
        return cmp(x.a_, y.a_) <=> 0;
    }

    std::string str() const;  // "(a, b, c)"

private:
    Natural a_, b_, c_;
};

/// Canonicalizes and validates; throws InvalidTripleError when the equation
/// fails and std::invalid_argument when any input is < 1.
MarkoffTriple make_triple(const Natural& a, const Natural& b, const Natural& c);

/// The up-to-three distinct triples reachable by replacing one element x by
/// its conjugate root (3yz - x). Returned ascending, duplicates collapsed;
/// the singular triples have fewer than three distinct neighbors.
std::vector<MarkoffTriple> neighbors(const MarkoffTriple& t);

/// Replaces the largest element c by 3ab - c and re-sorts. For non-singular
/// input the new maximum is strictly smaller; (1,1,1) maps to (1,1,2).
MarkoffTriple reduce_step(const MarkoffTriple& t);

struct ReductionPath {
    std::vector<MarkoffTriple> steps;  // input first, (1,1,1) last
};

/// Applies reduce_step until (1,1,1), recording every triple along the way.
/// (1,1,1) itself is terminal and yields a single-entry path.
ReductionPath reduce_to_root(const MarkoffTriple& t);

/// The growth inequalities c > 2ab and b > 2c'a (with c' = 3ab - c). Only
/// defined for non-singular triples other than (1,2,5); rejects the rest.
bool check_lemma3(const MarkoffTriple& t);

}  // namespace markoff
