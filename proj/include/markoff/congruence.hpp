#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "markoff/enumerate.hpp"
#include "markoff/triple.hpp"

namespace markoff {

// Stable clause identifiers; part of the CLI's machine-readable output.
inline constexpr const char* kClauseOdd4 = "ODD4";      // e odd: e mod 4 = 1
inline constexpr const char* kClauseEven8 = "EVEN8";    // e even: e mod 8 = 2
inline constexpr const char* kClauseEven32 = "EVEN32";  // e even: e mod 32 = 2
inline constexpr const char* kClauseCor4 = "COR4";      // e even: 3e-2 mod 32 = 4
inline constexpr const char* kClauseCor8 = "COR8";      // e even: 3e+2 mod 32 = 8
inline constexpr const char* kClauseCoprime = "COPRIME";  // pairwise gcds all 1

/// One evaluated clause. Residue clauses have modulus > 0 and actual in
/// [0, modulus); the COPRIME clause is an exact equality check (modulus 0,
/// expected 1, actual the largest pairwise gcd). The actual value is always
/// retained so a failure surfaces the violating residue immediately.
struct CongruenceCheck {
    std::string clause;
    std::optional<Natural> element;  // the element examined; empty for COPRIME
    Natural modulus;
    Natural expected;
    Natural actual;
    bool pass = false;

    bool operator==(const CongruenceCheck&) const = default;
};

struct CongruenceFinding {
    MarkoffTriple triple;
    std::vector<CongruenceCheck> checks;

    bool all_pass() const;

    bool operator==(const CongruenceFinding&) const = default;
};

/// Evaluates every clause for every element of t (ODD4 for odd elements;
/// EVEN8, EVEN32, COR4, COR8 for even ones) plus one COPRIME clause for the
/// whole triple. Never short-circuits.
CongruenceFinding check_triple_congruences(const MarkoffTriple& t);

struct CongruenceSweep {
    std::vector<CongruenceFinding> findings;  // one per triple, report order
    std::size_t checks_evaluated = 0;
    std::size_t failures = 0;  // expected 0: these clauses are theorems
};

CongruenceSweep sweep_congruences(const EnumerationReport& report);

}  // namespace markoff
