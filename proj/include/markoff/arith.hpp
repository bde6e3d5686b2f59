#pragma once

#include <optional>
#include <stdexcept>

#include <gmpxx.h>

namespace markoff {

/// Unbounded non-negative integer. Every quantity in this library is exact;
/// there is no floating point and no silent overflow anywhere.
using Natural = mpz_class;

/// Largest value for which the fixed Miller-Rabin witness set used by
/// is_probable_prime is a proven deterministic primality test
/// (first 12 primes as witnesses, valid below 3317044064679887385961981).
const Natural& deterministic_primality_limit();

/// Extra Miller-Rabin rounds applied above the deterministic limit when the
/// caller does not say otherwise. Error probability is at most 4^-rounds.
inline constexpr unsigned kDefaultMrRounds = 24;

enum class PrimePowerKind { PurePn, TwoPn, FourPn, EightPn, None };

const char* to_string(PrimePowerKind kind);

/// Decomposition verdict for an integer m = 2^e * p^n with p an odd prime,
/// n >= 1 and e in {0,1,2,3} (encoded by kind). kind == None means m has no
/// such decomposition; p and n are meaningless in that case.
struct PrimePowerForm {
    PrimePowerKind kind = PrimePowerKind::None;
    Natural p;
    unsigned long n = 0;

    /// e in m = 2^e * p^n; only valid when kind != None.
    unsigned two_exponent() const;
    /// Rebuilds 2^e * p^n. Only valid when kind != None.
    Natural reconstruct() const;

    bool operator==(const PrimePowerForm&) const = default;
};

struct PrimePower {
    Natural p;
    unsigned long n = 0;

    bool operator==(const PrimePower&) const = default;
};

/// Miller-Rabin primality test. Deterministic (exact) for
/// m < deterministic_primality_limit() via the fixed 12-witness set; above
/// that, `rounds` extra rounds with reproducibly derived bases are run and
/// the error probability is at most 4^-rounds. Returns false for 0 and 1.
bool is_probable_prime(const Natural& m, unsigned rounds = kDefaultMrRounds);

/// Floor k-th root: the unique r with r^k <= m < (r+1)^k. Rejects k = 0.
Natural integer_nth_root(const Natural& m, unsigned long k);

/// Writes m = p^n with p prime and n >= 1 if possible (the representation is
/// unique). Scans exponents from floor(log2 m) down to 1. Rejects m < 2.
std::optional<PrimePower> prime_power_decompose(const Natural& m,
                                                unsigned rounds = kDefaultMrRounds);

/// Strips the two-part of m: with m = 2^e * q (q odd), returns the matching
/// PrimePowerForm when e <= 3 and q is an odd prime power, None otherwise.
/// Rejects m < 2.
PrimePowerForm classify_two_adic(const Natural& m, unsigned rounds = kDefaultMrRounds);

}  // namespace markoff
