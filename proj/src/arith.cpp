#include "markoff/arith.hpp"

#include <array>

namespace markoff {

namespace {

// Witnesses proving primality for all m < 3317044064679887385961981
// (Sorenson-Webster bound for the first 12 primes).
constexpr std::array<unsigned long, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

// Trial-division primes; together they decide primality below 101^2 = 10201.
constexpr std::array<unsigned long, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// One Miller-Rabin round: true when `base` proves m composite.
// Expects m odd, m > 2, m - 1 = odd * 2^twos.
bool witness_shows_composite(const Natural& base, const Natural& m,
                             const Natural& odd, unsigned long twos) {
    Natural a = base % m;
    if (a == 0) {
        return false;  // base divisible by m carries no information
    }
    Natural x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), odd.get_mpz_t(), m.get_mpz_t());
    const Natural m_minus_1 = m - 1;
    if (x == 1 || x == m_minus_1) {
        return false;
    }
    for (unsigned long i = 1; i < twos; ++i) {
        x = (x * x) % m;
        if (x == m_minus_1) {
            return false;
        }
    }
    return true;
}

}  // namespace

const Natural& deterministic_primality_limit() {
    static const Natural limit("3317044064679887385961981");
    return limit;
}

const char* to_string(PrimePowerKind kind) {
    switch (kind) {
        case PrimePowerKind::PurePn: return "PurePn";
        case PrimePowerKind::TwoPn: return "TwoPn";
        case PrimePowerKind::FourPn: return "FourPn";
        case PrimePowerKind::EightPn: return "EightPn";
        case PrimePowerKind::None: return "None";
    }
    return "None";
}

unsigned PrimePowerForm::two_exponent() const {
    switch (kind) {
        case PrimePowerKind::PurePn: return 0;
        case PrimePowerKind::TwoPn: return 1;
        case PrimePowerKind::FourPn: return 2;
        case PrimePowerKind::EightPn: return 3;
        case PrimePowerKind::None: break;
    }
    throw std::logic_error("PrimePowerForm::two_exponent: kind is None");
}

Natural PrimePowerForm::reconstruct() const {
    Natural pn;
    mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), n);
    return pn << two_exponent();
}

bool is_probable_prime(const Natural& m, unsigned rounds) {
    if (m < 2) {
        return false;
    }
    for (unsigned long p : kSmallPrimes) {
        if (m == p) {
            return true;
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            return false;
        }
    }
    if (m < 10201) {
        return true;  // below 101^2 and free of small factors
    }

    const Natural m_minus_1 = m - 1;
    const unsigned long twos = mpz_scan1(m_minus_1.get_mpz_t(), 0);
    const Natural odd = m_minus_1 >> twos;

    for (unsigned long w : kWitnesses) {
        if (witness_shows_composite(Natural(w), m, odd, twos)) {
            return false;
        }
    }
    if (m < deterministic_primality_limit()) {
        return true;
    }

    // Above the deterministic range: extra bases drawn from a generator
    // seeded by m itself, so results are reproducible across runs.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(m + 0x9e3779b9UL);
    for (unsigned i = 0; i < rounds; ++i) {
        const Natural base = rng.get_z_range(m - 3) + 2;  // in [2, m-2]
        if (witness_shows_composite(base, m, odd, twos)) {
            return false;
        }
    }
    return true;
}

Natural integer_nth_root(const Natural& m, unsigned long k) {
    if (k == 0) {
        throw std::invalid_argument("integer_nth_root: k must be >= 1");
    }
    if (m < 0) {
        throw std::invalid_argument("integer_nth_root: m must be non-negative");
    }
    Natural root;
    mpz_root(root.get_mpz_t(), m.get_mpz_t(), k);
    return root;
}

std::optional<PrimePower> prime_power_decompose(const Natural& m, unsigned rounds) {
    if (m < 2) {
        throw std::invalid_argument("prime_power_decompose: m must be >= 2");
    }
    // Largest candidate exponent is floor(log2 m); the scan returns on the
    // first exact power with a prime root, i.e. the unique representation.
    const unsigned long max_k = mpz_sizeinbase(m.get_mpz_t(), 2) - 1;
    for (unsigned long k = max_k; k >= 1; --k) {
        const Natural root = integer_nth_root(m, k);
        Natural power;
        mpz_pow_ui(power.get_mpz_t(), root.get_mpz_t(), k);
        if (power == m && is_probable_prime(root, rounds)) {
            return PrimePower{root, k};
        }
    }
    return std::nullopt;
}

PrimePowerForm classify_two_adic(const Natural& m, unsigned rounds) {
    if (m < 2) {
        throw std::invalid_argument("classify_two_adic: m must be >= 2");
    }
    const unsigned long e = mpz_scan1(m.get_mpz_t(), 0);
    if (e > 3) {
        return {};
    }
    const Natural q = m >> e;
    if (q == 1) {
        return {};  // a bare power of two has no odd prime-power part
    }
    const auto pp = prime_power_decompose(q, rounds);
    if (!pp) {
        return {};
    }
    static constexpr PrimePowerKind kKindByExponent[4] = {
        PrimePowerKind::PurePn, PrimePowerKind::TwoPn, PrimePowerKind::FourPn,
        PrimePowerKind::EightPn};
    return {kKindByExponent[e], pp->p, pp->n};
}

}  // namespace markoff
