#include "markoff/oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace markoff {

namespace {

constexpr std::uint64_t kWordScanLimit = std::uint64_t{1} << 32;
constexpr std::uint64_t kWordPairLimit = std::uint64_t{1} << 31;

bool valid_lemma2_modulus(const Natural& m) {
    if (m < 3) {
        return false;
    }
    const PrimePowerKind kind = classify_two_adic(m).kind;
    return kind == PrimePowerKind::PurePn || kind == PrimePowerKind::TwoPn;
}

template <typename Int>
void check_odd_divisor(const Int& x, const Int& y, const Int& divisor,
                       Lemma1Summary& summary) {
    if (divisor % 2 == 0) {
        return;
    }
    ++summary.divisors_checked;
    if (divisor % 4 != 1) {
        summary.violations.push_back({Natural(x), Natural(y), Natural(divisor)});
    }
}

// Trial division up to sqrt(s) with divisor pairing; exact at these scales.
template <typename Int>
void collect_odd_divisors(const Int& x, const Int& y, Lemma1Summary& summary) {
    const Int s = x * x + y * y;
    for (Int d = 1; d * d <= s; ++d) {
        if (s % d != 0) {
            continue;
        }
        check_odd_divisor(x, y, d, summary);
        const Int paired = s / d;
        if (paired != d) {
            check_odd_divisor(x, y, paired, summary);
        }
    }
}

}  // namespace

QuadraticRootCount count_quadratic_roots(const Natural& m, const Natural& r) {
    if (!valid_lemma2_modulus(m)) {
        throw std::invalid_argument(
            "count_quadratic_roots: m must be p^n or 2p^n for an odd prime p");
    }
    if (gcd(r, m) != 1) {
        throw std::invalid_argument("count_quadratic_roots: r must be coprime to m");
    }

    QuadraticRootCount result{m, r, {}};
    const Natural r_reduced = r % m;
    if (m < kWordScanLimit) {
        const auto roots = detail::scan_quadratic_roots<std::uint64_t>(
            m.get_ui(), r_reduced.get_ui());
        result.solutions.assign(roots.begin(), roots.end());
    } else {
        result.solutions = detail::scan_quadratic_roots<Natural>(m, r_reduced);
    }
    return result;
}

Lemma2Summary sweep_lemma2(const Natural& max_m) {
    Lemma2Summary summary;
    for (Natural m = 3; m <= max_m; ++m) {
        if (!valid_lemma2_modulus(m)) {
            continue;
        }
        ++summary.moduli_checked;
        for (Natural r = 1; r < m; ++r) {
            if (gcd(r, m) != 1) {
                continue;
            }
            QuadraticRootCount count = count_quadratic_roots(m, r);
            ++summary.pairs_checked;
            if (count.solutions.size() > 1) {
                summary.violations.push_back({m, r, std::move(count.solutions)});
            }
        }
    }
    return summary;
}

Lemma1Summary sweep_lemma1(const Natural& max_xy) {
    Lemma1Summary summary;
    if (max_xy < kWordPairLimit) {
        const std::uint64_t bound = max_xy.get_ui();
        for (std::uint64_t y = 1; y <= bound; ++y) {
            for (std::uint64_t x = 1; x <= y; ++x) {
                if (std::gcd(x, y) != 1) {
                    continue;
                }
                ++summary.pairs_checked;
                collect_odd_divisors<std::uint64_t>(x, y, summary);
            }
        }
    } else {
        for (Natural y = 1; y <= max_xy; ++y) {
            for (Natural x = 1; x <= y; ++x) {
                if (gcd(x, y) != 1) {
                    continue;
                }
                ++summary.pairs_checked;
                collect_odd_divisors<Natural>(x, y, summary);
            }
        }
    }
    return summary;
}

bool check_rewrites(const MarkoffTriple& t) {
    const Natural& a = t.a();
    const Natural& b = t.b();
    const Natural& c = t.c();
    const Natural ab = a * b;
    const Natural cc = c * c;
    const Natural diff = b - a;
    const bool minus_side = diff * diff + cc == ab * (3 * c - 2);
    const Natural sum = a + b;
    const bool plus_side = sum * sum + cc == ab * (3 * c + 2);
    return minus_side && plus_side;
}

}  // namespace markoff
