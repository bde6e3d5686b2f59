#include "markoff/congruence.hpp"

#include <algorithm>

namespace markoff {

namespace {

CongruenceCheck residue_check(const char* clause, const Natural& element,
                              const Natural& subject, unsigned long modulus,
                              unsigned long expected) {
    CongruenceCheck check;
    check.clause = clause;
    check.element = element;
    check.modulus = modulus;
    check.expected = expected;
    check.actual = subject % modulus;
    check.pass = check.actual == check.expected;
    return check;
}

void append_element_checks(std::vector<CongruenceCheck>& checks, const Natural& e) {
    if (mpz_odd_p(e.get_mpz_t())) {
        checks.push_back(residue_check(kClauseOdd4, e, e, 4, 1));
    } else {
        checks.push_back(residue_check(kClauseEven8, e, e, 8, 2));
        checks.push_back(residue_check(kClauseEven32, e, e, 32, 2));
        checks.push_back(residue_check(kClauseCor4, e, 3 * e - 2, 32, 4));
        checks.push_back(residue_check(kClauseCor8, e, 3 * e + 2, 32, 8));
    }
}

}  // namespace

bool CongruenceFinding::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CongruenceCheck& c) { return c.pass; });
}

CongruenceFinding check_triple_congruences(const MarkoffTriple& t) {
    CongruenceFinding finding{t, {}};
    append_element_checks(finding.checks, t.a());
    append_element_checks(finding.checks, t.b());
    append_element_checks(finding.checks, t.c());

    CongruenceCheck coprime;
    coprime.clause = kClauseCoprime;
    coprime.modulus = 0;  // exact equality, not a residue
    coprime.expected = 1;
    coprime.actual = std::max({gcd(t.a(), t.b()), gcd(t.b(), t.c()), gcd(t.c(), t.a())});
    coprime.pass = coprime.actual == 1;
    finding.checks.push_back(coprime);
    return finding;
}

CongruenceSweep sweep_congruences(const EnumerationReport& report) {
    CongruenceSweep sweep;
    sweep.findings.reserve(report.triples.size());
    for (const MarkoffTriple& t : report.triples) {
        sweep.findings.push_back(check_triple_congruences(t));
        for (const CongruenceCheck& check : sweep.findings.back().checks) {
            ++sweep.checks_evaluated;
            if (!check.pass) {
                ++sweep.failures;
            }
        }
    }
    return sweep;
}

}  // namespace markoff
