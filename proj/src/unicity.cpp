#include "markoff/unicity.hpp"

#include <stdexcept>

namespace markoff {

namespace {

bool theorem_c_form(PrimePowerKind kind) {
    return kind == PrimePowerKind::PurePn || kind == PrimePowerKind::TwoPn;
}

// Theorem-2 shapes for 3c +/- 2: p^n, 4p^n or 8p^n (2p^n does not qualify).
bool theorem_2_form(PrimePowerKind kind) {
    return kind == PrimePowerKind::PurePn || kind == PrimePowerKind::FourPn ||
           kind == PrimePowerKind::EightPn;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::UniqueByTheoremC: return "UniqueByTheoremC";
        case Verdict::UniqueByTheorem2: return "UniqueByTheorem2";
        case Verdict::Singular: return "Singular";
        case Verdict::NoCriterion: return "NoCriterion";
    }
    return "NoCriterion";
}

const char* to_string(WitnessSource s) {
    switch (s) {
        case WitnessSource::C_ITSELF: return "C_ITSELF";
        case WitnessSource::T2_MINUS: return "T2_MINUS";
        case WitnessSource::T2_PLUS: return "T2_PLUS";
    }
    return "C_ITSELF";
}

UniquenessCertificate classify(const Natural& c, unsigned rounds) {
    if (c < 1) {
        throw std::invalid_argument("classify: c must be >= 1");
    }
    UniquenessCertificate cert;
    cert.c = c;
    if (c <= 2) {
        cert.verdict = Verdict::Singular;  // (1,1,1) and (1,1,2), unique by inspection
        return cert;
    }

    const PrimePowerForm own = classify_two_adic(c, rounds);
    if (theorem_c_form(own.kind)) {
        cert.witnesses.push_back({WitnessSource::C_ITSELF, own, c});
    }
    const Natural minus = 3 * c - 2;
    const PrimePowerForm minus_form = classify_two_adic(minus, rounds);
    if (theorem_2_form(minus_form.kind)) {
        cert.witnesses.push_back({WitnessSource::T2_MINUS, minus_form, minus});
    }
    const Natural plus = 3 * c + 2;
    const PrimePowerForm plus_form = classify_two_adic(plus, rounds);
    if (theorem_2_form(plus_form.kind)) {
        cert.witnesses.push_back({WitnessSource::T2_PLUS, plus_form, plus});
    }

    if (!cert.witnesses.empty()) {
        cert.verdict = cert.witnesses.front().source == WitnessSource::C_ITSELF
                           ? Verdict::UniqueByTheoremC
                           : Verdict::UniqueByTheorem2;
    }
    return cert;
}

ClassifySweep sweep_classify(const EnumerationReport& report, unsigned rounds) {
    ClassifySweep sweep;
    sweep.certificates.reserve(report.registry.size());
    for (const auto& [c, triples] : report.registry) {
        sweep.certificates.push_back(classify(c, rounds));
        switch (sweep.certificates.back().verdict) {
            case Verdict::Singular: ++sweep.singular; break;
            case Verdict::UniqueByTheoremC: ++sweep.by_theorem_c; break;
            case Verdict::UniqueByTheorem2: ++sweep.by_theorem_2; break;
            case Verdict::NoCriterion:
                ++sweep.no_criterion;
                sweep.uncovered.push_back(c);
                break;
        }
    }
    return sweep;
}

UnicityCheck check_unicity_empirically(const EnumerationReport& report) {
    UnicityCheck result;
    for (const auto& [c, triples] : report.registry) {
        ++result.numbers_checked;
        if (triples.size() >= 2) {
            result.ok = false;
            result.violations.push_back({c, triples});
        }
    }
    return result;
}

}  // namespace markoff
