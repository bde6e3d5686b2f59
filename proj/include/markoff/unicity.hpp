#pragma once

#include <cstddef>
#include <vector>

#include "markoff/arith.hpp"
#include "markoff/enumerate.hpp"

namespace markoff {

enum class Verdict { UniqueByTheoremC, UniqueByTheorem2, Singular, NoCriterion };
enum class WitnessSource { C_ITSELF, T2_MINUS, T2_PLUS };

const char* to_string(Verdict v);
const char* to_string(WitnessSource s);

/// One satisfied uniqueness criterion: base_value (c, 3c-2 or 3c+2 according
/// to source) decomposes as form, i.e. form.reconstruct() == base_value.
struct UniquenessWitness {
    WitnessSource source;
    PrimePowerForm form;
    Natural base_value;

    bool operator==(const UniquenessWitness&) const = default;
};

/// Machine-checkable reason a Markoff number is provably unique, or
/// NoCriterion when none of the sufficient conditions applies.
struct UniquenessCertificate {
    Natural c;
    Verdict verdict = Verdict::NoCriterion;
    std::vector<UniquenessWitness> witnesses;

    bool operator==(const UniquenessCertificate&) const = default;
};

/// Pure arithmetic in c (c need not be a Markoff number). c in {1, 2} is
/// Singular. Otherwise collects every witness: c itself as p^n or 2p^n
/// (C_ITSELF), then 3c-2 and 3c+2 as p^n, 4p^n or 8p^n (T2_MINUS, T2_PLUS).
/// All passing witnesses are kept, not just the first; the verdict prefers
/// the c-itself criterion when both apply. Rejects c = 0.
UniquenessCertificate classify(const Natural& c, unsigned rounds = kDefaultMrRounds);

struct ClassifySweep {
    std::vector<UniquenessCertificate> certificates;  // ascending by c
    std::size_t singular = 0;
    std::size_t by_theorem_c = 0;
    std::size_t by_theorem_2 = 0;
    std::size_t no_criterion = 0;
    std::vector<Natural> uncovered;  // the NoCriterion Markoff numbers
};

/// One certificate per distinct Markoff number in the registry, ascending.
/// NoCriterion entries are first-class results: the criteria are sufficient
/// conditions only and the sweep reports their coverage empirically.
ClassifySweep sweep_classify(const EnumerationReport& report,
                             unsigned rounds = kDefaultMrRounds);

struct UnicityViolation {
    Natural c;
    std::vector<MarkoffTriple> triples;  // all triples sharing the maximum c
};

struct UnicityCheck {
    bool ok = true;
    std::size_t numbers_checked = 0;
    std::vector<UnicityViolation> violations;
};

/// Empirical multiplicity test: every Markoff number in the report must be
/// the maximum of exactly one triple. A violation would contradict the
/// uniqueness conjecture and is reported with all triples involved.
UnicityCheck check_unicity_empirically(const EnumerationReport& report);

}  // namespace markoff
