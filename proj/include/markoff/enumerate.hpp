#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "markoff/triple.hpp"

namespace markoff {

/// Every Markoff triple with largest element <= bound, ascending by (c, b, a),
/// plus a per-Markoff-number registry keyed on the largest element. Complete
/// by tree connectivity: every triple descends to (1,1,1), so walking the
/// tree upward from the root reaches all of them.
struct EnumerationReport {
    Natural bound;
    std::vector<MarkoffTriple> triples;
    std::map<Natural, std::vector<MarkoffTriple>> registry;
};

/// Walks the Markoff tree from (1,1,1) with a min-frontier keyed by largest
/// element: pop the smallest, emit it, push the neighbors whose maximum
/// exceeds the popped one (pruning children above the bound). A seen-set of
/// canonical triples guards against duplicates. Rejects bound < 1.
EnumerationReport enumerate_up_to(const Natural& bound);

/// Number of distinct triples in the report whose largest element is c;
/// 0 when c is not a Markoff number. Rejects c > report.bound, where the
/// answer would be unreliable.
std::size_t multiplicity(const EnumerationReport& report, const Natural& c);

}  // namespace markoff
