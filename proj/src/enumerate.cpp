#include "markoff/enumerate.hpp"

#include <set>
#include <stdexcept>

namespace markoff {

EnumerationReport enumerate_up_to(const Natural& bound) {
    if (bound < 1) {
        throw std::invalid_argument("enumerate_up_to: bound must be >= 1");
    }
    EnumerationReport report;
    report.bound = bound;

    const MarkoffTriple root(1, 1, 1);
    std::set<MarkoffTriple> frontier{root};
    std::set<MarkoffTriple> seen{root};

    while (!frontier.empty()) {
        const MarkoffTriple current = *frontier.begin();
        frontier.erase(frontier.begin());
        report.registry[current.c()].push_back(current);
        report.triples.push_back(current);

        for (const MarkoffTriple& child : neighbors(current)) {
            if (child.c() > current.c() && child.c() <= bound &&
                seen.insert(child).second) {
                frontier.insert(child);
            }
        }
    }
    return report;
}

std::size_t multiplicity(const EnumerationReport& report, const Natural& c) {
    if (c > report.bound) {
        throw std::invalid_argument(
            "multiplicity: c exceeds the enumeration bound " +
            report.bound.get_str());
    }
    const auto it = report.registry.find(c);
    return it == report.registry.end() ? 0 : it->second.size();
}

}  // namespace markoff
