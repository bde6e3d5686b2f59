#include "markoff/triple.hpp"

#include <algorithm>
#include <utility>

namespace markoff {

namespace {

std::string equation_message(const Natural& lhs, const Natural& rhs) {
    return "not a Markoff triple: a^2+b^2+c^2 = " + lhs.get_str() +
           " but 3abc = " + rhs.get_str();
}

}  // namespace

InvalidTripleError::InvalidTripleError(Natural lhs, Natural rhs)
    : std::invalid_argument(equation_message(lhs, rhs)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

MarkoffTriple::MarkoffTriple(Natural a, Natural b, Natural c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ < 1 || b_ < 1 || c_ < 1) {
        throw std::invalid_argument("Markoff triple elements must be >= 1");
    }
    if (a_ > b_) std::swap(a_, b_);
    if (b_ > c_) std::swap(b_, c_);
    if (a_ > b_) std::swap(a_, b_);
    const Natural lhs = a_ * a_ + b_ * b_ + c_ * c_;
    const Natural rhs = 3 * a_ * b_ * c_;
    if (lhs != rhs) {
        throw InvalidTripleError(lhs, rhs);
    }
}

bool MarkoffTriple::is_singular() const {
    return a_ == 1 && b_ == 1;  // only (1,1,1) and (1,1,2) have a = b
}

std::string MarkoffTriple::str() const {
    return "(" + a_.get_str() + ", " + b_.get_str() + ", " + c_.get_str() + ")";
}

MarkoffTriple make_triple(const Natural& a, const Natural& b, const Natural& c) {
    return MarkoffTriple(a, b, c);
}

std::vector<MarkoffTriple> neighbors(const MarkoffTriple& t) {
    const Natural& a = t.a();
    const Natural& b = t.b();
    const Natural& c = t.c();
    std::vector<MarkoffTriple> out;
    out.reserve(3);
    out.emplace_back(3 * b * c - a, b, c);
    out.emplace_back(a, 3 * c * a - b, c);
    out.emplace_back(a, b, 3 * a * b - c);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MarkoffTriple reduce_step(const MarkoffTriple& t) {
    return MarkoffTriple(t.a(), t.b(), 3 * t.a() * t.b() - t.c());
}

ReductionPath reduce_to_root(const MarkoffTriple& t) {
    static const MarkoffTriple root(1, 1, 1);
    ReductionPath path;
    path.steps.push_back(t);
    while (path.steps.back() != root) {
        path.steps.push_back(reduce_step(path.steps.back()));
    }
    return path;
}

bool check_lemma3(const MarkoffTriple& t) {
    if (t.is_singular()) {
        throw std::invalid_argument("check_lemma3: undefined for singular triples");
    }
    static const MarkoffTriple excluded(1, 2, 5);
    if (t == excluded) {
        throw std::invalid_argument("check_lemma3: undefined for (1, 2, 5)");
    }
    const Natural ab = t.a() * t.b();
    const Natural c_conj = 3 * ab - t.c();
    return t.c() > 2 * ab && t.b() > 2 * c_conj * t.a();
}

}  // namespace markoff
