#include <chrono>
#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "markoff/congruence.hpp"
#include "markoff/enumerate.hpp"
#include "markoff/oracles.hpp"
#include "markoff/records.hpp"
#include "markoff/triple.hpp"
#include "markoff/unicity.hpp"

namespace {

using markoff::EnumerationReport;
using markoff::MarkoffTriple;
using markoff::Natural;
using markoff::records::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

enum class Format { Jsonl, Csv };

// JSONL: one record per line. CSV: one table per record kind, each opened
// with a header row whenever the kind changes in the stream.
class Emitter {
public:
    Emitter(Format format, std::ostream& out) : format_(format), out_(out) {}

    void triple(const MarkoffTriple& t) {
        write("triple", markoff::records::triple_record(t),
              markoff::records::csv_header("triple"),
              {markoff::records::csv_triple_row(t)});
    }

    void finding(const markoff::CongruenceFinding& f) {
        write("finding", markoff::records::finding_record(f),
              markoff::records::csv_header("finding"),
              markoff::records::csv_finding_rows(f));
    }

    void certificate(const markoff::UniquenessCertificate& cert) {
        write("certificate", markoff::records::certificate_record(cert),
              markoff::records::csv_header("certificate"),
              {markoff::records::csv_certificate_row(cert)});
    }

    void violation(const Json& record, const std::string& csv_detail) {
        write("violation", record, "suite,detail",
              {record.at("suite").get<std::string>() + "," + csv_detail});
    }

    void summary(const Json& record, const std::string& scope,
                 const std::string& csv_detail) {
        write("summary", record, "scope,detail", {scope + "," + csv_detail});
    }

private:
    void write(const std::string& kind, const Json& record,
               const std::string& header, const std::vector<std::string>& rows) {
        if (format_ == Format::Jsonl) {
            out_ << record.dump() << "\n";
            return;
        }
        if (kind != table_) {
            out_ << header << "\n";
            table_ = kind;
        }
        for (const std::string& row : rows) {
            out_ << row << "\n";
        }
    }

    Format format_;
    std::ostream& out_;
    std::string table_;
};

std::string dec(const Natural& v) { return v.get_str(); }

class SuiteTimer {
public:
    SuiteTimer() : start_(std::chrono::steady_clock::now()) {}

    std::string elapsed_ms() const {
        const auto dt = std::chrono::steady_clock::now() - start_;
        return std::to_string(
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct VerifyBounds {
    Natural max_c;
    Natural max_m;
    Natural max_xy;
};

std::size_t verify_congruence(const Natural& max_c, Emitter& emitter) {
    SuiteTimer timer;
    const EnumerationReport report = markoff::enumerate_up_to(max_c);
    const markoff::CongruenceSweep sweep = markoff::sweep_congruences(report);
    for (const markoff::CongruenceFinding& f : sweep.findings) {
        emitter.finding(f);
    }
    for (const markoff::CongruenceFinding& f : sweep.findings) {
        for (const markoff::CongruenceCheck& check : f.checks) {
            if (check.pass) {
                continue;
            }
            Json v{{"kind", "violation"},     {"suite", "congruence"},
                   {"a", dec(f.triple.a())},  {"b", dec(f.triple.b())},
                   {"c", dec(f.triple.c())},  {"clause", check.clause},
                   {"modulus", dec(check.modulus)}, {"expected", dec(check.expected)},
                   {"actual", dec(check.actual)}};
            emitter.violation(v, "triple=" + f.triple.str() + ";clause=" + check.clause +
                                     ";expected=" + dec(check.expected) +
                                     ";actual=" + dec(check.actual));
        }
    }
    Json summary{{"kind", "summary"},
                 {"suite", "congruence"},
                 {"triples", std::to_string(sweep.findings.size())},
                 {"checks", std::to_string(sweep.checks_evaluated)},
                 {"violations", std::to_string(sweep.failures)},
                 {"elapsed_ms", timer.elapsed_ms()}};
    emitter.summary(summary, "congruence",
                    "triples=" + std::to_string(sweep.findings.size()) +
                        ";checks=" + std::to_string(sweep.checks_evaluated) +
                        ";violations=" + std::to_string(sweep.failures) +
                        ";elapsed_ms=" + timer.elapsed_ms());
    return sweep.failures;
}

std::size_t verify_unicity(const Natural& max_c, Emitter& emitter) {
    SuiteTimer timer;
    const EnumerationReport report = markoff::enumerate_up_to(max_c);
    const markoff::UnicityCheck check = markoff::check_unicity_empirically(report);
    for (const markoff::UnicityViolation& v : check.violations) {
        Json triples = Json::array();
        std::string detail = "c=" + dec(v.c) + ";triples=";
        for (const MarkoffTriple& t : v.triples) {
            triples.push_back(markoff::records::triple_record(t));
            detail += t.str();
        }
        emitter.violation(Json{{"kind", "violation"},
                               {"suite", "unicity"},
                               {"c", dec(v.c)},
                               {"triples", std::move(triples)}},
                          detail);
    }
    Json summary{{"kind", "summary"},
                 {"suite", "unicity"},
                 {"markoff_numbers", std::to_string(check.numbers_checked)},
                 {"violations", std::to_string(check.violations.size())},
                 {"elapsed_ms", timer.elapsed_ms()}};
    emitter.summary(summary, "unicity",
                    "markoff_numbers=" + std::to_string(check.numbers_checked) +
                        ";violations=" + std::to_string(check.violations.size()) +
                        ";elapsed_ms=" + timer.elapsed_ms());
    return check.violations.size();
}

std::size_t verify_lemma1(const Natural& max_xy, Emitter& emitter) {
    SuiteTimer timer;
    const markoff::Lemma1Summary sweep = markoff::sweep_lemma1(max_xy);
    for (const markoff::Lemma1Violation& v : sweep.violations) {
        emitter.violation(Json{{"kind", "violation"},
                               {"suite", "lemma1"},
                               {"x", dec(v.x)},
                               {"y", dec(v.y)},
                               {"divisor", dec(v.divisor)}},
                          "x=" + dec(v.x) + ";y=" + dec(v.y) +
                              ";divisor=" + dec(v.divisor));
    }
    Json summary{{"kind", "summary"},
                 {"suite", "lemma1"},
                 {"pairs", std::to_string(sweep.pairs_checked)},
                 {"odd_divisors", std::to_string(sweep.divisors_checked)},
                 {"violations", std::to_string(sweep.violations.size())},
                 {"elapsed_ms", timer.elapsed_ms()}};
    emitter.summary(summary, "lemma1",
                    "pairs=" + std::to_string(sweep.pairs_checked) +
                        ";odd_divisors=" + std::to_string(sweep.divisors_checked) +
                        ";violations=" + std::to_string(sweep.violations.size()) +
                        ";elapsed_ms=" + timer.elapsed_ms());
    return sweep.violations.size();
}

std::size_t verify_lemma2(const Natural& max_m, Emitter& emitter) {
    SuiteTimer timer;
    const markoff::Lemma2Summary sweep = markoff::sweep_lemma2(max_m);
    for (const markoff::Lemma2Violation& v : sweep.violations) {
        Json solutions = Json::array();
        std::string listed;
        for (const Natural& x : v.solutions) {
            solutions.push_back(dec(x));
            listed += (listed.empty() ? "" : "|") + dec(x);
        }
        emitter.violation(Json{{"kind", "violation"},
                               {"suite", "lemma2"},
                               {"m", dec(v.m)},
                               {"r", dec(v.r)},
                               {"solutions", std::move(solutions)}},
                          "m=" + dec(v.m) + ";r=" + dec(v.r) + ";solutions=" + listed);
    }
    Json summary{{"kind", "summary"},
                 {"suite", "lemma2"},
                 {"moduli", std::to_string(sweep.moduli_checked)},
                 {"pairs", std::to_string(sweep.pairs_checked)},
                 {"violations", std::to_string(sweep.violations.size())},
                 {"elapsed_ms", timer.elapsed_ms()}};
    emitter.summary(summary, "lemma2",
                    "moduli=" + std::to_string(sweep.moduli_checked) +
                        ";pairs=" + std::to_string(sweep.pairs_checked) +
                        ";violations=" + std::to_string(sweep.violations.size()) +
                        ";elapsed_ms=" + timer.elapsed_ms());
    return sweep.violations.size();
}

std::size_t verify_rewrites(const Natural& max_c, Emitter& emitter) {
    SuiteTimer timer;
    const EnumerationReport report = markoff::enumerate_up_to(max_c);
    std::size_t violations = 0;
    for (const MarkoffTriple& t : report.triples) {
        if (markoff::check_rewrites(t)) {
            continue;
        }
        ++violations;
        emitter.violation(Json{{"kind", "violation"},
                               {"suite", "rewrites"},
                               {"a", dec(t.a())},
                               {"b", dec(t.b())},
                               {"c", dec(t.c())}},
                          "triple=" + t.str());
    }
    Json summary{{"kind", "summary"},
                 {"suite", "rewrites"},
                 {"triples", std::to_string(report.triples.size())},
                 {"violations", std::to_string(violations)},
                 {"elapsed_ms", timer.elapsed_ms()}};
    emitter.summary(summary, "rewrites",
                    "triples=" + std::to_string(report.triples.size()) +
                        ";violations=" + std::to_string(violations) +
                        ";elapsed_ms=" + timer.elapsed_ms());
    return violations;
}

int cmd_enumerate(const Natural& bound, Emitter& emitter) {
    const EnumerationReport report = markoff::enumerate_up_to(bound);
    for (const MarkoffTriple& t : report.triples) {
        emitter.triple(t);
    }
    return kExitOk;
}

int cmd_reduce(const Natural& a, const Natural& b, const Natural& c, Emitter& emitter) {
    const MarkoffTriple t = markoff::make_triple(a, b, c);
    const markoff::ReductionPath path = markoff::reduce_to_root(t);
    for (const MarkoffTriple& step : path.steps) {
        emitter.triple(step);
    }
    return kExitOk;
}

int cmd_classify_single(const Natural& c, unsigned rounds, Emitter& emitter) {
    emitter.certificate(markoff::classify(c, rounds));
    return kExitOk;
}

int cmd_classify_sweep(const Natural& bound, unsigned rounds, Emitter& emitter) {
    const EnumerationReport report = markoff::enumerate_up_to(bound);
    const markoff::ClassifySweep sweep = markoff::sweep_classify(report, rounds);
    for (const markoff::UniquenessCertificate& cert : sweep.certificates) {
        emitter.certificate(cert);
    }
    Json uncovered = Json::array();
    std::string uncovered_list;
    for (const Natural& c : sweep.uncovered) {
        uncovered.push_back(dec(c));
        uncovered_list += (uncovered_list.empty() ? "" : "|") + dec(c);
    }
    Json summary{{"kind", "summary"},
                 {"suite", "classify"},
                 {"certificates", std::to_string(sweep.certificates.size())},
                 {"singular", std::to_string(sweep.singular)},
                 {"unique_by_theorem_c", std::to_string(sweep.by_theorem_c)},
                 {"unique_by_theorem_2", std::to_string(sweep.by_theorem_2)},
                 {"no_criterion", std::to_string(sweep.no_criterion)},
                 {"uncovered", std::move(uncovered)}};
    emitter.summary(summary, "classify",
                    "certificates=" + std::to_string(sweep.certificates.size()) +
                        ";singular=" + std::to_string(sweep.singular) +
                        ";unique_by_theorem_c=" + std::to_string(sweep.by_theorem_c) +
                        ";unique_by_theorem_2=" + std::to_string(sweep.by_theorem_2) +
                        ";no_criterion=" + std::to_string(sweep.no_criterion) +
                        ";uncovered=" + uncovered_list);
    return kExitOk;
}

int cmd_verify(const std::string& suite, const VerifyBounds& bounds, Emitter& emitter) {
    SuiteTimer timer;
    std::size_t violations = 0;
    const bool all = suite == "all";
    if (all || suite == "congruence") {
        violations += verify_congruence(bounds.max_c, emitter);
    }
    if (all || suite == "unicity") {
        violations += verify_unicity(bounds.max_c, emitter);
    }
    if (all || suite == "lemma1") {
        violations += verify_lemma1(bounds.max_xy, emitter);
    }
    if (all || suite == "lemma2") {
        violations += verify_lemma2(bounds.max_m, emitter);
    }
    if (all || suite == "rewrites") {
        violations += verify_rewrites(bounds.max_c, emitter);
    }
    if (all) {
        Json summary{{"kind", "summary"},
                     {"suite", "all"},
                     {"violations", std::to_string(violations)},
                     {"elapsed_ms", timer.elapsed_ms()}};
        emitter.summary(summary, "all",
                        "violations=" + std::to_string(violations) +
                            ";elapsed_ms=" + timer.elapsed_ms());
    }
    return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markoff equation toolkit: enumerate triples, reduce to the "
                 "root, classify uniqueness, verify congruence and lemma sweeps"};
    app.require_subcommand(1);

    std::string format_name = "jsonl";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
    unsigned mr_rounds = markoff::kDefaultMrRounds;
    app.add_option("--mr-rounds", mr_rounds,
                   "Extra Miller-Rabin rounds above the deterministic range")
        ->capture_default_str();

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "All Markoff triples with largest element <= bound");
    enumerate->fallthrough();
    std::string enum_bound;
    enumerate->add_option("--max-c", enum_bound, "Enumeration bound")->required();

    CLI::App* reduce = app.add_subcommand(
        "reduce", "Reduction path from a Markoff triple down to (1,1,1)");
    reduce->fallthrough();
    std::string reduce_a, reduce_b, reduce_c;
    reduce->add_option("a", reduce_a)->required();
    reduce->add_option("b", reduce_b)->required();
    reduce->add_option("c", reduce_c)->required();

    CLI::App* classify = app.add_subcommand(
        "classify", "Uniqueness certificate for one number, or for every "
                    "Markoff number up to a bound");
    classify->fallthrough();
    std::string classify_c;
    classify->add_option("c", classify_c, "Single number to classify");
    std::string classify_bound;
    classify->add_option("--max-c", classify_bound, "Sweep bound");

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->fallthrough();
    std::string suite = "all";
    verify->add_option("--suite", suite, "Suite to run")
        ->check(CLI::IsMember({"congruence", "unicity", "lemma1", "lemma2",
                               "rewrites", "all"}))
        ->capture_default_str();
    std::string verify_max_c = "1000000";
    verify->add_option("--max-c", verify_max_c,
                       "Enumeration bound for congruence/unicity/rewrites")
        ->capture_default_str();
    std::string verify_max_m = "2000";
    verify->add_option("--max-m", verify_max_m, "Modulus bound for lemma2")
        ->capture_default_str();
    std::string verify_max_xy = "300";
    verify->add_option("--max-xy", verify_max_xy, "Pair bound for lemma1")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    Emitter emitter(format_name == "csv" ? Format::Csv : Format::Jsonl, std::cout);
    try {
        if (enumerate->parsed()) {
            return cmd_enumerate(markoff::records::parse_natural(enum_bound), emitter);
        }
        if (reduce->parsed()) {
            return cmd_reduce(markoff::records::parse_natural(reduce_a),
                              markoff::records::parse_natural(reduce_b),
                              markoff::records::parse_natural(reduce_c), emitter);
        }
        if (classify->parsed()) {
            const bool single = !classify_c.empty();
            const bool sweep = !classify_bound.empty();
            if (single == sweep) {
                std::cerr << "classify: give either a single number or --max-c\n";
                return kExitUsage;
            }
            return single ? cmd_classify_single(
                                markoff::records::parse_natural(classify_c),
                                mr_rounds, emitter)
                          : cmd_classify_sweep(
                                markoff::records::parse_natural(classify_bound),
                                mr_rounds, emitter);
        }
        if (verify->parsed()) {
            const VerifyBounds bounds{
                markoff::records::parse_natural(verify_max_c),
                markoff::records::parse_natural(verify_max_m),
                markoff::records::parse_natural(verify_max_xy)};
            return cmd_verify(suite, bounds, emitter);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
