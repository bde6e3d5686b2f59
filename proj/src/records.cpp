#include "markoff/records.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace markoff::records {

namespace {

std::string dec(const Natural& v) { return v.get_str(); }

Natural nat(const Json& j) { return parse_natural(j.get<std::string>()); }

Verdict verdict_from_string(const std::string& s) {
    if (s == "UniqueByTheoremC") return Verdict::UniqueByTheoremC;
    if (s == "UniqueByTheorem2") return Verdict::UniqueByTheorem2;
    if (s == "Singular") return Verdict::Singular;
    if (s == "NoCriterion") return Verdict::NoCriterion;
    throw std::invalid_argument("unknown verdict: " + s);
}

WitnessSource source_from_string(const std::string& s) {
    if (s == "C_ITSELF") return WitnessSource::C_ITSELF;
    if (s == "T2_MINUS") return WitnessSource::T2_MINUS;
    if (s == "T2_PLUS") return WitnessSource::T2_PLUS;
    throw std::invalid_argument("unknown witness source: " + s);
}

PrimePowerKind kind_from_string(const std::string& s) {
    if (s == "PurePn") return PrimePowerKind::PurePn;
    if (s == "TwoPn") return PrimePowerKind::TwoPn;
    if (s == "FourPn") return PrimePowerKind::FourPn;
    if (s == "EightPn") return PrimePowerKind::EightPn;
    if (s == "None") return PrimePowerKind::None;
    throw std::invalid_argument("unknown prime-power kind: " + s);
}

void expect_kind(const Json& j, const std::string& kind) {
    if (j.at("kind").get<std::string>() != kind) {
        throw std::invalid_argument("expected a '" + kind + "' record");
    }
}

}  // namespace

Natural parse_natural(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("expected a decimal integer, got an empty string");
    }
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("not a non-negative decimal integer: " + text);
        }
    }
    return Natural(text, 10);
}

Json triple_record(const MarkoffTriple& t) {
    return Json{{"kind", "triple"}, {"a", dec(t.a())}, {"b", dec(t.b())}, {"c", dec(t.c())}};
}

Json finding_record(const CongruenceFinding& f) {
    Json checks = Json::array();
    for (const CongruenceCheck& check : f.checks) {
        Json row{{"clause", check.clause}};
        if (check.element) {
            row["element"] = dec(*check.element);
        }
        row["modulus"] = dec(check.modulus);
        row["expected"] = dec(check.expected);
        row["actual"] = dec(check.actual);
        row["pass"] = check.pass;
        checks.push_back(std::move(row));
    }
    return Json{{"kind", "finding"},
                {"a", dec(f.triple.a())},
                {"b", dec(f.triple.b())},
                {"c", dec(f.triple.c())},
                {"pass", f.all_pass()},
                {"checks", std::move(checks)}};
}

Json certificate_record(const UniquenessCertificate& cert) {
    Json witnesses = Json::array();
    for (const UniquenessWitness& w : cert.witnesses) {
        witnesses.push_back(Json{{"source", to_string(w.source)},
                                 {"base", dec(w.base_value)},
                                 {"form", to_string(w.form.kind)},
                                 {"p", dec(w.form.p)},
                                 {"n", std::to_string(w.form.n)}});
    }
    return Json{{"kind", "certificate"},
                {"c", dec(cert.c)},
                {"verdict", to_string(cert.verdict)},
                {"witnesses", std::move(witnesses)}};
}

MarkoffTriple parse_triple_record(const Json& j) {
    expect_kind(j, "triple");
    return MarkoffTriple(nat(j.at("a")), nat(j.at("b")), nat(j.at("c")));
}

CongruenceFinding parse_finding_record(const Json& j) {
    expect_kind(j, "finding");
    CongruenceFinding f{MarkoffTriple(nat(j.at("a")), nat(j.at("b")), nat(j.at("c"))), {}};
    for (const Json& row : j.at("checks")) {
        CongruenceCheck check;
        check.clause = row.at("clause").get<std::string>();
        if (row.contains("element")) {
            check.element = nat(row.at("element"));
        }
        check.modulus = nat(row.at("modulus"));
        check.expected = nat(row.at("expected"));
        check.actual = nat(row.at("actual"));
        check.pass = row.at("pass").get<bool>();
        f.checks.push_back(std::move(check));
    }
    return f;
}

UniquenessCertificate parse_certificate_record(const Json& j) {
    expect_kind(j, "certificate");
    UniquenessCertificate cert;
    cert.c = nat(j.at("c"));
    cert.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const Json& row : j.at("witnesses")) {
        UniquenessWitness w;
        w.source = source_from_string(row.at("source").get<std::string>());
        w.form.kind = kind_from_string(row.at("form").get<std::string>());
        w.form.p = nat(row.at("p"));
        w.form.n = std::stoul(row.at("n").get<std::string>());
        w.base_value = nat(row.at("base"));
        cert.witnesses.push_back(std::move(w));
    }
    return cert;
}

std::string witness_compact(const UniquenessWitness& w) {
    std::ostringstream out;
    out << to_string(w.source) << ":2^" << w.form.two_exponent() << "*"
        << w.form.p.get_str() << "^" << w.form.n;
    return out.str();
}

std::string csv_header(const std::string& kind) {
    if (kind == "triple") return "a,b,c";
    if (kind == "finding") return "a,b,c,clause,element,modulus,expected,actual,pass";
    if (kind == "certificate") return "c,verdict,witnesses";
    throw std::invalid_argument("no CSV table for kind: " + kind);
}

std::string csv_triple_row(const MarkoffTriple& t) {
    return dec(t.a()) + "," + dec(t.b()) + "," + dec(t.c());
}

std::vector<std::string> csv_finding_rows(const CongruenceFinding& f) {
    std::vector<std::string> rows;
    rows.reserve(f.checks.size());
    const std::string prefix = csv_triple_row(f.triple) + ",";
    for (const CongruenceCheck& check : f.checks) {
        rows.push_back(prefix + check.clause + "," +
                       (check.element ? dec(*check.element) : "") + "," +
                       dec(check.modulus) + "," + dec(check.expected) + "," +
                       dec(check.actual) + "," + (check.pass ? "true" : "false"));
    }
    return rows;
}

std::string csv_certificate_row(const UniquenessCertificate& cert) {
    std::string witnesses;
    for (const UniquenessWitness& w : cert.witnesses) {
        if (!witnesses.empty()) {
            witnesses += ";";
        }
        witnesses += witness_compact(w);
    }
    return dec(cert.c) + "," + to_string(cert.verdict) + "," + witnesses;
}

std::vector<MarkoffTriple> parse_csv_triples(std::istream& in) {
    std::vector<MarkoffTriple> triples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == csv_header("triple")) {
            continue;
        }
        std::istringstream row(line);
        std::string a, b, c;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ',') ||
            !std::getline(row, c)) {
            throw std::invalid_argument("malformed triple row: " + line);
        }
        triples.emplace_back(parse_natural(a), parse_natural(b), parse_natural(c));
    }
    return triples;
}

}  // namespace markoff::records
