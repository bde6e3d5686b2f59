#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "markoff/congruence.hpp"
#include "markoff/triple.hpp"
#include "markoff/unicity.hpp"

namespace markoff::records {

// Integers are serialized as decimal strings everywhere: Markoff numbers
// leave the 64-bit range quickly and JSON number types would corrupt them.
using Json = nlohmann::ordered_json;

Json triple_record(const MarkoffTriple& t);
Json finding_record(const CongruenceFinding& f);
Json certificate_record(const UniquenessCertificate& cert);

MarkoffTriple parse_triple_record(const Json& j);
CongruenceFinding parse_finding_record(const Json& j);
UniquenessCertificate parse_certificate_record(const Json& j);

/// "source:2^e*p^n", e.g. "T2_MINUS:2^2*457^1"; used by the CSV encoding.
std::string witness_compact(const UniquenessWitness& w);

/// Header row for one CSV table kind: triple, finding, certificate.
std::string csv_header(const std::string& kind);

std::string csv_triple_row(const MarkoffTriple& t);
std::vector<std::string> csv_finding_rows(const CongruenceFinding& f);
std::string csv_certificate_row(const UniquenessCertificate& cert);

/// Reads back a triple table (header row optional). Round-trip exact.
std::vector<MarkoffTriple> parse_csv_triples(std::istream& in);

/// Decimal-string to Natural; rejects empty strings, signs and non-digits.
Natural parse_natural(const std::string& text);

}  // namespace markoff::records
