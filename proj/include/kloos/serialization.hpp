#pragma once

// JSON encodings. Arbitrary-precision integers are always decimal strings.

#include <json.hpp>

#include "kloos/cyclotomic.hpp"
#include "kloos/dickson.hpp"
#include "kloos/finite_field.hpp"
#include "kloos/integer_polynomial.hpp"
#include "kloos/irreducibility.hpp"
#include "kloos/kloosterman.hpp"
#include "kloos/lucas.hpp"
#include "kloos/search.hpp"
#include "kloos/subfield_verifier.hpp"

namespace kloos {

using Json = nlohmann::json;

Json big_to_json(const BigInt& value);
BigInt big_from_json(const Json& j);

void to_json(Json& j, const FieldSpec& spec);
void from_json(const Json& j, FieldSpec& spec);

void to_json(Json& j, const CyclotomicInteger& z);
CyclotomicInteger cyclotomic_from_json(const Json& j);

void to_json(Json& j, const IntegerPolynomial& f);
void from_json(const Json& j, IntegerPolynomial& f);

/// {field, b, degree, counts, coords, embeddings, is_minus_one}
void to_json(Json& j, const KloostermanValue& kv);
KloostermanValue kloosterman_value_from_json(const Json& j);

void to_json(Json& j, const MinimalPolynomialRecord& rec);
MinimalPolynomialRecord minimal_polynomial_from_json(const Json& j);

void to_json(Json& j, const IrreducibilityCertificate& cert);
IrreducibilityCertificate certificate_from_json(const Json& j);

void to_json(Json& j, const PrimitiveDivisorResult& r);
void to_json(Json& j, const WindowReport& report);
void to_json(Json& j, const ChainVerdict& v);
void to_json(Json& j, const CarlitzResult& r);
void to_json(Json& j, const DivisibilityVerdict& v);
void to_json(Json& j, const ReplayTrace& trace);

void to_json(Json& j, const SearchCell& cell);
void from_json(const Json& j, SearchCell& cell);
void to_json(Json& j, const SearchHit& hit);
void from_json(const Json& j, SearchHit& hit);
void to_json(Json& j, const CellSummary& s);
void from_json(const Json& j, CellSummary& s);
void to_json(Json& j, const SearchReport& report);
void from_json(const Json& j, SearchReport& report);

}  // namespace kloos
