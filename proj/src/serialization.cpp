#include "kloos/serialization.hpp"

#include <stdexcept>

namespace kloos {

Json big_to_json(const BigInt& value) { return value.get_str(); }

BigInt big_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("big integers must be encoded as decimal strings");
    BigInt out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("malformed decimal integer");
    return out;
}

namespace {

Json big_vector(const std::vector<BigInt>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(big_to_json(v));
    return out;
}

std::vector<BigInt> big_vector_from(const Json& j) {
    std::vector<BigInt> out;
    for (const auto& item : j) out.push_back(big_from_json(item));
    return out;
}

Json pattern_to_json(const DegreePattern& pattern) {
    Json out = Json::array();
    for (const auto& [degree, count] : pattern) out.push_back({{"degree", degree}, {"count", count}});
    return out;
}

}  // namespace

void to_json(Json& j, const FieldSpec& spec) {
    j = Json{{"p", spec.p}, {"d", spec.d}, {"modulus", spec.modulus}, {"generator", spec.generator}};
}

void from_json(const Json& j, FieldSpec& spec) {
    j.at("p").get_to(spec.p);
    j.at("d").get_to(spec.d);
    j.at("modulus").get_to(spec.modulus);
    j.at("generator").get_to(spec.generator);
}

void to_json(Json& j, const CyclotomicInteger& z) { j = Json{{"p", z.p()}, {"coords", big_vector(z.coords())}}; }

CyclotomicInteger cyclotomic_from_json(const Json& j) {
    return CyclotomicInteger(j.at("p").get<std::uint32_t>(), big_vector_from(j.at("coords")));
}

void to_json(Json& j, const IntegerPolynomial& f) { j = big_vector(f.coeffs()); }

void from_json(const Json& j, IntegerPolynomial& f) { f = IntegerPolynomial(big_vector_from(j)); }

void to_json(Json& j, const KloostermanValue& kv) {
    Json embeddings = Json::array();
    for (const auto& z : kv.value.complex_embeddings()) embeddings.push_back({z.real(), z.imag()});
    j = Json{{"field", kv.field},
             {"b", kv.b.coeffs},
             {"degree", kv.degree},
             {"counts", kv.counts},
             {"p", kv.value.p()},
             {"coords", big_vector(kv.value.coords())},
             {"embeddings", embeddings},
             {"is_minus_one", kv.is_minus_one()}};
}

KloostermanValue kloosterman_value_from_json(const Json& j) {
    KloostermanValue kv;
    j.at("field").get_to(kv.field);
    j.at("b").get_to(kv.b.coeffs);
    j.at("degree").get_to(kv.degree);
    j.at("counts").get_to(kv.counts);
    kv.value = CyclotomicInteger(j.at("p").get<std::uint32_t>(), big_vector_from(j.at("coords")));
    return kv;
}

void to_json(Json& j, const MinimalPolynomialRecord& rec) {
    Json orbit = Json::array();
    for (const auto& z : rec.orbit) orbit.push_back(big_vector(z.coords()));
    j = Json{{"p", rec.p},     {"m", rec.m},         {"a_index", rec.a_index},
             {"orbit", orbit}, {"g", rec.g},         {"t", rec.t},
             {"coincidences", rec.coincidences},     {"binomial_congruence", binomial_congruence_check(rec)}};
}

MinimalPolynomialRecord minimal_polynomial_from_json(const Json& j) {
    MinimalPolynomialRecord rec;
    j.at("p").get_to(rec.p);
    j.at("m").get_to(rec.m);
    j.at("a_index").get_to(rec.a_index);
    for (const auto& item : j.at("orbit")) rec.orbit.emplace_back(rec.p, big_vector_from(item));
    j.at("g").get_to(rec.g);
    j.at("t").get_to(rec.t);
    j.at("coincidences").get_to(rec.coincidences);
    return rec;
}

void to_json(Json& j, const IrreducibilityCertificate& cert) {
    Json turnwald = Json::array();
    for (const auto& s : cert.turnwald) {
        turnwald.push_back({{"ell", s.ell},
                            {"s", big_to_json(s.s)},
                            {"constant_coefficient", big_to_json(s.constant_coefficient)},
                            {"value_at_plus_one", big_to_json(s.value_at_plus_one)},
                            {"value_at_minus_one", big_to_json(s.value_at_minus_one)}});
    }
    Json patterns = Json::array();
    for (const auto& s : cert.patterns) {
        patterns.push_back({{"prime", s.prime}, {"skipped", s.skipped}, {"pattern", pattern_to_json(s.pattern)}});
    }
    j = Json{{"polynomial", cert.polynomial},
             {"verdict", to_string(cert.verdict)},
             {"turnwald", turnwald},
             {"patterns", patterns}};
    if (cert.witness) {
        j["witness"] = {{"ell", cert.witness->ell}, {"c", cert.witness->c}, {"factor", cert.witness->factor}};
    }
}

IrreducibilityCertificate certificate_from_json(const Json& j) {
    IrreducibilityCertificate cert;
    j.at("polynomial").get_to(cert.polynomial);
    cert.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const auto& item : j.at("turnwald")) {
        TurnwaldStep s;
        item.at("ell").get_to(s.ell);
        s.s = big_from_json(item.at("s"));
        s.constant_coefficient = big_from_json(item.at("constant_coefficient"));
        s.value_at_plus_one = big_from_json(item.at("value_at_plus_one"));
        s.value_at_minus_one = big_from_json(item.at("value_at_minus_one"));
        cert.turnwald.push_back(std::move(s));
    }
    for (const auto& item : j.at("patterns")) {
        PatternStep s;
        item.at("prime").get_to(s.prime);
        item.at("skipped").get_to(s.skipped);
        for (const auto& entry : item.at("pattern")) {
            s.pattern[entry.at("degree").get<unsigned>()] = entry.at("count").get<unsigned>();
        }
        cert.patterns.push_back(std::move(s));
    }
    if (j.contains("witness")) {
        const auto& w = j.at("witness");
        cert.witness = FactorWitness{w.at("ell").get<unsigned>(), w.at("c").get<int>(),
                                     w.at("factor").get<IntegerPolynomial>()};
    }
    return cert;
}

void to_json(Json& j, const PrimitiveDivisorResult& r) {
    j = Json{{"k", r.k},
             {"u_k", big_to_json(r.u_k)},
             {"primitive_part", big_to_json(r.primitive_part)},
             {"exists", r.exists},
             {"witness", r.witness ? Json(big_to_json(*r.witness)) : Json(nullptr)}};
}

void to_json(Json& j, const WindowReport& report) {
    j = Json{{"P", big_to_json(report.pair.P)},
             {"Q", big_to_json(report.pair.Q)},
             {"D", big_to_json(report.pair.discriminant())},
             {"k_min", report.k_min},
             {"k_max", report.k_max},
             {"hypothesis_violation", report.violation ? Json(*report.violation) : Json(nullptr)},
             {"missing", report.missing},
             {"results", report.results},
             {"passed", report.passed()}};
}

void to_json(Json& j, const ChainVerdict& v) {
    j = Json{{"ell", v.ell},
             {"c", v.c},
             {"s", big_to_json(v.s)},
             {"v_ell", big_to_json(v.v_ell)},
             {"vacuous", v.vacuous},
             {"u_double_is_minus_u", v.u_double_is_minus_u},
             {"no_primitive_divisor_at_double", v.no_primitive_divisor_at_double},
             {"index_within_exception_window", v.index_within_exception_window}};
}

void to_json(Json& j, const CarlitzResult& r) {
    j = Json{{"p", r.p},
             {"m", r.m},
             {"n", r.n},
             {"a", r.a.coeffs},
             {"extension_sum", r.extension_sum},
             {"base_sum", r.base_sum},
             {"dickson_side", r.dickson_side},
             {"equal", r.equal}};
}

void to_json(Json& j, const DivisibilityVerdict& v) {
    j = Json{{"p", v.p},
             {"m", v.m},
             {"ell", v.ell},
             {"a_index", v.a_index},
             {"extension_value", v.extension_value},
             {"is_minus_one", v.is_minus_one},
             {"g", v.g},
             {"target", v.target},
             {"divides", v.divides},
             {"divides_plus_one_form", v.divides_plus_one_form},
             {"consistent", v.consistent}};
}

void to_json(Json& j, const ReplayTrace& trace) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        steps.push_back({{"name", s.name}, {"detail", s.detail}, {"passed", s.passed}, {"skipped", s.skipped}});
    }
    j = Json{{"p", trace.p},         {"m", trace.m},          {"ell", trace.ell},
             {"q", trace.q},         {"steps", steps},        {"passed", trace.passed()}};
}

void to_json(Json& j, const SearchCell& cell) { j = Json{{"p", cell.p}, {"m", cell.m}, {"n", cell.n}}; }

void from_json(const Json& j, SearchCell& cell) {
    j.at("p").get_to(cell.p);
    j.at("m").get_to(cell.m);
    j.at("n").get_to(cell.n);
}

void to_json(Json& j, const SearchHit& hit) {
    j = Json{{"p", hit.p},
             {"m", hit.m},
             {"n", hit.n},
             {"a_index", hit.a_index},
             {"field_order", hit.field_order()},
             {"counts", hit.counts},
             {"reverified", hit.reverified}};
}

void from_json(const Json& j, SearchHit& hit) {
    j.at("p").get_to(hit.p);
    j.at("m").get_to(hit.m);
    j.at("n").get_to(hit.n);
    j.at("a_index").get_to(hit.a_index);
    j.at("counts").get_to(hit.counts);
    j.at("reverified").get_to(hit.reverified);
}

void to_json(Json& j, const CellSummary& s) {
    j = Json{{"cell", s.cell}, {"instances", s.instances}, {"hits", s.hits}, {"property_checks", s.property_checks}};
}

void from_json(const Json& j, CellSummary& s) {
    j.at("cell").get_to(s.cell);
    j.at("instances").get_to(s.instances);
    j.at("hits").get_to(s.hits);
    j.at("property_checks").get_to(s.property_checks);
}

void to_json(Json& j, const SearchReport& report) {
    j = Json{{"header", {{"primes", report.primes},
                         {"ceiling", report.ceiling},
                         {"ceiling_source", report.ceiling_source},
                         {"seed", report.seed}}},
             {"grid", report.grid},
             {"cells", report.cells},
             {"instances_tested", report.instances_tested},
             {"hits", report.hits},
             {"failures", report.failures},
             {"runtime_seconds", report.runtime_seconds}};
}

void from_json(const Json& j, SearchReport& report) {
    const auto& header = j.at("header");
    header.at("primes").get_to(report.primes);
    header.at("ceiling").get_to(report.ceiling);
    header.at("ceiling_source").get_to(report.ceiling_source);
    header.at("seed").get_to(report.seed);
    j.at("grid").get_to(report.grid);
    j.at("cells").get_to(report.cells);
    j.at("instances_tested").get_to(report.instances_tested);
    j.at("hits").get_to(report.hits);
    j.at("failures").get_to(report.failures);
    j.at("runtime_seconds").get_to(report.runtime_seconds);
}

}  // namespace kloos
