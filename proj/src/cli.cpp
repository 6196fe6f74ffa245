#include "kloos/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "kloos/dickson.hpp"
#include "kloos/irreducibility.hpp"
#include "kloos/lucas.hpp"
#include "kloos/number_theory.hpp"
#include "kloos/search.hpp"
#include "kloos/serialization.hpp"
#include "kloos/subfield_verifier.hpp"

namespace kloos::cli {

namespace {

/// Usage-level failure: bad flags, out-of-range requests, inputs outside an operation's domain.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Ceiling {
    std::uint64_t value;
    std::string source;
};

/// Flag/config value, else the environment override, else the built-in default; capped at `cap`.
Ceiling resolve_ceiling(const RunConfig& rc, std::uint64_t fallback, std::uint64_t cap) {
    Ceiling c{fallback, "default"};
    if (rc.ceiling) {
        c = {*rc.ceiling, "flag"};
    } else if (const char* env = std::getenv(kCeilingEnv)) {
        try {
            c = {std::stoull(env), std::string("env:") + kCeilingEnv};
        } catch (const std::exception&) {
            throw UsageError(std::string(kCeilingEnv) + " is not an integer");
        }
    }
    if (c.value > cap) {
        throw UsageError("ceiling " + std::to_string(c.value) + " exceeds the limit " + std::to_string(cap));
    }
    return c;
}

BigInt parse_big(const std::string& text, const char* what) {
    BigInt out;
    if (text.empty() || out.set_str(text, 10) != 0) throw UsageError(std::string("invalid integer for ") + what);
    return out;
}

std::uint64_t field_order_or_throw(std::uint32_t p, std::uint32_t d) {
    try {
        return checked_pow(p, d);
    } catch (const std::overflow_error&) {
        throw UsageError("field order overflows");
    }
}

/// "g^K" selects gamma^K; otherwise a comma-separated little-endian coefficient list.
FieldElement parse_element(const PowerTable& table, const std::string& text) {
    const Field& field = table.field();
    if (text.rfind("g^", 0) == 0) return table.power(std::stoull(text.substr(2)));
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) coeffs.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    if (coeffs.empty() || coeffs.size() > field.d()) throw UsageError("element needs between 1 and d coefficients");
    coeffs.resize(field.d(), 0);
    for (auto& c : coeffs) {
        if (c >= field.p()) throw UsageError("element coefficient out of range");
    }
    return field.from_coeffs(coeffs);
}

/// "d^K" selects delta^K in F_q; otherwise an integer residue in F_p. Returns the delta power index.
std::uint64_t parse_subfield_index(const PowerTable& table, const SubfieldTraces& sub, const std::string& text) {
    if (text.rfind("d^", 0) == 0) return std::stoull(text.substr(2)) % (sub.q() - 1);
    const BigInt residue = parse_big(text, "--a");
    const std::uint64_t r = mod_u(residue, table.p());
    if (r == 0) throw UsageError("a must be nonzero");
    return sub.delta_log_of_residue(r);
}

void emit(const Json& j, const RunConfig& rc, std::ostream& out) {
    if (rc.format != "json") throw UsageError("format '" + rc.format + "' is only supported by search");
    const std::string text = j.dump(2);
    out << text << '\n';
    if (!rc.output.empty()) {
        std::ofstream file(rc.output, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot write " + rc.output);
        file << text << '\n';
    }
}

std::vector<std::uint32_t> parse_prime_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (!part.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    }
    if (out.empty()) throw UsageError("--p needs at least one prime");
    return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Kloosterman sums, Dickson polynomials and subfield-value verification", "kloos"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Configuration file with key = value lines");

    RunConfig rc;
    std::uint64_t ceiling_flag = 0;
    app.add_option("--seed", rc.seed, "Seed for field construction");
    auto* ceiling_opt = app.add_option("--ceiling", ceiling_flag, "Maximum field order");
    app.add_option("--workers", rc.workers, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));
    app.add_option("--output", rc.output, "Also write the result to this path");
    app.add_option("--format", rc.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::uint32_t p = 0, d = 1, m = 1, n = 1, ell = 0;
    std::string b_text, a_text, r_text, x_text, P_text, Q_text, primes_text, report_path, csv_path, resume_path,
        checkpoint_path;
    unsigned k = 0, k_min = 31, k_max = 0, certify_primes = 0, dickson_n = 0;
    std::uint64_t max_order = 0;
    bool verify = false;

    auto* field_cmd = app.add_subcommand("field", "Construct and print a field descriptor");
    field_cmd->add_option("--p", p)->required();
    field_cmd->add_option("--d", d)->required();

    auto* kl_cmd = app.add_subcommand("kloosterman", "Kloosterman sums");
    kl_cmd->require_subcommand(1);
    auto* kl_eval = kl_cmd->add_subcommand("eval", "Evaluate K(b) exactly");
    kl_eval->add_option("--p", p)->required();
    kl_eval->add_option("--d", d)->required();
    kl_eval->add_option("--b", b_text, "Coefficients c0,c1,... or g^K")->required();

    auto* dickson_cmd = app.add_subcommand("dickson", "Dickson polynomials D_n(x, r)");
    dickson_cmd->require_subcommand(1);
    auto* dickson_coeffs = dickson_cmd->add_subcommand("coeffs", "Coefficient list");
    dickson_coeffs->add_option("--n", dickson_n)->required();
    dickson_coeffs->add_option("--r", r_text)->required();
    auto* dickson_eval_cmd = dickson_cmd->add_subcommand("eval", "Evaluate at an integer or rational");
    dickson_eval_cmd->add_option("--n", dickson_n)->required();
    dickson_eval_cmd->add_option("--r", r_text)->required();
    dickson_eval_cmd->add_option("--x", x_text)->required();

    auto* minpoly_cmd = app.add_subcommand("minpoly", "Minimal polynomial of K_q(a)");
    minpoly_cmd->add_option("--p", p)->required();
    minpoly_cmd->add_option("--m", m)->required();
    minpoly_cmd->add_option("--a", a_text, "Residue in F_p or d^K for delta^K")->required();

    auto* irred_cmd = app.add_subcommand("irred", "Irreducibility certificate for D_n(x, r) + 1");
    irred_cmd->add_option("--n", dickson_n)->required();
    irred_cmd->add_option("--r", r_text)->required();
    irred_cmd->add_option("--certify-primes", certify_primes, "Also certify by patterns mod the first k primes");

    auto* lucas_cmd = app.add_subcommand("lucas", "Lucas sequences and primitive divisors");
    lucas_cmd->require_subcommand(1);
    auto* lucas_check = lucas_cmd->add_subcommand("check", "Primitive divisors for every kmin <= k <= kmax");
    lucas_check->add_option("--P", P_text)->required();
    lucas_check->add_option("--Q", Q_text)->required();
    lucas_check->add_option("--kmax", k_max)->required();
    lucas_check->add_option("--kmin", k_min, "First index checked")->default_val(31)->check(CLI::Range(2u, 100000u));
    auto* lucas_primdiv = lucas_cmd->add_subcommand("primdiv", "Primitive divisor of u_k");
    lucas_primdiv->add_option("--P", P_text)->required();
    lucas_primdiv->add_option("--Q", Q_text)->required();
    lucas_primdiv->add_option("--k", k)->required();

    auto* search_cmd = app.add_subcommand("search", "Exhaustive search for K_{q^n}(a) = -1");
    search_cmd->add_option("--p", primes_text, "Comma-separated primes")->required();
    auto* max_order_opt = search_cmd->add_option("--max-order", max_order, "Largest q^n searched");
    search_cmd->add_option("--report", report_path, "JSON report path");
    search_cmd->add_option("--csv", csv_path, "CSV export of hits");
    search_cmd->add_option("--checkpoint", checkpoint_path, "Checkpoint written after each cell");
    search_cmd->add_option("--resume", resume_path, "Resume from (and keep updating) this checkpoint");
    search_cmd->add_flag("--verify", verify, "Per-instance property checks");

    auto* replay_cmd = app.add_subcommand("replay", "Executable trace of the contradiction");
    replay_cmd->add_option("--p", p)->required();
    replay_cmd->add_option("--l", ell)->required();
    replay_cmd->add_option("--m", m)->default_val(1);

    auto* carlitz_cmd = app.add_subcommand("carlitz", "Check K_{q^n}(a) = (-1)^{n-1} D_n(K_q(a), q)");
    carlitz_cmd->add_option("--p", p)->required();
    carlitz_cmd->add_option("--m", m)->required();
    carlitz_cmd->add_option("--n", n)->required();
    carlitz_cmd->add_option("--a", a_text, "Residue in F_p or d^K for delta^K")->required();

    std::vector<std::string> argv_store{"kloos"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    if (*ceiling_opt) rc.ceiling = ceiling_flag;

    try {
        if (*field_cmd) {
            const std::uint64_t order = field_order_or_throw(p, d);
            const Ceiling c = resolve_ceiling(rc, kSingleCeiling, kSingleCeiling);
            if (order > c.value) throw UsageError("field order exceeds the ceiling");
            const FieldSpec spec = make_field(p, d, rc.seed);
            validate(spec);
            emit(Json(spec), rc, out);
            return kExitOk;
        }
        if (*kl_eval) {
            const std::uint64_t order = field_order_or_throw(p, d);
            const Ceiling c = resolve_ceiling(rc, kSingleCeiling, kSingleCeiling);
            if (order > c.value) throw UsageError("field order exceeds the ceiling");
            const PowerTable table(make_field(p, d, rc.seed));
            const KloostermanValue kv = kloosterman_sum(table, parse_element(table, b_text));
            Json j = kv;
            j["shifted"] = shifted_sum(kv);
            j["lambda_residue"] = kv.value.lambda_residue();
            j["ceiling"] = {{"value", c.value}, {"source", c.source}};
            emit(j, rc, out);
            return kExitOk;
        }
        if (*dickson_coeffs) {
            emit(Json(dickson_poly(dickson_n, parse_big(r_text, "--r"))), rc, out);
            return kExitOk;
        }
        if (*dickson_eval_cmd) {
            const BigInt r = parse_big(r_text, "--r");
            Rational x;
            if (x.set_str(x_text, 10) != 0) throw UsageError("invalid rational for --x");
            x.canonicalize();
            const Rational value = dickson_eval(dickson_n, r, x);
            const Rational closed = dickson_poly(dickson_n, r).evaluate<Rational>(x, Rational(1));
            emit(Json{{"n", dickson_n},
                      {"r", big_to_json(r)},
                      {"x", x.get_str()},
                      {"value", value.get_str()},
                      {"closed_form_agrees", value == closed}},
                 rc, out);
            return value == closed ? kExitOk : kExitAssertion;
        }
        if (*minpoly_cmd) {
            const Ceiling c = resolve_ceiling(rc, kSingleCeiling, kSingleCeiling);
            if (field_order_or_throw(p, m) > c.value) throw UsageError("field order exceeds the ceiling");
            const PowerTable table(make_field(p, m, rc.seed));
            const SubfieldTraces sub(table, m);
            const MinimalPolynomialRecord rec = minimal_polynomial(table, sub, parse_subfield_index(table, sub, a_text));
            Json j = rec;
            j["field"] = table.field().spec();
            j["degree_bound"] = minimal_polynomial_degree_bound(p);
            emit(j, rc, out);
            const bool ok = binomial_congruence_check(rec) && rec.t <= minimal_polynomial_degree_bound(p);
            return ok ? kExitOk : kExitAssertion;
        }
        if (*irred_cmd) {
            IrreducibilityCertificate cert;
            try {
                cert = turnwald_decide(dickson_n, parse_big(r_text, "--r"));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            bool contradiction = false;
            if (certify_primes > 0) {
                const IrreducibilityCertificate patterns = certify_by_patterns(cert.polynomial, first_primes(certify_primes));
                cert.patterns = patterns.patterns;
                contradiction = cert.verdict == Verdict::reducible && patterns.verdict == Verdict::irreducible;
                Json j = cert;
                j["pattern_verdict"] = to_string(patterns.verdict);
                emit(j, rc, out);
            } else {
                emit(Json(cert), rc, out);
            }
            return contradiction ? kExitAssertion : kExitOk;
        }
        if (*lucas_check) {
            const LucasPair pair{parse_big(P_text, "--P"), parse_big(Q_text, "--Q")};
            const WindowReport report = bhv_window_check(pair, k_max, k_min);
            emit(Json(report), rc, out);
            if (report.violation) return kExitUsage;
            return report.passed() ? kExitOk : kExitAssertion;
        }
        if (*lucas_primdiv) {
            const LucasPair pair{parse_big(P_text, "--P"), parse_big(Q_text, "--Q")};
            emit(Json(primitive_divisor(pair, k)), rc, out);
            return kExitOk;
        }
        if (*search_cmd) {
            SearchConfig config;
            config.primes = parse_prime_list(primes_text);
            if (*max_order_opt) {
                RunConfig with_flag = rc;
                with_flag.ceiling = max_order;
                const Ceiling c = resolve_ceiling(with_flag, kSweepCeiling, kSweepCeiling);
                config.max_order = c.value;
                config.ceiling_source = "flag";
            } else {
                const Ceiling c = resolve_ceiling(rc, kSweepCeiling, kSweepCeiling);
                config.max_order = c.value;
                config.ceiling_source = c.source;
            }
            config.workers = rc.workers;
            config.seed = rc.seed;
            config.verify_properties = verify;
            if (!resume_path.empty()) {
                config.checkpoint_path = resume_path;
                config.resume = true;
            } else if (!checkpoint_path.empty()) {
                config.checkpoint_path = checkpoint_path;
            }
            const SearchReport report = exhaustive_search(config);
            const Json j = report;
            if (!report_path.empty()) {
                std::ofstream file(report_path, std::ios::trunc);
                if (!file) throw std::runtime_error("cannot write " + report_path);
                file << j.dump(2) << '\n';
            }
            if (!csv_path.empty()) {
                std::ofstream file(csv_path, std::ios::trunc);
                if (!file) throw std::runtime_error("cannot write " + csv_path);
                file << hits_to_csv(report);
            }
            if (rc.format == "csv") {
                out << hits_to_csv(report);
                if (!rc.output.empty()) std::ofstream(rc.output, std::ios::trunc) << hits_to_csv(report);
            } else {
                emit(j, rc, out);
            }
            bool ok = report.failures.empty();
            for (const auto& hit : report.hits) ok = ok && hit.reverified && hit.field_order() == 16;
            return ok ? kExitOk : kExitAssertion;
        }
        if (*replay_cmd) {
            ReplayTrace trace;
            try {
                trace = contradiction_replay(p, m, ell, resolve_ceiling(rc, std::uint64_t{1} << 20, kSingleCeiling).value,
                                             rc.seed);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            emit(Json(trace), rc, out);
            return trace.passed() ? kExitOk : kExitAssertion;
        }
        if (*carlitz_cmd) {
            const std::uint64_t order = field_order_or_throw(p, m * n);
            const Ceiling c = resolve_ceiling(rc, kSingleCeiling, kSingleCeiling);
            if (order > c.value) throw UsageError("field order q^n exceeds the ceiling");
            const PowerTable table(make_field(p, m * n, rc.seed));
            const SubfieldTraces sub(table, m);
            const std::uint64_t index = parse_subfield_index(table, sub, a_text);
            const CarlitzResult result = carlitz_check(table, m, table.power(index * sub.step()));
            emit(Json(result), rc, out);
            return result.equal ? kExitOk : kExitAssertion;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const HypothesisViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // Internal consistency checks (integrality, orbit agreement, closed-form agreement).
        err << "assertion failed: " << e.what() << '\n';
        return kExitAssertion;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace kloos::cli
