#pragma once

// Command dispatch and report rendering. Reports are deterministic: identical
// JobSpecs (including seeds) produce byte-identical JSON documents.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "entrolab/dynamics.hpp"
#include "entrolab/jobfile.hpp"

namespace entrolab {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "entrolab";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct RunResult {
    Json document;  // full report (or error) document
    std::string text; // human rendering; diagnostics for failures
    int exit_code = 0; // 0 ok, 1 input error, 2 mathematical refusal
};

namespace detail {

inline std::string decimal12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline Json int_sequence(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& v) {
    Json out = Json::array();
    for (const auto& [n, value] : v)
        out.push_back(Json::array({n, std::to_string(value)}));
    return out;
}

inline std::string join_u64(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& v) {
    std::string s;
    for (const auto& [n, value] : v) {
        if (!s.empty()) s += ", ";
        s += std::to_string(n) + " -> " + std::to_string(value);
    }
    return s;
}

// accepted forms: "25", "5/2", "2.5"; always parsed exactly
inline BigRat parse_rational_literal(const std::string& s) {
    auto bad = [&]() -> BigRat {
        throw structural_error("cannot parse '" + s +
                               "' as a rational (use n, n/m, or a decimal)");
    };
    if (s.empty()) return bad();
    std::size_t slash = s.find('/');
    std::size_t dot = s.find('.');
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!digits(num) || !digits(den)) return bad();
        BigInt d(den);
        if (d == 0) return bad();
        return BigRat(BigInt(num), d);
    }
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (!digits(whole) || !digits(frac)) return bad();
        BigInt den = boost::multiprecision::pow(BigInt(10),
                                                static_cast<unsigned>(frac.size()));
        return BigRat(BigInt(whole) * den + BigInt(frac), den);
    }
    if (!digits(s)) return bad();
    return BigRat(BigInt(s));
}

inline Json job_echo(const JobSpec& job) {
    Json j;
    j["command"] = job.command;
    Json input;
    input["characteristic"] = job.characteristic;
    input["variables"] = job.variables;
    input["relations"] = job.relations;
    if (job.has_map) {
        Json m;
        for (std::size_t i = 0; i < job.variables.size(); ++i)
            m[job.variables[i]] = job.images[i];
        input["map"] = m;
    }
    if (job.module_ideal) input["module_ideal"] = *job.module_ideal;
    j["input"] = input;
    Json params;
    params["n"] = job.n;
    params["max_n"] = job.max_n;
    params["max_N"] = job.max_N;
    params["samples"] = job.samples;
    params["seed"] = job.seed;
    params["truncation_cap"] = job.truncation_cap;
    if (job.q) params["q"] = *job.q;
    j["params"] = params;
    return j;
}

inline Json document_skeleton(const JobSpec& job) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["job"] = job_echo(job);
    return doc;
}

inline Json contracting_json(const ContractingResult& c,
                             const std::vector<std::string>& vars) {
    Json j;
    j["contracting"] = c.contracting;
    j["embedding_dim"] = c.edim;
    if (c.witness_variable) j["witness_variable"] = vars[*c.witness_variable];
    return j;
}

inline std::string contracting_text(const ContractingResult& c,
                                    const std::vector<std::string>& vars) {
    if (c.contracting)
        return "CONTRACTING (edim = " + std::to_string(c.edim) + ")";
    return "NOT_CONTRACTING (witness variable " + vars[*c.witness_variable] +
           "; edim = " + std::to_string(c.edim) + ")";
}

inline Json regularity_json(const RegularityResult& r) {
    Json j;
    j["verdict"] = r.certified_not_regular() ? "NOT_REGULAR" : "REGULAR_UP_TO_N";
    j["max_N"] = r.n_max;
    j["embedding_dim"] = r.edim;
    if (r.witness_N) j["witness_N"] = *r.witness_N;
    Json table = Json::array();
    for (const auto& [N, observed, predicted] : r.table)
        table.push_back(Json::array(
            {N, std::to_string(observed), predicted.str()}));
    j["table"] = table;
    return j;
}

inline std::string regularity_text(const RegularityResult& r) {
    if (r.certified_not_regular()) {
        auto& [N, observed, predicted] = r.table.back();
        return "NOT_REGULAR (witness N = " + std::to_string(N) + ": l(R/m^" +
               std::to_string(N) + ") = " + std::to_string(observed) +
               " != " + predicted.str() + " expected for a regular ring)";
    }
    return "REGULAR_UP_TO_N (evidence only: Hilbert-Samuel lengths match the "
           "regular pattern for N <= " +
           std::to_string(r.n_max) + ")";
}

inline Json entropy_json(const LambdaSequence& seq) {
    Json j;
    j["lambda"] = int_sequence(seq.values);
    Json a = Json::array();
    for (const auto& [n, v] : seq.a_n)
        a.push_back(Json::array({n, decimal12(v)}));
    j["a_n"] = a;
    Json bound;
    bound["argmin_n"] = seq.argmin_n;
    bound["lambda"] = std::to_string(seq.value_at(seq.argmin_n));
    bound["decimal"] = decimal12(seq.entropy_upper_bound);
    j["entropy_upper_bound"] = bound;
    j["exact_if_multiplicative"] = seq.exact_if_multiplicative;
    return j;
}

template <class F>
RunResult run_typed(const JobSpec& job, const F& field) {
    using Elem = typename F::Elem;

    const std::size_t nv = job.variables.size();
    MonomialOrder order = MonomialOrder::degrevlex(nv);

    std::vector<Polynomial<Elem>> relations;
    for (const auto& src : job.relations)
        relations.push_back(parse_polynomial(src, job.variables, field, order));
    LocalRingPresentation<Elem> ring(field.spec, job.variables,
                                     std::move(relations), order);

    LengthOptions opts;
    opts.truncation_cap = job.truncation_cap;

    RunResult out;
    out.document = document_skeleton(job);
    Json result;

    const bool needs_map = job.command != "hilbert-samuel" &&
                           job.command != "regularity";
    if (needs_map && !job.has_map)
        throw structural_error("command '" + job.command +
                               "' needs a [map] section in the input file");

    std::vector<Polynomial<Elem>> images;
    if (job.has_map)
        for (const auto& src : job.images)
            images.push_back(parse_polynomial(src, job.variables, field, order));

    auto make_phi = [&]() {
        return Endomorphism<Elem>::make(ring, images);
    };

    if (job.command == "check") {
        auto r = Endomorphism<Elem>::try_make(ring, images);
        if (auto* issue = std::get_if<ValidationIssue>(&r))
            throw validation_error(*issue);
        result["valid"] = true;
        out.text = "valid: the map is a well-defined local endomorphism";
    } else if (job.command == "contracting") {
        auto phi = make_phi();
        auto c = phi.contracting_check();
        result = contracting_json(c, job.variables);
        out.text = "contracting: " + contracting_text(c, job.variables);
    } else if (job.command == "lambda") {
        auto phi = make_phi();
        LocalLengthResult r = local_length(ring, phi.iterate(job.n), opts);
        if (!r.finite())
            throw not_finite_length(
                "NOT_FINITE_LENGTH: the truncation ladder for lambda(phi^" +
                    std::to_string(job.n) + ") did not stabilize by N = " +
                    std::to_string(opts.truncation_cap),
                r.ladder);
        result["n"] = job.n;
        result["lambda"] = std::to_string(*r.length);
        result["stabilized_at"] = r.stabilized_at;
        result["ladder"] = int_sequence(r.ladder);
        out.text = "lambda(phi^" + std::to_string(job.n) +
                   ") = " + std::to_string(*r.length) +
                   " (truncation stabilized at N = " +
                   std::to_string(r.stabilized_at) + ")";
    } else if (job.command == "entropy") {
        auto phi = make_phi();
        LambdaSequence seq = entropy_report(phi, job.max_n, opts);
        result = entropy_json(seq);
        out.text = "lambda: " + join_u64(seq.values) + "\n";
        out.text += "entropy upper bound: " + decimal12(seq.entropy_upper_bound) +
                    " = log(" + std::to_string(seq.value_at(seq.argmin_n)) +
                    ")/" + std::to_string(seq.argmin_n) +
                    " (min over computed a_n)\n";
        out.text += std::string("multiplicative: ") +
                    (seq.exact_if_multiplicative
                         ? "yes (lambda(phi^n) = lambda(phi)^n for all computed n)"
                         : "no");
    } else if (job.command == "kunz") {
        auto phi = make_phi();
        KunzReport r = kunz_test(phi, job.max_n, job.max_N, opts);
        result["verdict"] = to_string(r.verdict);
        if (r.witness_n) result["witness_n"] = *r.witness_n;
        result["lambda"] = int_sequence(r.lambda_seq.values);
        result["multiplicative"] = r.lambda_seq.exact_if_multiplicative;
        result["contracting"] = contracting_json(r.contracting, job.variables);
        result["cross_check"] = regularity_json(r.cross_check);
        out.text = "lambda: " + join_u64(r.lambda_seq.values) + "\n";
        out.text += "contracting: " + contracting_text(r.contracting, job.variables) + "\n";
        out.text += "verdict: " + to_string(r.verdict);
        if (r.witness_n) {
            std::uint64_t l1 = r.lambda_seq.value_at(1);
            out.text += " (witness n = " + std::to_string(*r.witness_n) +
                        ": lambda(phi^" + std::to_string(*r.witness_n) +
                        ") = " +
                        std::to_string(r.lambda_seq.value_at(*r.witness_n)) +
                        " < " + bigint_pow(l1, *r.witness_n).str() +
                        " = lambda(phi)^" + std::to_string(*r.witness_n) + ")";
        }
        out.text += "\ncross-check (Hilbert-Samuel): " + regularity_text(r.cross_check);
    } else if (job.command == "hk") {
        auto phi = make_phi();
        std::optional<BigRat> q;
        if (job.q) q = parse_rational_literal(*job.q);
        HKEstimate est = hk_estimate(phi, job.max_n, q, opts);
        result["q"] = est.q_used.str();
        result["q_provenance"] = to_string(est.provenance);
        Json ratios = Json::array();
        for (const auto& [n, v] : est.ratios)
            ratios.push_back(Json::array({n, v.str()}));
        result["ratios"] = ratios;
        std::string rt;
        for (const auto& [n, v] : est.ratios) {
            if (!rt.empty()) rt += ", ";
            rt += std::to_string(n) + " -> " + v.str();
        }
        out.text = "q = " + est.q_used.str() + " (" + to_string(est.provenance) +
                   ")\nratios lambda(phi^n)/q^n: " + rt;
    } else if (job.command == "nagata") {
        auto phi = make_phi();
        auto samples = nagata_sample_test(phi, job.n, job.samples, job.seed, opts);
        std::uint64_t lambda_value = lambda_n(phi, job.n, opts);
        result["n"] = job.n;
        result["samples"] = job.samples;
        result["seed"] = job.seed;
        result["lambda_n"] = std::to_string(lambda_value);
        Json checks = Json::array();
        Json violations = Json::array();
        std::size_t n_violations = 0;
        std::string first_violation;
        for (const auto& s : samples) {
            Json c;
            Json gens = Json::array();
            std::string gens_text;
            for (const auto& g : s.q_gens) {
                gens.push_back(to_string(g, job.variables));
                if (!gens_text.empty()) gens_text += ", ";
                gens_text += to_string(g, job.variables);
            }
            c["q"] = gens;
            c["len_q"] = std::to_string(s.len_q);
            c["lhs"] = std::to_string(s.lhs);
            c["rhs"] = s.rhs.str();
            c["equal"] = s.equal;
            checks.push_back(c);
            if (!s.equal) {
                ++n_violations;
                violations.push_back(c);
                if (first_violation.empty())
                    first_violation = "q = (" + gens_text + "): l(R/phi^" +
                                      std::to_string(job.n) + "(q)R) = " +
                                      std::to_string(s.lhs) + " != " +
                                      s.rhs.str() + " = l(R/q) * lambda(phi^" +
                                      std::to_string(job.n) + ")";
            }
        }
        result["all_equal"] = n_violations == 0;
        result["violations"] = violations;
        result["checks"] = checks;
        out.text = "lambda(phi^" + std::to_string(job.n) +
                   ") = " + std::to_string(lambda_value) + "\n";
        out.text += "samples: " + std::to_string(job.samples) + " (seed " +
                    std::to_string(job.seed) + ")\n";
        if (n_violations == 0) {
            out.text += "all sampled m-primary ideals satisfy the Nagata "
                        "equality (evidence of flatness only)";
        } else {
            out.text += "violations: " + std::to_string(n_violations) + " of " +
                        std::to_string(job.samples) +
                        " (each certifies phi^" + std::to_string(job.n) +
                        " not flat, hence R not regular)\n";
            out.text += "first violation: " + first_violation;
        }
    } else if (job.command == "phi") {
        auto phi = make_phi();
        std::vector<std::string> ideal_exprs =
            job.module_ideal ? *job.module_ideal : job.variables;
        std::vector<Polynomial<Elem>> a_gens;
        for (const auto& src : ideal_exprs)
            a_gens.push_back(parse_polynomial(src, job.variables, field, order));
        auto r = phi_cyclic(phi, a_gens, job.n, opts);
        result["n"] = job.n;
        result["ideal"] = ideal_exprs;
        Json image = Json::array();
        std::string image_text;
        for (const auto& g : r.image_gens) {
            image.push_back(to_string(g, job.variables));
            if (!image_text.empty()) image_text += ", ";
            image_text += to_string(g, job.variables);
        }
        result["image"] = image;
        result["len_in"] = std::to_string(r.len_in);
        result["len_out"] = std::to_string(r.len_out);
        result["lambda_n"] = std::to_string(r.lambda_value);
        result["bound"] = (BigInt(r.len_in) * BigInt(r.lambda_value)).str();
        result["bound_is_equality"] = r.bound_is_equality;
        out.text = "image ideal phi^" + std::to_string(job.n) + "(a)R = (" +
                   image_text + ")\n";
        out.text += "l(R/a) = " + std::to_string(r.len_in) +
                    ", l(R/phi^" + std::to_string(job.n) + "(a)R) = " +
                    std::to_string(r.len_out) + ", lambda(phi^" +
                    std::to_string(job.n) + ") = " +
                    std::to_string(r.lambda_value) + "\n";
        out.text += "bound: " + std::to_string(r.len_out) + " <= " +
                    (BigInt(r.len_in) * BigInt(r.lambda_value)).str() +
                    (r.bound_is_equality ? " (equality)" : " (strict)");
    } else if (job.command == "hilbert-samuel") {
        std::uint64_t L = hilbert_samuel(ring, job.n);
        result["N"] = job.n;
        result["length"] = std::to_string(L);
        out.text = "l(R/m^" + std::to_string(job.n) +
                   ") = " + std::to_string(L);
    } else if (job.command == "regularity") {
        RegularityResult r = regularity_check(ring, job.max_N);
        result = regularity_json(r);
        out.text = "regularity (Hilbert-Samuel comparison up to N = " +
                   std::to_string(job.max_N) + "): " + regularity_text(r);
    } else {
        throw structural_error("unknown command '" + job.command + "'");
    }

    out.document["result"] = result;
    out.exit_code = 0;
    return out;
}

inline RunResult error_result(const JobSpec& job, const std::string& kind,
                              const std::string& message, int exit_code,
                              const not_finite_length::Ladder* ladder = nullptr) {
    RunResult out;
    out.document = document_skeleton(job);
    Json err;
    err["kind"] = kind;
    err["message"] = message;
    if (ladder) err["ladder"] = int_sequence(*ladder);
    out.document["error"] = err;
    out.text = "error: " + message;
    out.exit_code = exit_code;
    return out;
}

} // namespace detail

// Dispatch a parsed JobSpec. Exit code 0 on success, 2 on a mathematical
// refusal (NOT_FINITE_LENGTH, Q_UNAVAILABLE, capacity), 1 on input errors.
inline RunResult run(const JobSpec& job) {
    try {
        if (job.characteristic == 0)
            return detail::run_typed(job, RationalField());
        return detail::run_typed(job, PrimeField(FieldSpec(job.characteristic)));
    } catch (const validation_error& e) {
        return detail::error_result(job, e.issue().label(), e.what(), 1);
    } catch (const parse_error& e) {
        return detail::error_result(job, "PARSE_ERROR", e.what(), 1);
    } catch (const not_finite_length& e) {
        return detail::error_result(job, "NOT_FINITE_LENGTH", e.what(), 2,
                                    &e.ladder());
    } catch (const q_unavailable& e) {
        return detail::error_result(job, "Q_UNAVAILABLE", e.what(), 2);
    } catch (const capacity_error& e) {
        return detail::error_result(job, "CAPACITY", e.what(), 2);
    } catch (const structural_error& e) {
        return detail::error_result(job, "STRUCTURAL_ERROR", e.what(), 1);
    }
}

} // namespace entrolab
