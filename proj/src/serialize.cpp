#include "ct/serialize.hpp"

#include "ct/errors.hpp"

namespace ct {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("proof object: missing field '") + key + "'");
    return j.at(key);
}

Json value_pair_json(const ValuePair& v) {
    Json j;
    j["n"] = v.n;
    j["left"] = to_json(v.left);
    j["right"] = to_json(v.right);
    j["equal"] = v.left == v.right;
    return j;
}

ValuePair value_pair_from_json(const Json& j) {
    return {field(j, "n").get<unsigned>(), log_combination_from_json(field(j, "left")),
            log_combination_from_json(field(j, "right"))};
}

}  // namespace

std::string to_string(ProofMode mode) {
    return mode == ProofMode::discover ? "discover" : "closed_form";
}

Json to_json(const Rational& value) { return value.to_string(); }

Json to_json(const Poly& poly) {
    Json j = Json::array();
    for (const auto& c : poly.coefficients()) j.push_back(c.to_string());
    return j;
}

Json to_json(const RatFunc& f) {
    Json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

Json to_json(const LogCombination& value) {
    Json j;
    j["constant"] = to_json(value.constant());
    Json terms = Json::array();
    for (const auto& [p, c] : value.terms()) {  // std::map keeps primes ascending
        Json t;
        t["prime"] = p.get_str();
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const IntegrandFamily& family) {
    Json j;
    j["cofactor"] = to_json(family.cofactor());
    j["ratio"] = to_json(family.ratio());
    return j;
}

Json to_json(const Recurrence& rec) {
    Json j;
    j["order"] = rec.order();
    Json coeffs = Json::array();
    for (const auto& c : rec.coeffs()) coeffs.push_back(to_json(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json to_json(const Certificate& cert) {
    Json parts = Json::array();
    for (const auto& p : cert.parts()) parts.push_back(to_json(p));
    Json j;
    j["parts"] = std::move(parts);
    return j;
}

Json to_json(const ProofObject& proof) {
    Json j;
    j["params"] = Json{{"a", to_json(proof.params.a())}, {"b", to_json(proof.params.b())}};
    Json families = Json::object();
    if (proof.left_family) families["left"] = to_json(*proof.left_family);
    if (proof.right_family) families["right"] = to_json(*proof.right_family);
    j["families"] = std::move(families);
    Json rec = proof.recurrence ? to_json(*proof.recurrence) : Json(nullptr);
    if (proof.recurrence) {
        rec["source"] = to_string(proof.mode);
        rec["degree_bound"] = proof.degree_bound;
    }
    j["recurrence"] = std::move(rec);
    Json certs = Json::object();
    if (proof.left_certificate) certs["left"] = to_json(*proof.left_certificate);
    if (proof.right_certificate) certs["right"] = to_json(*proof.right_certificate);
    j["certificates"] = std::move(certs);
    Json base = Json::array();
    for (const auto& v : proof.base_cases) base.push_back(value_pair_json(v));
    j["base_cases"] = std::move(base);
    Json extra = Json::array();
    for (const auto& v : proof.extra_checks) extra.push_back(value_pair_json(v));
    j["extra_checks"] = std::move(extra);
    j["substitution_check"] = proof.substitution_check;
    j["verdict"] = proof.verdict.proved ? Json("proved") : Json{{"failed", proof.verdict.reason}};
    j["tool_version"] = kToolVersion;
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw DomainError("rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("polynomial must be a coefficient array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Poly(std::move(coeffs));
}

RatFunc ratfunc_from_json(const Json& j) { return {poly_from_json(field(j, "num")), poly_from_json(field(j, "den"))}; }

LogCombination log_combination_from_json(const Json& j) {
    LogCombination::Terms terms;
    for (const auto& t : field(j, "terms")) {
        terms[BigInt(field(t, "prime").get<std::string>(), 10)] += rational_from_json(field(t, "coeff"));
    }
    return {rational_from_json(field(j, "constant")), std::move(terms)};
}

IntegrandFamily family_from_json(const Json& j) {
    return {ratfunc_from_json(field(j, "cofactor")), ratfunc_from_json(field(j, "ratio"))};
}

Recurrence recurrence_from_json(const Json& j) {
    std::vector<Poly> coeffs;
    for (const auto& c : field(j, "coeffs")) coeffs.push_back(poly_from_json(c));
    Recurrence rec(std::move(coeffs));
    if (rec.order() != field(j, "order").get<int>()) throw DomainError("recurrence order does not match coefficients");
    return rec;
}

Certificate certificate_from_json(const Json& j) {
    std::vector<RatFunc> parts;
    for (const auto& p : field(j, "parts")) parts.push_back(ratfunc_from_json(p));
    return Certificate(std::move(parts));
}

ProofObject proof_from_json(const Json& j) {
    const Json& params = field(j, "params");
    ProofObject proof(ParameterPair::unchecked(rational_from_json(field(params, "a")), rational_from_json(field(params, "b"))));
    const Json& families = field(j, "families");
    if (families.contains("left")) proof.left_family = family_from_json(families.at("left"));
    if (families.contains("right")) proof.right_family = family_from_json(families.at("right"));
    const Json& rec = field(j, "recurrence");
    if (!rec.is_null()) {
        proof.recurrence = recurrence_from_json(rec);
        const auto source = field(rec, "source").get<std::string>();
        if (source != "discover" && source != "closed_form") throw DomainError("unknown recurrence source '" + source + "'");
        proof.mode = source == "discover" ? ProofMode::discover : ProofMode::verify_closed_form;
        proof.degree_bound = field(rec, "degree_bound").get<unsigned>();
    }
    const Json& certs = field(j, "certificates");
    if (certs.contains("left")) proof.left_certificate = certificate_from_json(certs.at("left"));
    if (certs.contains("right")) proof.right_certificate = certificate_from_json(certs.at("right"));
    for (const auto& v : field(j, "base_cases")) proof.base_cases.push_back(value_pair_from_json(v));
    for (const auto& v : field(j, "extra_checks")) proof.extra_checks.push_back(value_pair_from_json(v));
    proof.substitution_check = field(j, "substitution_check").get<bool>();
    const Json& verdict = field(j, "verdict");
    proof.verdict = verdict == "proved" ? Verdict::success() : Verdict::failure(field(verdict, "failed").get<std::string>());
    return proof;
}

}  // namespace ct
