#pragma once

#include <string>

#include <json.hpp>

#include "ct/log_combination.hpp"
#include "ct/prover.hpp"

namespace ct {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "ctproof 1.0.0";

// Rational: "p/q" or "p". Poly: coefficient strings ascending in degree.
// RatFunc: {num, den}. LogCombination: {constant, terms: [{prime, coeff}]}.

Json to_json(const Rational& value);
Json to_json(const Poly& poly);
Json to_json(const RatFunc& f);
Json to_json(const LogCombination& value);
Json to_json(const IntegrandFamily& family);
Json to_json(const Recurrence& rec);
Json to_json(const Certificate& cert);
/// Top-level keys in the fixed order params, families, recurrence,
/// certificates, base_cases, extra_checks, substitution_check, verdict,
/// tool_version.
Json to_json(const ProofObject& proof);

Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
LogCombination log_combination_from_json(const Json& j);
IntegrandFamily family_from_json(const Json& j);
Recurrence recurrence_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
ProofObject proof_from_json(const Json& j);

std::string to_string(ProofMode mode);

}  // namespace ct
