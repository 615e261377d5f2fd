#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct/integrand.hpp"
#include "ct/log_combination.hpp"
#include "ct/telescoper.hpp"

namespace ct {

enum class ProofMode { verify_closed_form, discover };

struct Verdict {
    bool proved = false;
    std::string reason;  // empty when proved

    static Verdict success() { return {true, {}}; }
    static Verdict failure(std::string why) { return {false, std::move(why)}; }
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ValuePair {
    unsigned n = 0;
    LogCombination left;
    LogCombination right;
    friend bool operator==(const ValuePair&, const ValuePair&) = default;
};

/// Everything needed to re-check the equality of the two integrals for one
/// parameter pair: the shared recurrence, one certificate per side, the exact
/// initial values, direct comparisons and the substitution check.
struct ProofObject {
    explicit ProofObject(ParameterPair p, ProofMode m = ProofMode::verify_closed_form)
        : params(std::move(p)), mode(m) {}

    ParameterPair params;
    ProofMode mode = ProofMode::verify_closed_form;
    std::optional<IntegrandFamily> left_family;
    std::optional<IntegrandFamily> right_family;
    std::optional<Recurrence> recurrence;
    std::optional<Certificate> left_certificate;
    std::optional<Certificate> right_certificate;
    /// The telescoping identities were checked at n = 0..degree_bound.
    unsigned degree_bound = 0;
    std::vector<ValuePair> base_cases;
    std::vector<ValuePair> extra_checks;
    bool substitution_check = false;
    Verdict verdict;

    unsigned n_checked() const { return static_cast<unsigned>(extra_checks.size()); }
};

struct DiscoverOptions {
    int max_order = 2;
    int max_cert_degree = 4;
};

/// (n+1), -(2n+3)(2ab+a+b), (a-b)^2 (n+2)
Recurrence closed_form_recurrence(const ParameterPair& params);
/// x(x-1)((a+b+1)x^2 + 2abx - ab) / ((x+a)(x+b))
Certificate closed_form_left_certificate(const ParameterPair& params);
/// x(x-1)((a-b)x^2 + 2b(a+1)x - (a+1)b) / ((a-b)x + (a+1)b)
Certificate closed_form_right_certificate(const ParameterPair& params);

/// Runs every step and records the first failure in the verdict; never throws
/// for a failing step.
ProofObject prove_identity(const ParameterPair& params, ProofMode mode, unsigned extra_n,
                           const DiscoverOptions& options = {});

/// Re-runs all checks against the content of an existing proof object.
Verdict recheck(const ProofObject& proof);

/// R(n,x) c(x) r(x)^n evaluates to 0 at x = 0 and x = 1. Throws PoleError if
/// the product has a pole at an endpoint.
bool boundary_vanishing_check(const IntegrandFamily& family, const Certificate& cert, unsigned n);

/// Values y(0..n_target) from y(0..order-1) by solving the recurrence for its
/// top term. Throws SingularRecurrenceStep when c_order(n) = 0.
std::vector<LogCombination> propagate_recurrence(const Recurrence& rec, const std::vector<LogCombination>& initial,
                                                 unsigned n_target);

/// x(u) = b(1-u)/(b+u)
RatFunc substitution_map(const ParameterPair& params);

/// F_left(n, x(u)) * (-x'(u)) == F_right(n, u) as rational functions of u.
bool verify_substitution(const IntegrandFamily& left, const IntegrandFamily& right, const RatFunc& map, unsigned n);
bool verify_substitution_proof(const ParameterPair& params, unsigned n);

}  // namespace ct
