#include "ct/prover.hpp"

#include <algorithm>

#include "ct/errors.hpp"
#include "ct/rational_integration.hpp"

namespace ct {

namespace {

const Rational kOne(1);

Poly x_times_x_minus_one() { return Poly{Rational(0), Rational(-1), Rational(1)}; }

// Thrown internally to abort the pipeline with a named step.
struct StepFailure {
    std::string reason;
};

template <typename Fn>
auto step(const std::string& name, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw StepFailure{name + ": " + e.what()};
    }
}

void require(bool ok, const std::string& reason) {
    if (!ok) throw StepFailure{reason};
}

bool certificate_pole_free(const Certificate& cert) {
    return std::all_of(cert.parts().begin(), cert.parts().end(),
                       [](const RatFunc& part) { return pole_free_on_unit_interval(part); });
}

// Telescoping, boundary terms and pole-freeness of one side.
void check_side(const std::string& side, const IntegrandFamily& family, const Recurrence& rec, const Certificate& cert,
                unsigned degree_bound) {
    require(verify_telescoping_all_n(family, rec, cert, degree_bound),
            "telescoping identity (" + side + ") fails for some n <= " + std::to_string(degree_bound));
    require(certificate_pole_free(cert), "certificate (" + side + ") has a pole in [0,1]");
    for (unsigned n = 0; n <= degree_bound; ++n) {
        const bool vanishes = step("boundary terms (" + side + ")", [&] { return boundary_vanishing_check(family, cert, n); });
        require(vanishes, "boundary terms (" + side + ") do not vanish at n = " + std::to_string(n));
    }
}

ValuePair direct_values(const IntegrandFamily& left, const IntegrandFamily& right, unsigned n) {
    return {n, integrate_01(left.at(n)), integrate_01(right.at(n))};
}

unsigned substitution_checks(unsigned extra_n) { return std::max(1U, extra_n); }

}  // namespace

Recurrence closed_form_recurrence(const ParameterPair& params) {
    const Rational& a = params.a();
    const Rational& b = params.b();
    const Rational k = Rational(2) * a * b + a + b;
    const Rational d2 = (a - b) * (a - b);
    return Recurrence({Poly{Rational(1), Rational(1)}, Poly{Rational(-3) * k, Rational(-2) * k},
                       Poly{Rational(2) * d2, d2}});
}

Certificate closed_form_left_certificate(const ParameterPair& params) {
    const Rational& a = params.a();
    const Rational& b = params.b();
    const Poly m{-(a * b), Rational(2) * a * b, a + b + kOne};
    const Poly q = Poly{a, kOne} * Poly{b, kOne};
    return Certificate({RatFunc(x_times_x_minus_one() * m, q)});
}

Certificate closed_form_right_certificate(const ParameterPair& params) {
    const Rational& a = params.a();
    const Rational& b = params.b();
    const Rational ab1 = (a + kOne) * b;
    const Poly m{-ab1, Rational(2) * ab1, a - b};
    // Denominator (a-b)x + (a+1)b: the identity fails with the opposite sign on (a+1)b.
    const Poly q{ab1, a - b};
    return Certificate({RatFunc(x_times_x_minus_one() * m, q)});
}

bool boundary_vanishing_check(const IntegrandFamily& family, const Certificate& cert, unsigned n) {
    const RatFunc product = cert.at(static_cast<long>(n)) * family.at(n);
    return product.eval(Rational(0)).is_zero() && product.eval(Rational(1)).is_zero();
}

std::vector<LogCombination> propagate_recurrence(const Recurrence& rec, const std::vector<LogCombination>& initial,
                                                 unsigned n_target) {
    const auto order = static_cast<std::size_t>(rec.order());
    if (initial.size() != order) {
        throw DomainError("propagate_recurrence needs " + std::to_string(order) + " initial values");
    }
    std::vector<LogCombination> values = initial;
    for (long n = 0; values.size() <= n_target; ++n) {
        const auto c = rec.at(n);
        if (c[order].is_zero()) {
            throw SingularRecurrenceStep("singular recurrence step: leading coefficient vanishes at n = " +
                                         std::to_string(n));
        }
        LogCombination acc;
        for (std::size_t k = 0; k < order; ++k) acc -= values[static_cast<std::size_t>(n) + k].scaled(c[k]);
        values.push_back(acc.scaled(c[order].inverse()));
    }
    values.resize(std::min<std::size_t>(values.size(), n_target + 1));
    return values;
}

RatFunc substitution_map(const ParameterPair& params) {
    const Rational& b = params.b();
    return RatFunc(Poly{b, -b}, Poly{b, kOne});
}

bool verify_substitution(const IntegrandFamily& left, const IntegrandFamily& right, const RatFunc& map, unsigned n) {
    try {
        const RatFunc pulled_back = left.at(n).compose(map) * (-map.derivative());
        return pulled_back == right.at(n);
    } catch (const Error&) {
        return false;
    }
}

bool verify_substitution_proof(const ParameterPair& params, unsigned n) {
    return verify_substitution(make_left_family(params), make_right_family(params), substitution_map(params), n);
}

ProofObject prove_identity(const ParameterPair& params, ProofMode mode, unsigned extra_n, const DiscoverOptions& options) {
    ProofObject proof(params, mode);
    try {
        require(params.a() != params.b(), "degenerate: leading recurrence coefficient (a-b)^2 vanishes");
        require(params.valid(), "invalid parameters: requires a > b > 0");

        proof.left_family = step("left integrand", [&] { return make_left_family(params); });
        proof.right_family = step("right integrand", [&] { return make_right_family(params); });
        const IntegrandFamily& left = *proof.left_family;
        const IntegrandFamily& right = *proof.right_family;

        if (mode == ProofMode::verify_closed_form) {
            proof.recurrence = step("recurrence", [&] { return closed_form_recurrence(params); });
            proof.left_certificate = step("left certificate", [&] { return closed_form_left_certificate(params); });
            proof.right_certificate = step("right certificate", [&] { return closed_form_right_certificate(params); });
        } else {
            auto left_t = step("discover (left)", [&] { return discover(left, options.max_order, options.max_cert_degree); });
            auto right_t = step("discover (right)", [&] { return discover(right, options.max_order, options.max_cert_degree); });
            proof.recurrence = left_t.recurrence;
            proof.left_certificate = left_t.certificate;
            proof.right_certificate = right_t.certificate;
            require(left_t.recurrence == right_t.recurrence, "discovered recurrences differ between the two sides");
        }
        const Recurrence& rec = *proof.recurrence;

        proof.degree_bound = std::max(telescoping_degree(rec, *proof.left_certificate),
                                      telescoping_degree(rec, *proof.right_certificate)) +
                             1;
        check_side("left", left, rec, *proof.left_certificate, proof.degree_bound);
        check_side("right", right, rec, *proof.right_certificate, proof.degree_bound);

        for (unsigned n = 0; n < static_cast<unsigned>(rec.order()); ++n) {
            proof.base_cases.push_back(step("base case", [&] { return direct_values(left, right, n); }));
            require(proof.base_cases.back().left == proof.base_cases.back().right,
                    "base case n = " + std::to_string(n) + ": left and right values differ");
        }
        for (unsigned n = 0; n <= extra_n; ++n) {
            proof.extra_checks.push_back(step("direct comparison", [&] { return direct_values(left, right, n); }));
            require(proof.extra_checks.back().left == proof.extra_checks.back().right,
                    "direct comparison n = " + std::to_string(n) + ": left and right values differ");
        }

        proof.substitution_check = true;
        for (unsigned n = 0; n <= substitution_checks(extra_n); ++n) {
            if (!verify_substitution(left, right, substitution_map(params), n)) proof.substitution_check = false;
        }
        require(proof.substitution_check, "substitution x = b(1-u)/(b+u) does not map the left integrand to the right");
        proof.verdict = Verdict::success();
    } catch (const StepFailure& failure) {
        proof.verdict = Verdict::failure(failure.reason);
    }
    return proof;
}

Verdict recheck(const ProofObject& proof) {
    try {
        const ParameterPair& params = proof.params;
        require(params.a() != params.b(), "degenerate: leading recurrence coefficient (a-b)^2 vanishes");
        require(params.valid(), "invalid parameters: requires a > b > 0");
        require(proof.left_family && proof.right_family && proof.recurrence && proof.left_certificate &&
                    proof.right_certificate,
                "incomplete proof object");
        require(*proof.left_family == make_left_family(params), "left integrand does not match the parameters");
        require(*proof.right_family == make_right_family(params), "right integrand does not match the parameters");
        const Recurrence& rec = *proof.recurrence;
        const unsigned needed = std::max(telescoping_degree(rec, *proof.left_certificate),
                                         telescoping_degree(rec, *proof.right_certificate));
        require(proof.degree_bound > needed, "recorded degree bound is too small to cover every n");
        check_side("left", *proof.left_family, rec, *proof.left_certificate, proof.degree_bound);
        check_side("right", *proof.right_family, rec, *proof.right_certificate, proof.degree_bound);

        require(proof.base_cases.size() == static_cast<std::size_t>(rec.order()), "base cases do not match the order");
        for (std::size_t i = 0; i < proof.base_cases.size(); ++i) {
            const ValuePair& recorded = proof.base_cases[i];
            require(recorded.n == i, "base cases out of order");
            const ValuePair fresh =
                step("base case", [&] { return direct_values(*proof.left_family, *proof.right_family, recorded.n); });
            require(fresh == recorded && fresh.left == fresh.right,
                    "base case n = " + std::to_string(recorded.n) + " does not re-check");
        }
        for (const ValuePair& recorded : proof.extra_checks) {
            const ValuePair fresh =
                step("direct comparison", [&] { return direct_values(*proof.left_family, *proof.right_family, recorded.n); });
            require(fresh == recorded && fresh.left == fresh.right,
                    "direct comparison n = " + std::to_string(recorded.n) + " does not re-check");
        }
        bool substitution = true;
        for (unsigned n = 0; n <= substitution_checks(proof.n_checked() > 0 ? proof.n_checked() - 1 : 0); ++n) {
            substitution = substitution && verify_substitution_proof(params, n);
        }
        require(substitution && proof.substitution_check, "substitution check does not re-check");
        return Verdict::success();
    } catch (const StepFailure& failure) {
        return Verdict::failure(failure.reason);
    }
}

}  // namespace ct
