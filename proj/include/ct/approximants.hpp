#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ct/bigfloat.hpp"
#include "ct/integrand.hpp"
#include "ct/log_combination.hpp"

namespace ct {

/// R(n) = p * Lambda - q, Lambda = log(1 + (a-b)/((a+1)b)).
struct ApproximantRow {
    unsigned n = 0;
    Rational p;
    Rational q;
    BigFloat value;               // q/p
    BigFloat abs_error;           // |Lambda - q/p|
    BigFloat empirical_exponent;  // 1 + ln|p| / (-ln abs_error)
};

/// log(1 + (a-b)/((a+1)b)) in canonical form.
LogCombination target_constant(const ParameterPair& params);

/// (p, q) with value = p * lambda - q. Throws DomainError if value is not in
/// the Q-span of {1, lambda}.
std::pair<Rational, Rational> decompose_against(const LogCombination& value, const LogCombination& lambda);

/// Rows for n = 0..n_max from exact propagation of the right-hand integrals.
std::vector<ApproximantRow> approximant_table(const ParameterPair& params, unsigned n_max, long precision_bits);

/// Geometric mean of abs_error[n+1]/abs_error[n] over the last half of the
/// rows. Needs at least 5 rows.
BigFloat decay_rate_estimate(std::span<const ApproximantRow> rows);

/// Significant decimal digits printed for a given binary precision.
int decimal_digits(long precision_bits);

/// n,p,q,value,abs_error,empirical_exponent
std::string approximants_csv(std::span<const ApproximantRow> rows, long precision_bits);

/// Two columns "n abs_error", gnuplot-compatible.
std::string error_data(std::span<const ApproximantRow> rows, long precision_bits);

}  // namespace ct
