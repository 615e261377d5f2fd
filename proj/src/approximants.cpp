#include "ct/approximants.hpp"

#include <cmath>
#include <sstream>

#include "ct/errors.hpp"
#include "ct/prover.hpp"
#include "ct/rational_integration.hpp"

namespace ct {

LogCombination target_constant(const ParameterPair& params) {
    const Rational& a = params.a();
    const Rational& b = params.b();
    return LogCombination::log_of(Rational(1) + (a - b) / ((a + Rational(1)) * b));
}

std::pair<Rational, Rational> decompose_against(const LogCombination& value, const LogCombination& lambda) {
    if (lambda.terms().empty()) throw DomainError("reference logarithm has no log terms");
    const auto& [prime, lambda_coeff] = *lambda.terms().begin();
    const auto it = value.terms().find(prime);
    const Rational p = it == value.terms().end() ? Rational(0) : it->second / lambda_coeff;
    if (value.terms() != lambda.scaled(p).terms()) {
        throw DomainError("value " + value.to_string() + " is not in the span of {1, " + lambda.to_string() + "}");
    }
    return {p, -value.constant()};
}

std::vector<ApproximantRow> approximant_table(const ParameterPair& params, unsigned n_max, long precision_bits) {
    const LogCombination lambda = target_constant(params);
    const IntegrandFamily right = make_right_family(params);
    const auto values =
        propagate_recurrence(closed_form_recurrence(params), {integrate_01(right.at(0)), integrate_01(right.at(1))}, n_max);
    std::vector<ApproximantRow> rows;
    rows.reserve(values.size());
    for (unsigned n = 0; n < values.size(); ++n) {
        auto [p, q] = decompose_against(values[n], lambda);
        if (p.is_zero()) throw DomainError("approximant denominator vanishes at n = " + std::to_string(n));
        const Rational ratio = q / p;
        ApproximantRow row{n, p, q, BigFloat(ratio, precision_bits), BigFloat(precision_bits), BigFloat(precision_bits)};
        // Lambda - q/p is evaluated exactly before rounding, so the tiny
        // errors are not lost to cancellation.
        row.abs_error = (lambda - LogCombination(ratio)).to_float(precision_bits).abs();
        const BigFloat log_p = BigFloat::log(BigFloat(p.abs(), precision_bits));
        row.empirical_exponent = BigFloat(1.0, precision_bits) + log_p / (-BigFloat::log(row.abs_error));
        rows.push_back(std::move(row));
    }
    return rows;
}

BigFloat decay_rate_estimate(std::span<const ApproximantRow> rows) {
    if (rows.size() < 5) throw DomainError("decay rate estimate needs at least 5 rows");
    const std::size_t start = rows.size() / 2;
    const long precision = rows.back().abs_error.precision();
    BigFloat log_sum(precision);
    for (std::size_t i = start; i + 1 < rows.size(); ++i) {
        log_sum += BigFloat::log(rows[i + 1].abs_error / rows[i].abs_error);
    }
    const auto steps = static_cast<long>(rows.size() - 1 - start);
    return BigFloat::exp(log_sum / BigFloat(static_cast<double>(steps), precision));
}

int decimal_digits(long precision_bits) {
    return static_cast<int>(std::floor(static_cast<double>(precision_bits) * std::log10(2.0)));
}

std::string approximants_csv(std::span<const ApproximantRow> rows, long precision_bits) {
    const int digits = decimal_digits(precision_bits);
    std::ostringstream os;
    os << "n,p,q,value,abs_error,empirical_exponent\n";
    for (const auto& row : rows) {
        os << row.n << ',' << row.p << ',' << row.q << ',' << row.value.to_scientific(digits) << ','
           << row.abs_error.to_scientific(digits) << ',' << row.empirical_exponent.to_scientific(digits) << '\n';
    }
    return os.str();
}

std::string error_data(std::span<const ApproximantRow> rows, long precision_bits) {
    const int digits = decimal_digits(precision_bits);
    std::ostringstream os;
    os << "# n abs_error\n";
    for (const auto& row : rows) os << row.n << ' ' << row.abs_error.to_scientific(digits) << '\n';
    return os.str();
}

}  // namespace ct
