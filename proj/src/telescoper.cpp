#include "ct/telescoper.hpp"

#include <algorithm>
#include <optional>

#include "ct/errors.hpp"

namespace ct {

Recurrence::Recurrence(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw DomainError("recurrence needs order >= 1");
    if (coeffs_.back().is_zero()) throw DomainError("leading recurrence coefficient is the zero polynomial");
}

std::vector<Rational> Recurrence::at(long n) const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.eval(Rational(n)));
    return out;
}

int Recurrence::max_degree() const {
    int d = 0;
    for (const auto& c : coeffs_) d = std::max(d, c.degree());
    return d;
}

Rational Recurrence::normalization_factor() const {
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& c : coeffs_) {
        for (const auto& x : c.coefficients()) {
            if (x.is_zero()) continue;
            num_gcd = gcd(num_gcd, x.numerator());
            den_lcm = lcm(den_lcm, x.denominator());
        }
    }
    Rational factor(den_lcm, num_gcd);
    return coeffs_.back().leading().sign() < 0 ? -factor : factor;
}

Recurrence Recurrence::normalized() const { return scaled(normalization_factor()); }

Recurrence Recurrence::scaled(const Rational& factor) const {
    if (factor.is_zero()) throw DomainError("scaling a recurrence by zero");
    std::vector<Poly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.scaled(factor));
    return Recurrence(std::move(out));
}

namespace {

const Poly& x_times_x_minus_one() {
    static const Poly p{Rational(0), Rational(-1), Rational(1)};
    return p;
}

bool vanishes_at_endpoints(const RatFunc& part) {
    if (part.is_zero()) return true;
    if (divrem(part.num(), x_times_x_minus_one()).second.is_zero()) return true;
    try {
        return part.eval(Rational(0)).is_zero() && part.eval(Rational(1)).is_zero();
    } catch (const PoleError&) {
        return false;
    }
}

}  // namespace

Certificate::Certificate(std::vector<RatFunc> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) parts_.emplace_back();
    for (const auto& part : parts_) {
        if (!vanishes_at_endpoints(part)) {
            throw DomainError("certificate part " + part.to_string() + " does not vanish at x = 0 and x = 1");
        }
    }
}

RatFunc Certificate::at(long n) const {
    RatFunc sum;
    Rational power(1);
    for (const auto& part : parts_) {
        if (!part.is_zero()) sum += RatFunc(power) * part;
        power *= Rational(n);
    }
    return sum;
}

Certificate Certificate::scaled(const Rational& factor) const {
    std::vector<RatFunc> out;
    out.reserve(parts_.size());
    for (const auto& part : parts_) out.push_back(RatFunc(factor) * part);
    return Certificate(std::move(out));
}

bool verify_telescoping(const IntegrandFamily& family, const Recurrence& rec, const Certificate& cert, unsigned n) {
    try {
        const auto c = rec.at(static_cast<long>(n));
        RatFunc lhs;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (!c[k].is_zero()) lhs += RatFunc(c[k]) * shifted_ratio(family, static_cast<unsigned>(k));
        }
        const RatFunc r = cert.at(static_cast<long>(n));
        const RatFunc rhs = r.derivative() + r * log_derivative(family, n);
        return lhs == rhs;
    } catch (const Error&) {
        return false;
    }
}

bool verify_telescoping_all_n(const IntegrandFamily& family, const Recurrence& rec, const Certificate& cert,
                              unsigned degree_bound) {
    for (unsigned n = 0; n <= degree_bound; ++n) {
        if (!verify_telescoping(family, rec, cert, n)) return false;
    }
    return true;
}

unsigned telescoping_degree(const Recurrence& rec, const Certificate& cert) {
    return static_cast<unsigned>(std::max(rec.max_degree(), cert.n_degree() + 1));
}

namespace {

// Linear-system columns at a fixed n. Unknowns are c_0..c_order followed by
// the coefficients m_0..m_{count-1} of M in R = x(x-1) M(x) / Q(x); the
// telescoping identity reads sum_k c_k r^k - sum_j m_j (B_j' + B_j L_n) = 0
// with B_j = x(x-1) x^j / Q and L_n the logarithmic derivative of F(n, .).
class AnsatzColumns {
public:
    AnsatzColumns(const IntegrandFamily& family, int order, int m_count)
        : family_(family), order_(order), m_count_(m_count) {}

    std::size_t unknowns() const { return static_cast<std::size_t>(order_ + 1 + m_count_); }

    /// Numerators over a common denominator, one polynomial per unknown.
    std::vector<Poly> cleared(unsigned n) const {
        std::vector<RatFunc> cols;
        cols.reserve(unknowns());
        for (int k = 0; k <= order_; ++k) cols.push_back(shifted_ratio(family_, static_cast<unsigned>(k)));
        const RatFunc log_der = log_derivative(family_, n);
        const Poly& q = family_.cofactor().den();
        for (int j = 0; j < m_count_; ++j) {
            const RatFunc basis(x_times_x_minus_one() * Poly::monomial(Rational(1), j), q);
            cols.push_back(-(basis.derivative() + basis * log_der));
        }
        Poly common = Poly::constant(Rational(1));
        for (const auto& col : cols) common = divrem(common * col.den(), gcd(common, col.den())).first;
        std::vector<Poly> out;
        out.reserve(cols.size());
        for (const auto& col : cols) out.push_back(col.num() * divrem(common, col.den()).first);
        return out;
    }

private:
    const IntegrandFamily& family_;
    int order_;
    int m_count_;
};

Matrix coefficient_rows(const std::vector<Poly>& columns, int n_degree, const Rational& n) {
    int rows = 0;
    for (const auto& p : columns) rows = std::max(rows, p.degree() + 1);
    const std::size_t per_unknown = static_cast<std::size_t>(n_degree) + 1;
    Matrix m(static_cast<std::size_t>(rows), columns.size() * per_unknown);
    std::vector<Rational> n_powers(per_unknown);
    n_powers[0] = Rational(1);
    for (std::size_t e = 1; e < per_unknown; ++e) n_powers[e] = n_powers[e - 1] * n;
    for (std::size_t u = 0; u < columns.size(); ++u) {
        for (int i = 0; i <= columns[u].degree(); ++i) {
            const Rational& c = columns[u].coeff(i);
            if (c.is_zero()) continue;
            for (std::size_t e = 0; e < per_unknown; ++e) m(static_cast<std::size_t>(i), u * per_unknown + e) = c * n_powers[e];
        }
    }
    return m;
}

// Quick necessary condition: at every sample n the constant-coefficient system
// must admit a solution with some nonzero recurrence coefficient.
bool feasible_at_samples(const AnsatzColumns& ansatz, int order, unsigned samples) {
    for (unsigned n = 0; n < samples; ++n) {
        const auto basis = solve_nullspace(coefficient_rows(ansatz.cleared(n), 0, Rational(static_cast<long>(n))));
        const bool any = std::any_of(basis.begin(), basis.end(), [&](const std::vector<Rational>& v) {
            return std::any_of(v.begin(), v.begin() + order + 1, [](const Rational& x) { return !x.is_zero(); });
        });
        if (!any) return false;
    }
    return true;
}

struct Candidate {
    std::vector<Poly> polys;  // c_0..c_order, then m_0..m_{count-1}, all in n
    int total_degree = 0;
    std::vector<Rational> flat;
};

std::optional<Candidate> solve_with_n_degree(const AnsatzColumns& ansatz, int order, int n_degree) {
    Matrix system;
    const unsigned samples = static_cast<unsigned>(n_degree) + 3;
    for (unsigned n = 0; n < samples; ++n) {
        system.append_rows(coefficient_rows(ansatz.cleared(n), n_degree, Rational(static_cast<long>(n))));
    }
    const std::size_t per_unknown = static_cast<std::size_t>(n_degree) + 1;
    std::optional<Candidate> best;
    for (auto& v : solve_nullspace(system)) {
        Candidate cand;
        for (std::size_t u = 0; u < ansatz.unknowns(); ++u) {
            std::vector<Rational> coeffs(v.begin() + static_cast<long>(u * per_unknown),
                                         v.begin() + static_cast<long>((u + 1) * per_unknown));
            cand.polys.emplace_back(std::move(coeffs));
            cand.total_degree += std::max(0, cand.polys.back().degree());
        }
        if (cand.polys[static_cast<std::size_t>(order)].is_zero()) continue;
        cand.flat = std::move(v);
        if (!best || cand.total_degree < best->total_degree ||
            (cand.total_degree == best->total_degree && cand.flat < best->flat)) {
            best = std::move(cand);
        }
    }
    return best;
}

}  // namespace

Telescoper discover(const IntegrandFamily& family, int max_order, int max_cert_degree) {
    if (max_order < 1 || max_cert_degree < 1) throw DomainError("discover needs max_order >= 1 and max_cert_degree >= 1");
    const Poly& q = family.cofactor().den();
    for (int order = 1; order <= max_order; ++order) {
        for (int degree = 1; degree <= max_cert_degree; ++degree) {
            const int m_count = std::max(0, degree - 1);  // deg M <= degree - 2
            const AnsatzColumns ansatz(family, order, m_count);
            if (!feasible_at_samples(ansatz, order, static_cast<unsigned>(order) + 4)) continue;
            for (int n_degree = 0; n_degree <= 2 * order + 2; ++n_degree) {
                auto cand = solve_with_n_degree(ansatz, order, n_degree);
                if (!cand) continue;
                std::vector<Poly> rec_coeffs(cand->polys.begin(), cand->polys.begin() + order + 1);
                std::vector<RatFunc> parts;
                for (int e = 0; e <= n_degree; ++e) {
                    std::vector<Rational> m;
                    for (int j = 0; j < m_count; ++j) m.push_back(cand->polys[static_cast<std::size_t>(order + 1 + j)].coeff(e));
                    parts.emplace_back(x_times_x_minus_one() * Poly(std::move(m)), q);
                }
                while (parts.size() > 1 && parts.back().is_zero()) parts.pop_back();
                Recurrence rec(std::move(rec_coeffs));
                const Rational factor = rec.normalization_factor();
                Telescoper result{rec.scaled(factor), Certificate(std::move(parts)).scaled(factor), 0};
                result.verified_degree_bound = telescoping_degree(result.recurrence, result.certificate) + 1;
                if (verify_telescoping_all_n(family, result.recurrence, result.certificate, result.verified_degree_bound)) {
                    return result;
                }
            }
        }
    }
    throw AnsatzExhausted(max_order, max_cert_degree);
}

}  // namespace ct
