#include "ct/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

#include "ct/errors.hpp"
#include "ct/integrand.hpp"

namespace ct {

namespace {

// Kronrod abscissae (descending) and weights; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                        0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
};

Panel make_panel(const std::function<double(double)>& f, double lo, double hi) {
    const auto gk = gauss_kronrod_15(f, lo, hi);
    return {lo, hi, gk.kronrod, std::abs(gk.kronrod - gk.gauss)};
}

}  // namespace

GaussKronrodPanel gauss_kronrod_15(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    return {kronrod * half, gauss * half};
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double tol,
                                    int max_subdivisions) {
    if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
    if (max_subdivisions < 1) throw DomainError("subdivision cap must be positive");
    auto worse = [](const Panel& l, const Panel& r) { return l.error < r.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);
    queue.push(make_panel(f, lo, hi));
    double total_error = queue.top().error;
    int panels = 1;
    while (total_error >= tol && panels < max_subdivisions) {
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Panel left = make_panel(f, worst.lo, mid);
        const Panel right = make_panel(f, mid, worst.hi);
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++panels;
    }
    // Sum in left-to-right order so the result does not depend on heap layout.
    std::vector<Panel> all;
    all.reserve(queue.size());
    while (!queue.empty()) {
        all.push_back(queue.top());
        queue.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.lo < r.lo; });
    QuadratureResult result{0.0, 0.0, panels};
    for (const auto& p : all) {
        result.value += p.value;
        result.error_estimate += p.error;
    }
    if (result.error_estimate >= tol) throw ToleranceNotMet(result.value, result.error_estimate, panels);
    return result;
}

RatFuncEvaluator::RatFuncEvaluator(const RatFunc& f) : num_(split(f.num())), den_(split(f.den())) {}

std::vector<RatFuncEvaluator::Split> RatFuncEvaluator::split(const Poly& p) {
    std::vector<Split> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        const double hi = c.to_double();
        out.push_back({hi, (c - Rational::from_double(hi)).to_double()});
    }
    return out;
}

RatFuncEvaluator::Split RatFuncEvaluator::horner(const std::vector<Split>& coeffs, double x) {
    double sh = 0.0;
    double sl = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        // (sh + sl) * x, exact product error via fma
        const double p = sh * x;
        const double pe = std::fma(sh, x, -p) + sl * x;
        // + coefficient, error-free two-sum
        const double s = p + it->hi;
        const double bb = s - p;
        const double e = (p - (s - bb)) + (it->hi - bb);
        const double lo = e + pe + it->lo;
        sh = s + lo;
        sl = lo - (sh - s);
    }
    return {sh, sl};
}

double RatFuncEvaluator::operator()(double x) const {
    const Split n = horner(num_, x);
    const Split d = horner(den_, x);
    return (n.hi + n.lo) / (d.hi + d.lo);
}

QuadratureResult quad_01(const RatFunc& f, double tol, int max_subdivisions) {
    if (!(tol >= 1e-14)) throw DomainError("quadrature tolerance must be at least 1e-14");
    if (!pole_free_on_unit_interval(f)) throw DivergentIntegralError("quadrature of a function with a pole in [0,1]");
    const RatFuncEvaluator eval(f);
    return integrate_adaptive([&](double x) { return eval(x); }, 0.0, 1.0, tol, max_subdivisions);
}

}  // namespace ct
