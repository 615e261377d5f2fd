#pragma once

#include <functional>
#include <vector>

#include "ct/ratfunc.hpp"

namespace ct {

inline constexpr int kDefaultSubdivisionCap = 10'000;

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

/// 15-point Kronrod value and the embedded 7-point Gauss value on one panel.
struct GaussKronrodPanel {
    double kronrod = 0.0;
    double gauss = 0.0;
};

GaussKronrodPanel gauss_kronrod_15(const std::function<double(double)>& f, double lo, double hi);

/// Adaptive bisection of the panel with the largest |kronrod - gauss| until
/// the summed estimate drops below tol. Throws ToleranceNotMet at the cap.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double tol,
                                    int max_subdivisions = kDefaultSubdivisionCap);

/// Evaluates a rational function in double-double arithmetic, so that
/// cancellation between large alternating coefficients does not leak into the
/// double result.
class RatFuncEvaluator {
public:
    explicit RatFuncEvaluator(const RatFunc& f);
    double operator()(double x) const;

private:
    struct Split {
        double hi;
        double lo;
    };
    static std::vector<Split> split(const Poly& p);
    static Split horner(const std::vector<Split>& coeffs, double x);

    std::vector<Split> num_;
    std::vector<Split> den_;
};

/// Requires tol >= 1e-14 and f pole-free on [0, 1].
QuadratureResult quad_01(const RatFunc& f, double tol, int max_subdivisions = kDefaultSubdivisionCap);

}  // namespace ct
