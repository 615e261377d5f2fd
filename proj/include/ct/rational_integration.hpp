#pragma once

#include <vector>

#include "ct/log_combination.hpp"
#include "ct/ratfunc.hpp"

namespace ct {

/// coefficient / (x - root)^multiplicity
struct PoleTerm {
    Rational root;
    int multiplicity = 1;
    Rational coefficient;

    friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

struct PartialFractionForm {
    Poly polynomial_part;
    /// Sorted by (root, multiplicity); zero coefficients are omitted.
    std::vector<PoleTerm> pole_terms;

    RatFunc reassemble() const;
};

/// Distinct rational roots of p with multiplicities, ascending. Throws
/// NonRationalRootError when some factor of p has no rational roots.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

/// Requires the denominator of f to split into rational linear factors.
PartialFractionForm partial_fractions(const RatFunc& f);

/// Exact value of the integral of f over [0, 1].
LogCombination integrate_01(const RatFunc& f);

}  // namespace ct
