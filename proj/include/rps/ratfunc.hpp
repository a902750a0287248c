#pragma once

#include <utility>

#include "rps/multipoly.hpp"

namespace rps {

// Ratio of multivariate polynomials, normalized on construction so the
// denominator's constant term is exactly 1 (a nonzero constant term is
// required for series expansion).
struct RatFunc {
    MultiPoly num, den;

    RatFunc(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {
        if (num.vars() != den.vars()) throw UsageError("RatFunc: mismatched indeterminates");
        if (den.is_zero()) throw UsageError("RatFunc: zero denominator");
        Rational c0 = den.constant_term();
        if (c0.is_zero())
            throw SingularExpansionError("RatFunc: denominator constant term is zero");
        if (!c0.is_one()) {
            Rational inv = Rational(1) / c0;
            num = num * inv;
            den = den * inv;
        }
    }

    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
};

} // namespace rps
