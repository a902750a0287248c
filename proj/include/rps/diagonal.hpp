#pragma once

#include <vector>

#include "rps/cluster.hpp"
#include "rps/laurent.hpp"
#include "rps/series.hpp"

namespace rps {

// t-expansion of the weight enumerator after substituting z_i -> s^{c_i}:
// the coefficient of t^n is a Laurent polynomial in s, and the coefficient
// of s^r inside it is a(n).
struct DiagonalSeries {
    InstanceSpec spec;
    int order = 0;
    std::vector<LaurentPoly> laurent_coeffs; // coefficient of t^n, n = 0..order
    std::vector<Rational> extracted;         // coefficient of s^target per t-degree
};

namespace detail {

// Substitute z_i -> s^{weights[i]} in a polynomial over (t, z_1..z_s),
// returning dense t-coefficients as Laurent polynomials in s.
inline std::vector<LaurentPoly> t_coefficients_after_substitution(const MultiPoly& p,
                                                                  const std::vector<long>& weights,
                                                                  int order) {
    std::vector<LaurentPoly> out(static_cast<std::size_t>(order) + 1);
    for (const auto& [e, c] : p.terms()) {
        const int td = e[0];
        if (td > order) continue;
        long s_exp = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            s_exp += weights[i] * e[i + 1];
        out[static_cast<std::size_t>(td)] =
            out[static_cast<std::size_t>(td)] +
            LaurentPoly::monomial(static_cast<int>(s_exp), c);
    }
    return out;
}

} // namespace detail

// Expansion with explicit substitution exponents and extraction target
// (normally the spec's weights and target).
inline DiagonalSeries expand_diagonal_with(const WeightEnumerator& F,
                                           const std::vector<long>& weights,
                                           long target, int N) {
    if (N < 0) throw UsageError("expand_diagonal: negative order");
    if (weights.size() != F.spec.pattern_count())
        throw UsageError("expand_diagonal: one exponent per pattern variable required");
    const LaurentPoly zero;

    auto num = TruncSeries<LaurentPoly>::from_coeffs(
        N, detail::t_coefficients_after_substitution(F.value.num, weights, N), zero);
    auto den = TruncSeries<LaurentPoly>::from_coeffs(
        N, detail::t_coefficients_after_substitution(F.value.den, weights, N), zero);

    TruncSeries<LaurentPoly> expansion = num * den.invert();

    DiagonalSeries result;
    result.spec = F.spec;
    result.order = N;
    result.laurent_coeffs.reserve(static_cast<std::size_t>(N) + 1);
    result.extracted.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        const LaurentPoly& ln = expansion.coeff(n);
        result.laurent_coeffs.push_back(ln);
        result.extracted.push_back(ln.coeff(static_cast<int>(target)));
    }
    return result;
}

inline DiagonalSeries expand_diagonal(const WeightEnumerator& F, int N) {
    return expand_diagonal_with(F, F.spec.weights, F.spec.target, N);
}

} // namespace rps
