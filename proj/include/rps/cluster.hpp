#pragma once

#include <string>
#include <vector>

#include "rps/ratfunc.hpp"
#include "rps/word.hpp"

namespace rps {

/*
 * Cluster-method weight enumerator.
 *
 * F(t; z_1..z_s) sums t^len(w) * prod_i z_i^#occ(p_i, w) over all words w.
 * Writing C_u for the generating function of clusters whose last marked
 * occurrence is pattern u, the C_u solve the linear system
 *
 *   C_u = (z_u - 1) * ( t^{|p_u|} + sum_v sum_{l in O(v,u)} t^{|p_u|-l} C_v )
 *
 * where O(v,u) holds the lengths l (1 <= l < |p_u|, l <= |p_v|) at which a
 * suffix of p_v equals a prefix of p_u, and then
 *
 *   F = 1 / (1 - m t - sum_u C_u).
 *
 * The system is solved by Cramer's rule over polynomials in (t, z); the
 * pattern count stays small so cofactor determinants are fine. Patterns
 * must not contain one another as factors.
 */

// Overlap lengths: suffix of pv of length l equals prefix of pu.
inline std::vector<int> overlap_lengths(const Word& pv, const Word& pu) {
    if (pv.empty() || pu.empty()) throw UsageError("overlap_lengths: empty pattern");
    std::vector<int> out;
    const int max_l = std::min(static_cast<int>(pv.size()),
                               static_cast<int>(pu.size()) - 1);
    for (int l = 1; l <= max_l; ++l) {
        bool eq = true;
        for (int i = 0; i < l; ++i)
            if (pv.letters[pv.size() - static_cast<std::size_t>(l) + static_cast<std::size_t>(i)] !=
                pu.letters[static_cast<std::size_t>(i)]) {
                eq = false;
                break;
            }
        if (eq) out.push_back(l);
    }
    return out;
}

struct WeightEnumerator {
    RatFunc value;
    InstanceSpec spec;
};

namespace detail {

inline MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    MultiPoly result(a[0][0].vars());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][0].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<MultiPoly> row(a[r].begin() + 1, a[r].end());
            minor.push_back(std::move(row));
        }
        MultiPoly term = a[i][0] * poly_det(minor);
        result = (i % 2 == 0) ? result + term : result - term;
    }
    return result;
}

} // namespace detail

inline WeightEnumerator build_enumerator(const InstanceSpec& spec) {
    spec.validate();
    const std::size_t s = spec.patterns.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            if (i == j) continue;
            if (is_factor(spec.patterns[i], spec.patterns[j]))
                throw UnsupportedInstanceError(
                    "build_enumerator: pattern '" + spec.patterns[i].str() +
                    "' is a factor of pattern '" + spec.patterns[j].str() + "'");
        }

    std::vector<std::string> vars;
    vars.push_back("t");
    for (std::size_t i = 1; i <= s; ++i) vars.push_back("z" + std::to_string(i));

    auto t_pow = [&](int e) {
        MultiPoly::Exponents ex(vars.size(), 0);
        ex[0] = e;
        return MultiPoly::monomial(vars, ex, Rational(1));
    };
    auto z_minus_one = [&](std::size_t u) {
        MultiPoly p = MultiPoly::variable(vars, u + 1);
        return p - MultiPoly::constant(vars, Rational(1));
    };

    // system matrix rows u: C_u - (z_u - 1) sum_v T(v,u) C_v = (z_u - 1) t^{|p_u|}
    std::vector<std::vector<MultiPoly>> M(s, std::vector<MultiPoly>(s, MultiPoly(vars)));
    std::vector<MultiPoly> rhs(s, MultiPoly(vars));
    for (std::size_t u = 0; u < s; ++u) {
        const int len_u = static_cast<int>(spec.patterns[u].size());
        rhs[u] = z_minus_one(u) * t_pow(len_u);
        for (std::size_t v = 0; v < s; ++v) {
            MultiPoly overlap_sum(vars);
            for (int l : overlap_lengths(spec.patterns[v], spec.patterns[u]))
                overlap_sum = overlap_sum + t_pow(len_u - l);
            M[u][v] = ((u == v) ? MultiPoly::constant(vars, Rational(1)) : MultiPoly(vars)) -
                      z_minus_one(u) * overlap_sum;
        }
    }

    MultiPoly det_m = detail::poly_det(M);
    MultiPoly cluster_num(vars); // sum_u det(M with column u replaced by rhs)
    for (std::size_t u = 0; u < s; ++u) {
        auto mu = M;
        for (std::size_t row = 0; row < s; ++row) mu[row][u] = rhs[row];
        cluster_num = cluster_num + detail::poly_det(mu);
    }

    MultiPoly one = MultiPoly::constant(vars, Rational(1));
    MultiPoly mt = MultiPoly::constant(vars, Rational(static_cast<long>(spec.alphabet_size))) * t_pow(1);
    MultiPoly denominator = (one - mt) * det_m - cluster_num;
    return WeightEnumerator{RatFunc(det_m, denominator), spec};
}

} // namespace rps
