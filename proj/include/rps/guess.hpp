#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rps/multipoly.hpp"
#include "rps/nullspace.hpp"
#include "rps/series.hpp"
#include "rps/unipoly.hpp"

namespace rps {

/*
 * Ansatz fitting by exact linear algebra. Both guessers build a linear
 * system whose kernel vectors are candidate relations, demand at least
 * `guard` more equations than unknowns, and verify every candidate on all
 * supplied terms before returning it. A returned object is evidence, not
 * proof: the evidence window is recorded on the object.
 */

// Bivariate relation Q(t, P) = 0 satisfied by the generating function
// P(t) = sum a(n) t^n to the verified order.
struct AlgebraicEquation {
    MultiPoly q{std::vector<std::string>{"t", "P"}};
    int deg_t = 0;
    int deg_p = 0;
    long verified_order = -1;
};

// Linear recurrence sum_{i=0..d} coeffs[i](n) * a(n+i) = 0 with polynomial
// coefficients, valid on the verified range of n.
struct HolonomicRecurrence {
    std::vector<UniPoly> coeffs;
    long verified_from = 0;
    long verified_to = -1;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

namespace detail {

inline TruncSeries<Rational> series_from_terms(const std::vector<Rational>& terms) {
    if (terms.empty()) throw UsageError("series_from_terms: no terms");
    return TruncSeries<Rational>::from_coeffs(static_cast<int>(terms.size()) - 1, terms,
                                              Rational());
}

// smallest-support kernel vector; ties by the canonical order of the
// highest active cell, then by basis position
inline std::size_t pick_kernel_vector(const std::vector<std::vector<Rational>>& basis,
                                      const std::vector<MultiPoly::Exponents>& cells) {
    std::size_t best = 0;
    std::size_t best_support = static_cast<std::size_t>(-1);
    MultiPoly::Exponents best_lead;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        std::size_t support = 0;
        MultiPoly::Exponents lead;
        for (std::size_t i = 0; i < basis[b].size(); ++i) {
            if (basis[b][i].is_zero()) continue;
            ++support;
            if (lead.empty() || MultiPoly::term_order(lead, cells[i])) lead = cells[i];
        }
        if (support < best_support ||
            (support == best_support && MultiPoly::term_order(lead, best_lead))) {
            best = b;
            best_support = support;
            best_lead = lead;
        }
    }
    return best;
}

} // namespace detail

// Largest M with Q(t, P(t)) = O(t^{M+1}) over the supplied terms.
inline long verify_algebraic(const AlgebraicEquation& eq, const std::vector<Rational>& terms) {
    if (terms.empty()) return -1;
    const int order = static_cast<int>(terms.size()) - 1;
    TruncSeries<Rational> p = detail::series_from_terms(terms);

    std::vector<std::vector<Rational>> q_by_p(static_cast<std::size_t>(eq.deg_p) + 1);
    for (const auto& [e, c] : eq.q.terms()) {
        auto& row = q_by_p[static_cast<std::size_t>(e[1])];
        if (row.size() <= static_cast<std::size_t>(e[0]))
            row.resize(static_cast<std::size_t>(e[0]) + 1);
        row[static_cast<std::size_t>(e[0])] = c;
    }

    TruncSeries<Rational> acc =
        TruncSeries<Rational>::from_coeffs(order, q_by_p.back(), Rational());
    for (std::size_t j = q_by_p.size() - 1; j-- > 0;)
        acc = acc * p + TruncSeries<Rational>::from_coeffs(order, q_by_p[j], Rational());

    for (int n = 0; n <= order; ++n)
        if (!acc.coeff(n).is_zero()) return n - 1;
    return order;
}

// Fit Q(t, P) with deg_t(Q) <= deg_t, deg_p(Q) <= deg_p from the t-coefficient
// matrix of the monomials t^i P^j. Returns the canonical minimal-support
// kernel relation, or nothing when the kernel is trivial.
inline std::optional<AlgebraicEquation> guess_algebraic(const std::vector<Rational>& terms,
                                                        int deg_t, int deg_p, int guard = 10) {
    if (deg_t < 0 || deg_p < 1)
        throw UsageError("guess_algebraic: require deg_t >= 0 and deg_p >= 1");
    if (guard < 0) throw UsageError("guess_algebraic: negative guard");
    const long needed = static_cast<long>(deg_t + 1) * (deg_p + 1) + guard;
    const long have = static_cast<long>(terms.size());
    if (needed > have)
        throw UsageError("guess_algebraic: insufficient terms, need " + std::to_string(needed) +
                         " but got " + std::to_string(have));

    const int order = static_cast<int>(terms.size()) - 1;
    TruncSeries<Rational> p = detail::series_from_terms(terms);
    std::vector<TruncSeries<Rational>> powers;
    powers.push_back(TruncSeries<Rational>::from_coeffs(order, {Rational(1)}, Rational()));
    for (int j = 1; j <= deg_p; ++j) powers.push_back(powers.back() * p);

    std::vector<MultiPoly::Exponents> cells;
    for (int i = 0; i <= deg_t; ++i)
        for (int j = 0; j <= deg_p; ++j) cells.push_back({i, j});

    std::vector<std::vector<Rational>> m(terms.size(), std::vector<Rational>(cells.size()));
    for (std::size_t col = 0; col < cells.size(); ++col) {
        const int i = cells[col][0], j = cells[col][1];
        for (int n = i; n <= order; ++n)
            m[static_cast<std::size_t>(n)][col] = powers[static_cast<std::size_t>(j)].coeff(n - i);
    }

    auto basis = nullspace(m, cells.size());
    if (basis.empty()) return std::nullopt;

    const auto& v = basis[detail::pick_kernel_vector(basis, cells)];
    std::vector<std::string> vars{"t", "P"};
    MultiPoly q(vars);
    for (std::size_t i = 0; i < cells.size(); ++i) q.add_term(cells[i], v[i]);
    if (q.degree_in(1) < 1) return std::nullopt; // a pure t-polynomial relation is no equation

    // primitive; sign fixed by the lowest t-term of the top P-coefficient
    Integer den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : q.terms()) den_lcm = lcm(den_lcm, c.denominator());
    for (const auto& [e, c] : q.terms())
        num_gcd = gcd(num_gcd, c.numerator() * (den_lcm / c.denominator()));
    Rational scale(den_lcm, num_gcd);
    const int top_p = q.degree_in(1);
    const Rational* sign_ref = nullptr;
    int best_t = -1;
    for (const auto& [e, c] : q.terms())
        if (e[1] == top_p && (best_t < 0 || e[0] < best_t)) {
            best_t = e[0];
            sign_ref = &c;
        }
    if (sign_ref && (*sign_ref * scale).sign() < 0) scale = -scale;
    q = q * scale;

    AlgebraicEquation eq;
    eq.q = q;
    eq.deg_t = q.degree_in(0);
    eq.deg_p = q.degree_in(1);
    eq.verified_order = verify_algebraic(eq, terms);
    if (eq.verified_order < order) return std::nullopt; // kernel vector must fit everything
    return eq;
}

// Schedule over (deg_t, deg_p) cells by increasing total degree, ties to the
// smaller deg_p; cells that do not fit the term budget are skipped.
inline std::optional<AlgebraicEquation> guess_algebraic_auto(const std::vector<Rational>& terms,
                                                             int max_deg_t, int max_deg_p,
                                                             int guard = 10) {
    const long have = static_cast<long>(terms.size());
    for (int total = 1; total <= max_deg_t + max_deg_p; ++total)
        for (int dp = 1; dp <= total; ++dp) {
            int dt = total - dp;
            if (dt > max_deg_t || dp > max_deg_p) continue;
            if (static_cast<long>(dt + 1) * (dp + 1) + guard > have) continue;
            if (auto eq = guess_algebraic(terms, dt, dp, guard)) return eq;
        }
    return std::nullopt;
}

// Largest n-range [0, n_max] on which the recurrence annihilates the terms.
inline std::pair<long, long> verify_recurrence(const HolonomicRecurrence& rec,
                                               const std::vector<Rational>& terms) {
    const int d = rec.order();
    long n_max = -1;
    for (long n = 0; n + d < static_cast<long>(terms.size()); ++n) {
        Rational s;
        for (int i = 0; i <= d; ++i)
            s += rec.coeffs[static_cast<std::size_t>(i)].eval(Rational(n)) *
                 terms[static_cast<std::size_t>(n + i)];
        if (!s.is_zero()) break;
        n_max = n;
    }
    return {0, n_max};
}

// Search (order, degree) pairs by increasing order+degree (ties to the
// smaller order) for a polynomial-coefficient recurrence fitting all terms.
inline std::optional<HolonomicRecurrence> guess_recurrence(const std::vector<Rational>& terms,
                                                           int max_order, int max_degree,
                                                           int guard = 10) {
    if (max_order < 1) throw UsageError("guess_recurrence: require max_order >= 1");
    if (max_degree < 0 || guard < 0) throw UsageError("guess_recurrence: negative budget");
    const long have = static_cast<long>(terms.size());
    const long min_needed = 2 + 1 + guard; // the (order 1, degree 0) cell
    if (min_needed > have)
        throw UsageError("guess_recurrence: insufficient terms, need " +
                         std::to_string(min_needed) + " but got " + std::to_string(have));

    for (int total = 1; total <= max_order + max_degree; ++total) {
        for (int order = 1; order <= total; ++order) {
            const int degree = total - order;
            if (order > max_order || degree > max_degree) continue;
            const long unknowns = static_cast<long>(order + 1) * (degree + 1);
            const long rows = have - order;
            if (unknowns + guard > rows) continue;

            std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows));
            for (long n = 0; n < rows; ++n) {
                auto& row = m[static_cast<std::size_t>(n)];
                row.reserve(static_cast<std::size_t>(unknowns));
                std::vector<Rational> npow(static_cast<std::size_t>(degree) + 1);
                npow[0] = Rational(1);
                for (int dd = 1; dd <= degree; ++dd)
                    npow[static_cast<std::size_t>(dd)] =
                        npow[static_cast<std::size_t>(dd - 1)] * Rational(n);
                for (int i = 0; i <= order; ++i)
                    for (int dd = 0; dd <= degree; ++dd)
                        row.push_back(npow[static_cast<std::size_t>(dd)] *
                                      terms[static_cast<std::size_t>(n + i)]);
            }

            auto basis = nullspace(m, static_cast<std::size_t>(unknowns));
            std::optional<HolonomicRecurrence> best;
            std::size_t best_support = static_cast<std::size_t>(-1);
            for (const auto& v : basis) {
                HolonomicRecurrence rec;
                rec.coeffs.reserve(static_cast<std::size_t>(order) + 1);
                for (int i = 0; i <= order; ++i) {
                    std::vector<Rational> c(v.begin() + i * (degree + 1),
                                            v.begin() + (i + 1) * (degree + 1));
                    rec.coeffs.emplace_back(std::move(c), "n");
                }
                if (rec.coeffs.back().is_zero()) continue; // really a lower-order relation
                std::size_t support = 0;
                for (const auto& x : v)
                    if (!x.is_zero()) ++support;
                if (support >= best_support) continue;
                auto [from, to] = verify_recurrence(rec, terms);
                if (to < have - 1 - order) continue; // must hold on every supplied term
                rec.verified_from = from;
                rec.verified_to = to;
                best = std::move(rec);
                best_support = support;
            }
            if (best) {
                normalize_poly_list(best->coeffs, best->coeffs.size() - 1);
                return best;
            }
        }
    }
    return std::nullopt;
}

} // namespace rps
