#pragma once

#include <map>
#include <vector>

#include "rps/guess.hpp"
#include "rps/unipoly.hpp"

namespace rps {

// Linear differential operator with polynomial coefficients, applied as
// sum_i coeffs[i](t) * P^(i)(t) = inhom(t).
struct LinearODE {
    std::vector<UniPoly> coeffs;
    UniPoly inhom{"t"};

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

namespace detail {

// Polynomials in P over the rational-function field Q(t); index = P-power.
using PPoly = std::vector<UniRat>;

inline void ptrim(PPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline PPoly padd(PPoly a, const PPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
    ptrim(a);
    return a;
}

inline PPoly pmul(const PPoly& a, const PPoly& b) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    ptrim(r);
    return r;
}

inline PPoly pneg(PPoly a) {
    for (auto& x : a) x = -x;
    return a;
}

inline PPoly reduce_mod(PPoly a, const PPoly& q) {
    ptrim(a);
    while (a.size() >= q.size()) {
        UniRat f = a.back() / q.back();
        const std::size_t shift = a.size() - q.size();
        for (std::size_t i = 0; i < q.size(); ++i)
            a[shift + i] = a[shift + i] - f * q[i];
        a.pop_back();
        ptrim(a);
    }
    return a;
}

// Inverse of u modulo q over Q(t) by extended Euclid; a nontrivial gcd
// means q has a repeated-root factor shared with u.
inline PPoly ext_invert(const PPoly& u, const PPoly& q) {
    PPoly r0 = q, r1 = u;
    ptrim(r0);
    ptrim(r1);
    PPoly s0, s1{UniRat(UniPoly::constant(Rational(1), "t"))}; // cofactors of u
    while (!r1.empty() && r1.size() > 1) {
        // r0 = qq * r1 + r2
        PPoly r2 = r0, qq;
        while (r2.size() >= r1.size()) {
            UniRat f = r2.back() / r1.back();
            std::size_t shift = r2.size() - r1.size();
            if (qq.size() <= shift) qq.resize(shift + 1);
            qq[shift] = qq[shift] + f;
            for (std::size_t i = 0; i < r1.size(); ++i)
                r2[shift + i] = r2[shift + i] - f * r1[i];
            r2.pop_back();
            ptrim(r2);
        }
        PPoly s2 = padd(s0, pneg(pmul(qq, s1)));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty())
        throw UsageError(
            "algebraic_to_ode: the equation is not square-free; "
            "apply square-free reduction to Q first");
    // r1 is a nonzero field constant: s1 * u = r1 (mod q)
    UniRat inv_c = UniRat(UniPoly::constant(Rational(1), "t")) / r1[0];
    PPoly out = s1;
    for (auto& x : out) x = x * inv_c;
    return reduce_mod(std::move(out), q);
}

// first kernel vector of a small matrix over the field Q(t), or empty
inline std::vector<UniRat> unirat_kernel_vector(std::vector<std::vector<UniRat>> m,
                                                std::size_t ncols) {
    const std::size_t nrows = m.size();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t sel = nrows;
        for (std::size_t i = r; i < nrows; ++i)
            if (!m[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel == nrows) continue;
        std::swap(m[r], m[sel]);
        UniRat inv = UniRat(UniPoly::constant(Rational(1), "t")) / m[r][col];
        for (std::size_t j = col; j < ncols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            UniRat f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                m[i][j] = m[i][j] - f * m[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<UniRat> x(ncols);
        x[f] = UniRat(UniPoly::constant(Rational(1), "t"));
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
            if (pivot_cols[k] < f) x[pivot_cols[k]] = -m[k][f];
        return x;
    }
    return {};
}

// clear a rational-function vector to polynomials by the common denominator
inline std::vector<UniPoly> clear_denominators(const std::vector<UniRat>& v) {
    UniPoly common = UniPoly::constant(Rational(1), "t");
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        UniPoly g = UniPoly::gcd(common, x.den());
        common = common * UniPoly::divmod(x.den(), g).first;
    }
    std::vector<UniPoly> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (x.is_zero()) {
            out.emplace_back("t");
        } else {
            out.push_back(x.num() * UniPoly::divmod(common, x.den()).first);
        }
    }
    return out;
}

} // namespace detail

/*
 * Derive a linear ODE annihilating P(t) from a verified equation
 * Q(t, P(t)) = 0. Inside Q(t)[P]/(Q) the derivative of P is
 * -Q_t / Q_P, so successive derivatives of P are again elements of the
 * quotient; the first Q(t)-linear dependence among (P, P', P'', ...)
 * gives the operator. The quotient has dimension deg_P(Q), so an order
 * <= deg_P(Q) always exists. Dependence including a constant column is
 * admitted only after the homogeneous search at the same order fails.
 */
inline LinearODE algebraic_to_ode(const AlgebraicEquation& eq) {
    using namespace detail;
    const int dp = eq.deg_p;
    if (dp < 1 || eq.q.is_zero()) throw UsageError("algebraic_to_ode: not an equation in P");

    std::vector<UniPoly> qs(static_cast<std::size_t>(dp) + 1, UniPoly("t"));
    for (const auto& [e, c] : eq.q.terms())
        qs[static_cast<std::size_t>(e[1])] =
            qs[static_cast<std::size_t>(e[1])] + UniPoly::monomial(c, e[0], "t");

    PPoly q;
    for (const auto& p : qs) q.emplace_back(p);
    ptrim(q);
    PPoly q_p;
    for (std::size_t j = 1; j < qs.size(); ++j)
        q_p.emplace_back(qs[j] * Rational(static_cast<long>(j)));
    ptrim(q_p);
    PPoly q_t;
    for (const auto& p : qs) q_t.emplace_back(p.derivative());
    ptrim(q_t);
    if (q_p.empty())
        throw UsageError("algebraic_to_ode: dQ/dP vanishes; square-free reduction required");

    PPoly qp_inv = ext_invert(q_p, q);
    PPoly p_prime = reduce_mod(pmul(pneg(q_t), qp_inv), q); // P' in the quotient

    auto differentiate = [&](const PPoly& a) {
        PPoly dt(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            const UniRat& x = a[j];
            if (x.is_zero()) continue;
            dt[j] = UniRat(x.num().derivative() * x.den() - x.num() * x.den().derivative(),
                           x.den() * x.den());
        }
        ptrim(dt);
        PPoly dp_part;
        for (std::size_t j = 1; j < a.size(); ++j)
            dp_part.push_back(a[j] * UniRat(UniPoly::constant(Rational(static_cast<long>(j)), "t")));
        ptrim(dp_part);
        return reduce_mod(padd(std::move(dt), pmul(dp_part, p_prime)), q);
    };

    std::vector<PPoly> derivs; // P, P', P'', ...
    {
        PPoly p_elem(2);
        p_elem[1] = UniRat(UniPoly::constant(Rational(1), "t"));
        derivs.push_back(reduce_mod(std::move(p_elem), q));
    }

    const std::size_t dim = static_cast<std::size_t>(dp);
    auto column_of = [&](const PPoly& e) {
        std::vector<UniRat> col(dim);
        for (std::size_t i = 0; i < e.size() && i < dim; ++i) col[i] = e[i];
        return col;
    };

    for (int d = 1; d <= dp; ++d) {
        derivs.push_back(differentiate(derivs.back()));

        // homogeneous: lambda_0 P + ... + lambda_d P^(d) = 0
        std::vector<std::vector<UniRat>> m(dim, std::vector<UniRat>(static_cast<std::size_t>(d) + 1));
        for (int c = 0; c <= d; ++c) {
            auto col = column_of(derivs[static_cast<std::size_t>(c)]);
            for (std::size_t i = 0; i < dim; ++i) m[i][static_cast<std::size_t>(c)] = col[i];
        }
        auto lambda = unirat_kernel_vector(m, static_cast<std::size_t>(d) + 1);
        if (!lambda.empty() && !lambda.back().is_zero()) {
            LinearODE ode;
            ode.coeffs = clear_denominators(lambda);
            normalize_poly_list(ode.coeffs, ode.coeffs.size() - 1);
            return ode;
        }

        // inhomogeneous: mu * 1 + lambda_0 P + ... + lambda_d P^(d) = 0
        std::vector<std::vector<UniRat>> mi(dim,
                                            std::vector<UniRat>(static_cast<std::size_t>(d) + 2));
        for (std::size_t i = 0; i < dim; ++i)
            mi[i][0] = (i == 0) ? UniRat(UniPoly::constant(Rational(1), "t")) : UniRat();
        for (int c = 0; c <= d; ++c) {
            auto col = column_of(derivs[static_cast<std::size_t>(c)]);
            for (std::size_t i = 0; i < dim; ++i) mi[i][static_cast<std::size_t>(c) + 1] = col[i];
        }
        auto lam2 = unirat_kernel_vector(mi, static_cast<std::size_t>(d) + 2);
        if (!lam2.empty() && !lam2.back().is_zero()) {
            std::vector<UniRat> full(lam2.begin() + 1, lam2.end());
            full.push_back(-lam2[0]); // the inhomogeneous side, cleared jointly
            auto cleared = clear_denominators(full);
            LinearODE ode;
            ode.inhom = cleared.back();
            cleared.pop_back();
            ode.coeffs = std::move(cleared);
            std::vector<UniPoly> joint = ode.coeffs;
            joint.push_back(ode.inhom);
            normalize_poly_list(joint, ode.coeffs.size() - 1);
            ode.inhom = joint.back();
            joint.pop_back();
            ode.coeffs = std::move(joint);
            return ode;
        }
    }
    throw UsageError("algebraic_to_ode: no dependence found (malformed equation)");
}

// First index where applying the ODE to the series of `terms` fails, minus
// one; the residual can only be trusted to order len-1-order(ode).
inline long ode_residual_order(const LinearODE& ode, const std::vector<Rational>& terms) {
    const long len = static_cast<long>(terms.size());
    const int d = ode.order();
    const long usable = len - 1 - d;
    if (usable < 0) return -1;
    for (long n = 0; n <= usable; ++n) {
        Rational res;
        for (int i = 0; i <= d; ++i) {
            const UniPoly& qi = ode.coeffs[static_cast<std::size_t>(i)];
            for (int j = 0; j <= qi.degree(); ++j) {
                if (qi.coeff(j).is_zero() || n - j < 0) continue;
                // coefficient of t^n in t^j P^(i): a(n-j+i) * (n-j+i)!/(n-j)!
                Rational ff(1);
                for (int u = 0; u < i; ++u) ff *= Rational(n - j + i - u);
                if (n - j + i < len)
                    res += qi.coeff(j) * ff * terms[static_cast<std::size_t>(n - j + i)];
            }
        }
        if (n <= static_cast<long>(ode.inhom.degree())) res -= ode.inhom.coeff(static_cast<int>(n));
        if (!res.is_zero()) return n - 1;
    }
    return usable;
}

/*
 * Transfer: coefficient of t^n in t^j P^(i) is a(n-j+i) (n-j+i)(n-j+i-1)
 * ... (n-j+1), so each ODE term contributes to the shift i-j; collecting
 * by shift and renaming the lowest shifted index to a(n) gives the
 * recurrence. An inhomogeneous ODE is first differentiated past the
 * degree of its right-hand side.
 */
inline HolonomicRecurrence ode_to_recurrence(const LinearODE& ode) {
    LinearODE work = ode;
    while (!work.inhom.is_zero()) {
        std::vector<UniPoly> nq(work.coeffs.size() + 1, UniPoly("t"));
        for (std::size_t i = 0; i < work.coeffs.size(); ++i) {
            nq[i] = nq[i] + work.coeffs[i].derivative();
            nq[i + 1] = nq[i + 1] + work.coeffs[i];
        }
        work.coeffs = std::move(nq);
        work.inhom = work.inhom.derivative();
    }

    std::map<long, UniPoly> by_shift;
    for (std::size_t i = 0; i < work.coeffs.size(); ++i) {
        const UniPoly& qi = work.coeffs[i];
        for (int j = 0; j <= qi.degree(); ++j) {
            if (qi.coeff(j).is_zero()) continue;
            const long sigma = static_cast<long>(i) - j;
            UniPoly f = UniPoly::constant(qi.coeff(j), "n");
            for (std::size_t u = 0; u < i; ++u)
                f = f * UniPoly({Rational(sigma - static_cast<long>(u)), Rational(1)}, "n");
            auto [it, inserted] = by_shift.emplace(sigma, f);
            if (!inserted) it->second = it->second + f;
        }
    }
    for (auto it = by_shift.begin(); it != by_shift.end();)
        it = it->second.is_zero() ? by_shift.erase(it) : std::next(it);
    if (by_shift.empty()) throw UsageError("ode_to_recurrence: zero operator");

    const long sigma_min = by_shift.begin()->first;
    const long sigma_max = by_shift.rbegin()->first;
    HolonomicRecurrence rec;
    rec.coeffs.assign(static_cast<std::size_t>(sigma_max - sigma_min) + 1, UniPoly("n"));
    for (const auto& [sigma, poly] : by_shift)
        rec.coeffs[static_cast<std::size_t>(sigma - sigma_min)] = poly.shifted_arg(-sigma_min);
    normalize_poly_list(rec.coeffs, rec.coeffs.size() - 1);
    return rec;
}

// Exact extension of a sequence by its recurrence. Every step with a
// vanishing leading coefficient must already be covered by `initial`.
inline std::vector<Rational> extend_sequence(const HolonomicRecurrence& rec,
                                             const std::vector<Rational>& initial, long N) {
    const int d = rec.order();
    if (d < 0 || rec.coeffs.back().is_zero())
        throw UsageError("extend_sequence: malformed recurrence");
    if (static_cast<long>(initial.size()) < d)
        throw UsageError("extend_sequence: need at least " + std::to_string(d) +
                         " initial terms");
    std::vector<Rational> out(initial.begin(),
                              initial.begin() + std::min<long>(static_cast<long>(initial.size()), N + 1));
    for (long k = static_cast<long>(out.size()); k <= N; ++k) {
        const long n = k - d;
        Rational lead = rec.coeffs.back().eval(Rational(n));
        if (lead.is_zero())
            throw SingularExtensionError(
                "extend_sequence: leading coefficient vanishes at n = " + std::to_string(n) +
                " and no term was supplied",
                n);
        Rational s;
        for (int i = 0; i < d; ++i)
            s += rec.coeffs[static_cast<std::size_t>(i)].eval(Rational(n)) *
                 out[static_cast<std::size_t>(n + i)];
        out.push_back(-s / lead);
    }
    return out;
}

} // namespace rps
