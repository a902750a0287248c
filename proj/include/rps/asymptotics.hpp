#pragma once

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include "rps/bigfloat.hpp"
#include "rps/guess.hpp"

namespace rps {

/*
 * Numeric growth estimate a(n) ~ C * mu^n * n^theta on the support
 * residues. mu comes from Richardson-accelerated consecutive-term ratios
 * along the support subsequence, theta from the accelerated limit of
 * n*(a(n+d)/(a(n) mu^d) - 1)/d and C from a(n)/(mu^n n^theta); each is
 * reported with its last extrapolation delta. mu is cross-checked against
 * the largest-modulus root of the recurrence's characteristic polynomial.
 */
struct AsymptoticEstimate {
    double mu = 0.0;
    double theta = 0.0;
    double constant = 0.0;
    int period = 1;
    std::vector<int> support_residues;
    double mu_delta = 0.0;
    double theta_delta = 0.0;
    double constant_delta = 0.0;
    double char_root_modulus = 0.0;
    bool reliable = false;
    std::string note;
};

namespace detail {

// Richardson acceleration for x_j = L + c1/j + c2/j^2 + ...:
// R_k(j) = sum_{i=0..k} (-1)^{k+i} x_{j+i} (j+i)^k / (i! (k-i)!)
inline BigFloat richardson(const std::vector<BigFloat>& x, int depth, std::size_t j) {
    BigFloat acc;
    for (int i = 0; i <= depth; ++i) {
        BigFloat term = x[j + static_cast<std::size_t>(i)];
        term = term * BigFloat(static_cast<long>(j + static_cast<std::size_t>(i))).pow_ui(
                          static_cast<unsigned long>(depth));
        long fact = 1;
        for (int u = 2; u <= i; ++u) fact *= u;
        for (int u = 2; u <= depth - i; ++u) fact *= u;
        term = term / BigFloat(fact);
        acc = ((depth + i) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Extrapolated limit of a 1-based tail sequence. The reported delta is the
// larger of the last-step and last-depth differences; the depth difference
// keeps the indicator honest when the correction terms are not integer
// powers of 1/n (algebraic singularities bring half-integer scales).
inline std::pair<BigFloat, BigFloat> extrapolate(const std::vector<BigFloat>& x, int depth) {
    // x[0] corresponds to j = 1
    const long count = static_cast<long>(x.size());
    int k = std::min<long>(depth, count - 2);
    if (k < 0) return {x.empty() ? BigFloat() : x.back(), BigFloat(1.0)};
    std::vector<BigFloat> indexed(x.size() + 1);
    for (std::size_t i = 0; i < x.size(); ++i) indexed[i + 1] = x[i];
    std::size_t last = x.size() - static_cast<std::size_t>(k);
    BigFloat r_last = richardson(indexed, k, last);
    if (last <= 1) return {r_last, BigFloat(1.0)};
    BigFloat delta = (r_last - richardson(indexed, k, last - 1)).abs();
    if (k >= 1) {
        BigFloat depth_step = (r_last - richardson(indexed, k - 1, last)).abs();
        if (depth_step > delta) delta = depth_step;
    }
    return {r_last, delta};
}

inline std::vector<double> root_moduli(const std::vector<double>& coeffs_ascending) {
    // trim trailing zeros, normalize, then Durand-Kerner iteration
    std::vector<std::complex<double>> c;
    {
        std::size_t deg = coeffs_ascending.size();
        while (deg > 0 && coeffs_ascending[deg - 1] == 0.0) --deg;
        if (deg <= 1) return {};
        double lead = coeffs_ascending[deg - 1];
        for (std::size_t i = 0; i < deg; ++i) c.emplace_back(coeffs_ascending[i] / lead, 0.0);
    }
    const std::size_t n = c.size() - 1;
    std::vector<std::complex<double>> roots(n);
    std::complex<double> seed(0.4, 0.9);
    roots[0] = seed;
    for (std::size_t i = 1; i < n; ++i) roots[i] = roots[i - 1] * seed;
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> denom = 1.0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) denom *= roots[i] - roots[k];
            std::complex<double> delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    std::vector<double> mods;
    mods.reserve(n);
    for (const auto& r : roots) mods.push_back(std::abs(r));
    std::sort(mods.begin(), mods.end());
    return mods;
}

} // namespace detail

inline AsymptoticEstimate estimate_asymptotics(const HolonomicRecurrence& rec,
                                               const std::vector<Rational>& terms,
                                               int depth = 4) {
    AsymptoticEstimate est;
    const long len = static_cast<long>(terms.size());

    // characteristic polynomial: coefficient of the top n-degree in each c_i
    std::vector<double> root_mods;
    {
        int top = 0;
        for (const auto& c : rec.coeffs) top = std::max(top, c.degree());
        std::vector<double> cp;
        for (const auto& c : rec.coeffs) cp.push_back(c.coeff(top).to_double());
        root_mods = detail::root_moduli(cp);
        if (!root_mods.empty()) est.char_root_modulus = root_mods.back();
    }

    if (len < 8) {
        est.note = "too few terms";
        return est;
    }

    // support period: smallest d whose zero pattern is exactly periodic on
    // the checked window (the last 200 terms)
    const long win = std::min<long>(200, len);
    const long start = len - win;
    bool any_nonzero = false;
    for (long n = start; n < len; ++n) any_nonzero = any_nonzero || !terms[static_cast<std::size_t>(n)].is_zero();
    if (!any_nonzero) {
        est.note = "sequence is eventually zero";
        return est;
    }
    int period = 0;
    for (int d = 1; d <= win / 2; ++d) {
        bool ok = true;
        for (long n = start; ok && n + d < len; ++n)
            ok = terms[static_cast<std::size_t>(n)].is_zero() ==
                 terms[static_cast<std::size_t>(n + d)].is_zero();
        if (ok) {
            period = d;
            break;
        }
    }
    if (period == 0) {
        est.note = "zero pattern is not periodic on the checked window";
        return est;
    }
    est.period = period;
    for (int rsd = 0; rsd < period; ++rsd) {
        bool nonzero = false;
        for (long n = start; n < len; ++n)
            if (n % period == rsd && !terms[static_cast<std::size_t>(n)].is_zero()) nonzero = true;
        if (nonzero) est.support_residues.push_back(rsd);
    }

    // support subsequence: the longest contiguous nonzero tail of the
    // best-populated residue class
    long best_rho = est.support_residues.empty() ? 0 : est.support_residues.front();
    long best_count = -1;
    for (int rsd : est.support_residues) {
        long cnt = 0;
        for (long n = len - 1; n >= 0; n -= 1) {
            if (n % period != rsd) continue;
            if (terms[static_cast<std::size_t>(n)].is_zero()) break;
            ++cnt;
        }
        if (cnt > best_count) {
            best_count = cnt;
            best_rho = rsd;
        }
    }
    std::vector<long> idx;
    {
        std::vector<long> all;
        for (long n = best_rho; n < len; n += period) all.push_back(n);
        std::size_t first_keep = 0;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (terms[static_cast<std::size_t>(all[i])].is_zero()) first_keep = i + 1;
        idx.assign(all.begin() + static_cast<long>(first_keep), all.end());
    }
    if (static_cast<int>(idx.size()) < depth + 4) {
        est.note = "support subsequence too short";
        return est;
    }

    int sign = terms[static_cast<std::size_t>(idx.back())].sign();
    for (std::size_t i = idx.size() >= 50 ? idx.size() - 50 : 0; i < idx.size(); ++i)
        if (terms[static_cast<std::size_t>(idx[i])].sign() != sign) {
            est.note = "oscillating sign on the support; ratio limit unreliable";
            return est;
        }

    // mu^period from consecutive support ratios
    std::vector<BigFloat> ratios;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        ratios.push_back(BigFloat(terms[static_cast<std::size_t>(idx[i + 1])] /
                                  terms[static_cast<std::size_t>(idx[i])]));
    auto [rho_inf, rho_delta] = detail::extrapolate(ratios, depth);
    if (!(rho_inf > BigFloat(0.0))) {
        est.note = "nonpositive ratio limit";
        return est;
    }
    BigFloat mu = rho_inf.root_ui(static_cast<unsigned long>(period));
    est.mu = mu.to_double();
    // linearized: d(mu) = d(rho) / (period * mu^{period-1})
    est.mu_delta = (rho_delta / (BigFloat(static_cast<long>(period)) *
                                 mu.pow_ui(static_cast<unsigned long>(period - 1))))
                       .to_double();

    // theta from n (a(n+d)/(a(n) mu^d) - 1)/d
    std::vector<BigFloat> theta_seq;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
        BigFloat val = ratios[i] / rho_inf - BigFloat(1.0);
        val = val * BigFloat(idx[i]) / BigFloat(static_cast<long>(period));
        theta_seq.push_back(val);
    }
    auto [theta, theta_delta] = detail::extrapolate(theta_seq, depth);
    est.theta = theta.to_double();
    est.theta_delta = theta_delta.to_double();

    // constant from a(n) / (mu^n n^theta)
    std::vector<BigFloat> c_seq;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const long n = idx[i];
        BigFloat denom = mu.pow_ui(static_cast<unsigned long>(n)) *
                         BigFloat(n).pow(theta);
        c_seq.push_back(BigFloat(terms[static_cast<std::size_t>(n)]) / denom);
    }
    auto [cconst, c_delta] = detail::extrapolate(c_seq, depth);
    est.constant = cconst.to_double();
    est.constant_delta = c_delta.to_double();

    // mu must match a characteristic root modulus. A non-minimal
    // recurrence can carry spurious roots the sequence never excites, so
    // the nearest root is the meaningful reference, not the largest.
    double root_gap = est.mu;
    for (double rm : root_mods) root_gap = std::min(root_gap, std::abs(est.mu - rm));
    est.reliable = est.mu > 0 && est.mu_delta < 1e-6 && est.theta_delta < 1e-3 &&
                   est.constant_delta < 0.01 * std::abs(est.constant) + 1e-12;
    if (root_gap > std::max(10 * est.mu_delta * est.mu, 1e-8 * std::max(1.0, est.mu))) {
        est.reliable = false;
        est.note = "ratio limit matches no characteristic root";
    }
    return est;
}

} // namespace rps
