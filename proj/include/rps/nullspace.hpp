#pragma once

#include <cstddef>
#include <vector>

#include "rps/rational.hpp"

namespace rps {

/*
 * Exact kernel of a rectangular rational matrix.
 *
 * Rows are first scaled to integers, then reduced by fraction-free
 * (Bareiss) elimination: every intermediate entry is a minor of the
 * scaled matrix, so divisions are exact and entry growth stays within
 * determinant bounds. The pivot in each column is the nonzero candidate
 * of smallest bit length. Kernel vectors are recovered per free column
 * by back substitution and canonicalized: integer entries, content 1,
 * positive entry in the free slot.
 */
inline std::vector<std::vector<Rational>>
nullspace(const std::vector<std::vector<Rational>>& m, std::size_t ncols) {
    const std::size_t nrows = m.size();
    for (const auto& row : m)
        if (row.size() != ncols) throw UsageError("nullspace: ragged matrix");

    // integer copy, row-scaled
    std::vector<std::vector<Integer>> a(nrows, std::vector<Integer>(ncols));
    for (std::size_t i = 0; i < nrows; ++i) {
        Integer den_lcm(1);
        for (const auto& x : m[i]) den_lcm = lcm(den_lcm, x.denominator());
        for (std::size_t j = 0; j < ncols; ++j)
            a[i][j] = m[i][j].numerator() * (den_lcm / m[i][j].denominator());
    }

    std::vector<std::size_t> pivot_cols;
    Integer prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t best = nrows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < nrows; ++i) {
            if (a[i][col] == 0) continue;
            std::size_t bits = bit_length(a[i][col]);
            if (best == nrows || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == nrows) continue;
        std::swap(a[r], a[best]);
        const Integer piv = a[r][col];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const Integer f = a[i][col];
            for (std::size_t j = col + 1; j < ncols; ++j) {
                Integer t = a[i][j] * piv - f * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][col] = 0;
        }
        prev = piv;
        pivot_cols.push_back(col);
        ++r;
    }
    const std::size_t rank = pivot_cols.size();

    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(ncols, Rational());
        x[f] = Rational(1);
        for (std::size_t k = rank; k-- > 0;) {
            std::size_t p = pivot_cols[k];
            if (p > f) continue; // columns beyond the free slot stay zero
            Rational s;
            for (std::size_t j = p + 1; j < ncols; ++j) {
                if (a[k][j] == 0 || x[j].is_zero()) continue;
                s += Rational(a[k][j]) * x[j];
            }
            x[p] = -s / Rational(a[k][p]);
        }
        // canonical form: integers, content 1, positive free entry
        Integer den_lcm(1), num_gcd(0);
        for (const auto& v : x)
            if (!v.is_zero()) den_lcm = lcm(den_lcm, v.denominator());
        std::vector<Rational> out(ncols);
        for (std::size_t j = 0; j < ncols; ++j)
            out[j] = Rational(x[j].numerator() * (den_lcm / x[j].denominator()));
        for (const auto& v : out)
            if (!v.is_zero()) num_gcd = gcd(num_gcd, v.numerator());
        if (num_gcd > 1)
            for (auto& v : out) v = Rational(v.numerator() / num_gcd);
        if (out[f].sign() < 0)
            for (auto& v : out) v = -v;
        basis.push_back(std::move(out));
    }
    return basis;
}

} // namespace rps
