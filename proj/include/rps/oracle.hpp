#pragma once

#include <algorithm>
#include <vector>

#include "rps/automaton.hpp"
#include "rps/rational.hpp"
#include "rps/word.hpp"

namespace rps {

/*
 * Exact term oracle. a(n) counts length-n words whose weighted pattern
 * occurrence total equals the target. Dynamic programming over
 * (automaton state, running counter); a counter cell is dropped once the
 * target is out of reach within the remaining letters, which is lossless
 * because per-letter counter moves are bounded by the extreme transition
 * weights.
 */
inline std::vector<Integer> oracle_terms(const InstanceSpec& spec, int N) {
    spec.validate();
    if (N < 0) throw UsageError("oracle_terms: negative term count");

    PatternAutomaton aut(spec.patterns, spec.alphabet_size);
    const int S = aut.state_count();
    const int m = spec.alphabet_size;

    // per-transition counter increments
    std::vector<std::vector<long>> delta(static_cast<std::size_t>(S),
                                         std::vector<long>(static_cast<std::size_t>(m), 0));
    long dmin = 0, dmax = 0;
    for (int s = 0; s < S; ++s)
        for (int c = 0; c < m; ++c) {
            int nxt = aut.step(s, c);
            long d = 0;
            const auto& hits = aut.matches(nxt);
            for (std::size_t i = 0; i < hits.size(); ++i)
                d += spec.weights[i] * hits[i];
            delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] = d;
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
        }

    const long r = spec.target;
    const long lo = static_cast<long>(N) * dmin;
    const long hi = static_cast<long>(N) * dmax;
    const long width = hi - lo + 1;
    const long down_per_step = -dmin; // max decrease per letter (>= 0)
    const long up_per_step = dmax;    // max increase per letter (>= 0)

    auto cell = [&](long counter) { return static_cast<std::size_t>(counter - lo); };

    std::vector<std::vector<Integer>> dp(static_cast<std::size_t>(S),
                                         std::vector<Integer>(static_cast<std::size_t>(width), 0));
    std::vector<std::vector<Integer>> next = dp;
    dp[0][cell(0)] = 1;

    std::vector<Integer> terms;
    terms.reserve(static_cast<std::size_t>(N) + 1);
    auto emit = [&](const std::vector<std::vector<Integer>>& layer) {
        Integer total(0);
        if (r >= lo && r <= hi)
            for (int s = 0; s < S; ++s) total += layer[static_cast<std::size_t>(s)][cell(r)];
        terms.push_back(total);
    };
    emit(dp);

    for (int step = 1; step <= N; ++step) {
        const long remaining = N - step + 1; // letters still to be read from the source layer
        for (auto& row : next)
            for (auto& x : row) x = 0;
        for (int s = 0; s < S; ++s) {
            auto& src = dp[static_cast<std::size_t>(s)];
            for (long c = lo; c <= hi; ++c) {
                const Integer& cnt = src[cell(c)];
                if (cnt == 0) continue;
                if (c > r && remaining * down_per_step < c - r) continue;
                if (c < r && remaining * up_per_step < r - c) continue;
                for (int ch = 0; ch < m; ++ch) {
                    long nc = c + delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(ch)];
                    next[static_cast<std::size_t>(aut.step(s, ch))][cell(nc)] += cnt;
                }
            }
        }
        dp.swap(next);
        emit(dp);
    }
    return terms;
}

inline std::vector<Rational> to_rationals(const std::vector<Integer>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

} // namespace rps
