#pragma once

#include <random>
#include <vector>

#include "rps/rational.hpp"
#include "rps/word.hpp"

namespace rps::testing {

// Independent brute-force oracle: enumerate every word of each length and
// test the weighted occurrence relation directly.
inline std::vector<Integer> exhaustive_terms(const InstanceSpec& spec, int N) {
    std::vector<Integer> out;
    for (int n = 0; n <= N; ++n) {
        Integer count(0);
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        for (;;) {
            Word word(w);
            long total = 0;
            for (std::size_t i = 0; i < spec.patterns.size(); ++i)
                total += spec.weights[i] * count_occurrences(word, spec.patterns[i]);
            if (total == spec.target) ++count;
            int i = n - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == spec.alphabet_size - 1) {
                w[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
        }
        out.push_back(count);
    }
    return out;
}

inline Word random_word(std::mt19937& rng, int m, int len) {
    std::uniform_int_distribution<int> dist(0, m - 1);
    std::vector<int> ls(static_cast<std::size_t>(len));
    for (auto& x : ls) x = dist(rng);
    return Word(ls);
}

// Random two-pattern spec with distinct patterns (lengths 1..max_len).
inline InstanceSpec random_pair_spec(std::mt19937& rng, int m, int max_len,
                                     long max_weight = 2) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<long> weight_dist(1, max_weight);
    for (;;) {
        Word w1 = random_word(rng, m, len_dist(rng));
        Word w2 = random_word(rng, m, len_dist(rng));
        if (w1 == w2) continue;
        InstanceSpec spec;
        spec.alphabet_size = m;
        spec.patterns = {w1, w2};
        spec.weights = {weight_dist(rng), -weight_dist(rng)};
        spec.target = 0;
        return spec;
    }
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

} // namespace rps::testing
