#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "rps/word.hpp"

namespace rps {

enum class PairSymmetry {
    letter_perms,              // all alphabet permutations applied to both words
    letter_perms_and_reversal, // additionally simultaneous reversal of both words
};

inline const char* to_string(PairSymmetry s) {
    return s == PairSymmetry::letter_perms ? "perms" : "perms+rev";
}

// Orbit of unordered pairs of distinct equal-length words under the chosen
// symmetry group. The representative is the lexicographically least member.
struct PairClass {
    std::pair<Word, Word> representative;
    std::vector<std::pair<Word, Word>> members;
};

namespace detail {

inline std::pair<Word, Word> ordered_pair(Word a, Word b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

} // namespace detail

// All orbits of unordered pairs {w1 != w2} of length-k words over an
// m-letter alphabet, sorted by representative.
inline std::vector<PairClass> canonical_pairs(int m, int k, PairSymmetry sym) {
    if (m < 1) throw UsageError("canonical_pairs: alphabet size must be >= 1");
    if (k < 1) throw UsageError("canonical_pairs: word length must be >= 1");

    std::vector<Word> words;
    {
        std::vector<int> w(static_cast<std::size_t>(k), 0);
        for (;;) {
            words.push_back(Word(w));
            int i = k - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == m - 1) {
                w[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
        }
    }

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i;
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }

    const bool with_rev = sym == PairSymmetry::letter_perms_and_reversal;
    std::map<std::pair<Word, Word>, std::vector<std::pair<Word, Word>>> orbits;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            std::pair<Word, Word> best;
            bool first = true;
            for (const auto& p : perms) {
                Word a = words[i].permuted(p);
                Word b = words[j].permuted(p);
                for (int rev = 0; rev < (with_rev ? 2 : 1); ++rev) {
                    auto cand = detail::ordered_pair(rev ? a.reversed() : a,
                                                     rev ? b.reversed() : b);
                    if (first || cand < best) {
                        best = std::move(cand);
                        first = false;
                    }
                }
            }
            orbits[best].push_back(detail::ordered_pair(words[i], words[j]));
        }

    std::vector<PairClass> classes;
    classes.reserve(orbits.size());
    for (auto& [rep, members] : orbits) {
        std::sort(members.begin(), members.end());
        classes.push_back(PairClass{rep, std::move(members)});
    }
    return classes;
}

} // namespace rps
