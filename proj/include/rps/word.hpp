#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rps/errors.hpp"

namespace rps {

// Word over the alphabet {0, ..., m-1}. Text encoding uses the first m
// letters of "abcdefghij..."; for a two-letter alphabet the aliases
// H -> a, T -> b are accepted on input and kept on output when used.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return letters != o.letters; }
    bool operator<(const Word& o) const { return letters < o.letters; }

    Word reversed() const {
        Word w = *this;
        std::reverse(w.letters.begin(), w.letters.end());
        return w;
    }

    Word permuted(const std::vector<int>& perm) const {
        Word w = *this;
        for (auto& x : w.letters) x = perm[static_cast<std::size_t>(x)];
        return w;
    }

    static Word parse(const std::string& text, int alphabet_size, bool* used_ht = nullptr) {
        if (alphabet_size < 1 || alphabet_size > 26)
            throw UsageError("Word: alphabet size must be between 1 and 26 for text input");
        Word w;
        bool ht = false;
        for (char ch : text) {
            int v = -1;
            if (alphabet_size == 2 && (ch == 'H' || ch == 'h')) {
                v = 0;
                ht = true;
            } else if (alphabet_size == 2 && (ch == 'T' || ch == 't')) {
                v = 1;
                ht = true;
            } else if (ch >= 'a' && ch < 'a' + alphabet_size) {
                v = ch - 'a';
            } else if (ch >= 'A' && ch < 'A' + alphabet_size) {
                v = ch - 'A';
            }
            if (v < 0)
                throw UsageError(std::string("Word: invalid letter '") + ch + "' for alphabet size " +
                                 std::to_string(alphabet_size));
            w.letters.push_back(v);
        }
        if (used_ht) *used_ht = ht;
        return w;
    }

    std::string str(bool ht_alias = false) const {
        std::string out;
        out.reserve(letters.size());
        for (int x : letters)
            out += ht_alias ? (x == 0 ? 'H' : 'T') : static_cast<char>('a' + x);
        return out;
    }
};

// Number of (possibly overlapping) positions where p occurs in w.
inline int count_occurrences(const Word& w, const Word& p) {
    if (p.empty()) throw UsageError("count_occurrences: empty pattern");
    if (p.size() > w.size()) return 0;
    int count = 0;
    for (std::size_t i = 0; i + p.size() <= w.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (w.letters[i + j] != p.letters[j]) {
                hit = false;
                break;
            }
        if (hit) ++count;
    }
    return count;
}

inline bool is_factor(const Word& p, const Word& w) {
    if (p.empty()) return true;
    return count_occurrences(w, p) > 0;
}

// One counting problem: words over an m-letter alphabet whose pattern
// occurrence counts satisfy sum_i weights[i] * #occ(patterns[i]) = target.
struct InstanceSpec {
    int alphabet_size = 2;
    std::vector<Word> patterns;
    std::vector<long> weights;
    long target = 0;
    bool ht_display = false; // render letters as H/T in reports

    void validate() const {
        if (alphabet_size < 1) throw UsageError("InstanceSpec: alphabet size must be >= 1");
        if (patterns.empty()) throw UsageError("InstanceSpec: at least one pattern required");
        if (patterns.size() != weights.size())
            throw UsageError("InstanceSpec: one weight per pattern required");
        std::set<std::vector<int>> seen;
        for (const auto& p : patterns) {
            if (p.empty()) throw UsageError("InstanceSpec: empty pattern");
            for (int x : p.letters)
                if (x < 0 || x >= alphabet_size)
                    throw UsageError("InstanceSpec: pattern letter out of alphabet range");
            if (!seen.insert(p.letters).second)
                throw UsageError("InstanceSpec: patterns must be pairwise distinct");
        }
        for (long w : weights)
            if (w == 0) throw UsageError("InstanceSpec: weights must be nonzero");
    }

    std::size_t pattern_count() const { return patterns.size(); }

    std::string canonical_key() const {
        std::string k = "m=" + std::to_string(alphabet_size) + "|p=";
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            if (i) k += ",";
            k += patterns[i].str(false);
        }
        k += "|w=";
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (i) k += ",";
            k += std::to_string(weights[i]);
        }
        k += "|r=" + std::to_string(target);
        return k;
    }

    bool operator==(const InstanceSpec& o) const {
        return alphabet_size == o.alphabet_size && patterns == o.patterns &&
               weights == o.weights && target == o.target;
    }
};

// The classic two-word instance: a1*#w1 - a2*#w2 = r.
inline InstanceSpec make_pair_spec(int m, const Word& w1, const Word& w2,
                                   long a1 = 1, long a2 = 1, long r = 0,
                                   bool ht_display = false) {
    InstanceSpec spec;
    spec.alphabet_size = m;
    spec.patterns = {w1, w2};
    spec.weights = {a1, -a2};
    spec.target = r;
    spec.ht_display = ht_display;
    spec.validate();
    return spec;
}

} // namespace rps
