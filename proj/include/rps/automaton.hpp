#pragma once

#include <queue>
#include <vector>

#include "rps/word.hpp"

namespace rps {

// Aho-Corasick automaton over a fixed alphabet with dense transitions.
// matches(s)[i] is 1 when pattern i ends at state s (i.e. is a suffix of
// the string spelled by s), so feeding a word letter by letter and summing
// matches() over the visited states counts all overlapping occurrences.
class PatternAutomaton {
public:
    PatternAutomaton(const std::vector<Word>& patterns, int alphabet_size)
        : alphabet_(alphabet_size) {
        if (alphabet_size < 1) throw UsageError("PatternAutomaton: alphabet size must be >= 1");
        go_.push_back(std::vector<int>(static_cast<std::size_t>(alphabet_), -1));
        matches_.push_back(std::vector<int>(patterns.size(), 0));
        for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
            const Word& p = patterns[pi];
            if (p.empty()) throw UsageError("PatternAutomaton: empty pattern");
            int s = 0;
            for (int ch : p.letters) {
                int& next = go_[static_cast<std::size_t>(s)][static_cast<std::size_t>(ch)];
                if (next < 0) {
                    next = static_cast<int>(go_.size());
                    go_.push_back(std::vector<int>(static_cast<std::size_t>(alphabet_), -1));
                    matches_.push_back(std::vector<int>(patterns.size(), 0));
                }
                s = next;
            }
            matches_[static_cast<std::size_t>(s)][pi] = 1;
        }

        std::vector<int> fail(go_.size(), 0);
        std::queue<int> bfs;
        for (int c = 0; c < alphabet_; ++c) {
            int& u = go_[0][static_cast<std::size_t>(c)];
            if (u < 0) {
                u = 0;
            } else {
                fail[static_cast<std::size_t>(u)] = 0;
                bfs.push(u);
            }
        }
        while (!bfs.empty()) {
            int s = bfs.front();
            bfs.pop();
            const auto& fm = matches_[static_cast<std::size_t>(fail[static_cast<std::size_t>(s)])];
            auto& sm = matches_[static_cast<std::size_t>(s)];
            for (std::size_t i = 0; i < sm.size(); ++i) sm[i] += fm[i];
            for (int c = 0; c < alphabet_; ++c) {
                int& u = go_[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)];
                int fallback = go_[static_cast<std::size_t>(fail[static_cast<std::size_t>(s)])]
                                  [static_cast<std::size_t>(c)];
                if (u < 0) {
                    u = fallback;
                } else {
                    fail[static_cast<std::size_t>(u)] = fallback;
                    bfs.push(u);
                }
            }
        }
    }

    int state_count() const { return static_cast<int>(go_.size()); }
    int alphabet_size() const { return alphabet_; }

    int step(int state, int letter) const {
        return go_[static_cast<std::size_t>(state)][static_cast<std::size_t>(letter)];
    }

    const std::vector<int>& matches(int state) const {
        return matches_[static_cast<std::size_t>(state)];
    }

private:
    int alphabet_;
    std::vector<std::vector<int>> go_;
    std::vector<std::vector<int>> matches_;
};

} // namespace rps
