#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rps/rational.hpp"

namespace rps {

// Sparse multivariate polynomial: exponent vector (one slot per
// indeterminate, nonnegative entries) -> nonzero Rational coefficient.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
        return p;
    }

    static MultiPoly monomial(std::vector<std::string> vars, Exponents e, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (e.size() != p.vars_.size()) throw UsageError("MultiPoly: exponent arity mismatch");
        for (int x : e)
            if (x < 0) throw UsageError("MultiPoly: negative exponent");
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    static MultiPoly variable(std::vector<std::string> vars, std::size_t idx) {
        if (idx >= vars.size()) throw UsageError("MultiPoly: variable index out of range");
        Exponents e(vars.size(), 0);
        e[idx] = 1;
        return monomial(std::move(vars), std::move(e), Rational(1));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree_of(terms_.begin()->first) == 0);
    }

    Rational constant_term() const {
        auto it = terms_.find(Exponents(vars_.size(), 0));
        return it == terms_.end() ? Rational() : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree_of(e));
        return d;
    }

    int degree_in(std::size_t idx) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
        return d;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (e.size() != vars_.size()) throw UsageError("MultiPoly: exponent arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r(a.vars_);
        Exponents e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    MultiPoly operator*(const Rational& s) const {
        MultiPoly r(vars_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly acc = constant(vars_, Rational(1));
        for (unsigned i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    MultiPoly derivative(std::size_t idx) const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponents de = e;
            de[idx] -= 1;
            r.add_term(de, c * Rational(static_cast<long>(e[idx])));
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Canonical term order: total degree, then lexicographic exponents.
    static bool term_order(const Exponents& a, const Exponents& b) {
        int da = total_degree_of(a), db = total_degree_of(b);
        if (da != db) return da < db;
        return a < b;
    }

    // Canonical text: terms ascending under term_order, explicit coefficient
    // on every non-constant monomial, e.g. "1 - 2*t + 1*t^2*z1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Exponents, Rational>*> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(),
                  [](auto* x, auto* y) { return term_order(x->first, y->first); });
        std::string out;
        for (auto* t : ts) {
            const auto& [e, c] = *t;
            if (out.empty())
                out += (c.sign() < 0) ? "-" : "";
            else
                out += (c.sign() < 0) ? " - " : " + ";
            std::string mon;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mon.empty()) mon += "*";
                mon += vars_[i];
                if (e[i] > 1) mon += "^" + std::to_string(e[i]);
            }
            if (mon.empty())
                out += c.abs().str();
            else
                out += c.abs().str() + "*" + mon;
        }
        return out;
    }

private:
    static int total_degree_of(const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    }

    void check_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw UsageError("MultiPoly: mismatched indeterminates");
    }

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

} // namespace rps
