#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rps/rational.hpp"

namespace rps {

// Dense univariate polynomial over Rational, coefficients stored lowest
// degree first, trailing zeros stripped (zero polynomial = empty list).
class UniPoly {
public:
    UniPoly() : var_("t") {}
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::vector<Rational> coeffs, std::string var)
        : c_(std::move(coeffs)), var_(std::move(var)) { trim(); }

    static UniPoly constant(const Rational& c, std::string var = "t") {
        UniPoly p(std::move(var));
        if (!c.is_zero()) p.c_.push_back(c);
        return p;
    }

    static UniPoly monomial(const Rational& c, int deg, std::string var = "t") {
        UniPoly p(std::move(var));
        if (!c.is_zero()) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, Rational());
            p.c_.back() = c;
        }
        return p;
    }

    const std::string& var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational();
        return c_[static_cast<std::size_t>(i)];
    }

    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

    bool is_constant() const { return c_.size() <= 1; }

    UniPoly operator-() const {
        UniPoly r(var_);
        r.c_.reserve(c_.size());
        for (const auto& x : c_) r.c_.push_back(-x);
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        a.check_var(b);
        UniPoly r(a.var_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        a.check_var(b);
        UniPoly r(a.var_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    UniPoly operator*(const Rational& s) const {
        UniPoly r(var_);
        if (s.is_zero()) return r;
        r.c_.reserve(c_.size());
        for (const auto& x : c_) r.c_.push_back(x * s);
        return r;
    }

    bool operator==(const UniPoly& o) const { return var_ == o.var_ && c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        UniPoly r(var_);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
        r.trim();
        return r;
    }

    // p(x + delta) by Horner over the shifted argument
    UniPoly shifted_arg(long delta) const {
        UniPoly shift({Rational(delta), Rational(1)}, var_);
        UniPoly acc(var_);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * shift + UniPoly::constant(c_[i], var_);
        return acc;
    }

    // Rational scalar making the coefficients integer with content 1;
    // returns the scaled polynomial (sign of the leading coefficient kept).
    UniPoly primitive() const {
        if (is_zero()) return *this;
        return *this * primitive_scale();
    }

    Rational primitive_scale() const {
        Integer den_lcm(1), num_gcd(0);
        for (const auto& x : c_) {
            if (x.is_zero()) continue;
            den_lcm = rps::lcm(den_lcm, x.denominator());
        }
        for (const auto& x : c_) {
            if (x.is_zero()) continue;
            Integer scaled = x.numerator() * (den_lcm / x.denominator());
            num_gcd = rps::gcd(num_gcd, scaled);
        }
        if (num_gcd == 0) return Rational(1);
        return Rational(den_lcm, num_gcd);
    }

    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        a.check_var(b);
        if (b.is_zero()) throw UsageError("UniPoly: division by zero polynomial");
        UniPoly q(a.var_), r = a;
        if (a.degree() < b.degree()) return {q, r};
        q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational());
        const Rational lead = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            Rational f = r.leading() / lead;
            q.c_[static_cast<std::size_t>(k)] = f;
            for (int i = 0; i <= b.degree(); ++i)
                r.c_[static_cast<std::size_t>(i + k)] -= f * b.c_[static_cast<std::size_t>(i)];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    // Primitive Euclidean gcd, normalized to positive leading coefficient.
    static UniPoly gcd(UniPoly a, UniPoly b) {
        a.check_var(b);
        a = a.primitive();
        b = b.primitive();
        while (!b.is_zero()) {
            UniPoly r = divmod(a, b).second.primitive();
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero() && a.leading().sign() < 0) a = -a;
        return a;
    }

    std::string str(bool ascending = false) const {
        if (is_zero()) return "0";
        std::string out;
        auto one_term = [&](std::size_t i) {
            const Rational& c = c_[i];
            if (c.is_zero()) return;
            Rational a = c.abs();
            if (out.empty())
                out += (c.sign() < 0) ? "-" : "";
            else
                out += (c.sign() < 0) ? " - " : " + ";
            if (i == 0) {
                out += a.str();
            } else {
                if (!a.is_one()) out += a.str() + "*";
                out += var_;
                if (i > 1) out += "^" + std::to_string(i);
            }
        };
        if (ascending)
            for (std::size_t i = 0; i < c_.size(); ++i) one_term(i);
        else
            for (std::size_t i = c_.size(); i-- > 0;) one_term(i);
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    void check_var(const UniPoly& o) const {
        if (var_ != o.var_)
            throw UsageError("UniPoly: mismatched indeterminates '" + var_ + "' vs '" + o.var_ + "'");
    }

    std::vector<Rational> c_;
    std::string var_;
};

// Lowest-degree nonzero coefficient (zero for the zero polynomial).
inline Rational trailing_coeff(const UniPoly& p) {
    for (const auto& x : p.coeffs())
        if (!x.is_zero()) return x;
    return Rational();
}

// Scale a list of polynomials (a recurrence/ODE coefficient vector) by one
// common rational so that all coefficients are integers of content 1, then
// flip signs so the lowest nonzero coefficient of `sign_ref` (index into
// the list) is positive.
inline void normalize_poly_list(std::vector<UniPoly>& polys, std::size_t sign_ref) {
    Integer den_lcm(1), num_gcd(0);
    for (const auto& p : polys)
        for (const auto& x : p.coeffs()) {
            if (x.is_zero()) continue;
            den_lcm = lcm(den_lcm, x.denominator());
        }
    for (const auto& p : polys)
        for (const auto& x : p.coeffs()) {
            if (x.is_zero()) continue;
            num_gcd = gcd(num_gcd, x.numerator() * (den_lcm / x.denominator()));
        }
    if (num_gcd == 0) return;
    Rational scale(den_lcm, num_gcd);
    if (sign_ref < polys.size() && trailing_coeff(polys[sign_ref]).sign() < 0) scale = -scale;
    for (auto& p : polys) p = p * scale;
}

// Fraction of univariate polynomials, reduced by gcd after every operation;
// denominator kept with positive leading coefficient.
class UniRat {
public:
    UniRat() : num_("t"), den_(UniPoly::constant(Rational(1), "t")) {}
    explicit UniRat(const UniPoly& p) : num_(p), den_(UniPoly::constant(Rational(1), p.var())) {}
    UniRat(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw UsageError("UniRat: zero denominator");
        reduce();
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    UniRat operator-() const {
        UniRat r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend UniRat operator+(const UniRat& a, const UniRat& b) {
        return UniRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend UniRat operator-(const UniRat& a, const UniRat& b) { return a + (-b); }
    friend UniRat operator*(const UniRat& a, const UniRat& b) {
        return UniRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend UniRat operator/(const UniRat& a, const UniRat& b) {
        if (b.is_zero()) throw std::domain_error("UniRat: division by zero");
        return UniRat(a.num_ * b.den_, a.den_ * b.num_);
    }

    bool operator==(const UniRat& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = UniPoly::constant(Rational(1), den_.var());
            return;
        }
        UniPoly g = UniPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = UniPoly::divmod(num_, g).first;
            den_ = UniPoly::divmod(den_, g).first;
        }
        // make the denominator primitive with positive leading coefficient
        Rational s = den_.primitive_scale();
        if (den_.leading().sign() < 0) s = -s;
        num_ = num_ * s;
        den_ = den_ * s;
    }

    UniPoly num_, den_;
};

} // namespace rps
