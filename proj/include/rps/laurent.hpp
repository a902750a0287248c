#pragma once

#include <string>
#include <vector>

#include "rps/rational.hpp"

namespace rps {

// Laurent polynomial in one variable: dense coefficients from the lowest
// exponent upward, both end coefficients nonzero (zero = empty list).
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { // constant
        if (!c.is_zero()) c_.push_back(c);
    }

    static LaurentPoly monomial(int exp, const Rational& c) {
        LaurentPoly p;
        if (!c.is_zero()) {
            p.low_ = exp;
            p.c_.push_back(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int low_exp() const { return low_; }                                  // meaningful when nonzero
    int high_exp() const { return low_ + static_cast<int>(c_.size()) - 1; }

    Rational coeff(int e) const {
        int i = e - low_;
        if (c_.empty() || i < 0 || i >= static_cast<int>(c_.size())) return Rational();
        return c_[static_cast<std::size_t>(i)];
    }

    // value at 1, i.e. the sum of all coefficients
    Rational coeff_sum() const {
        Rational s;
        for (const auto& x : c_) s += x;
        return s;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        r.low_ = low_;
        r.c_.reserve(c_.size());
        for (const auto& x : c_) r.c_.push_back(-x);
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.low_, b.low_);
        int hi = std::max(a.high_exp(), b.high_exp());
        LaurentPoly r;
        r.low_ = lo;
        r.c_.assign(static_cast<std::size_t>(hi - lo) + 1, Rational());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r.c_[static_cast<std::size_t>(a.low_ - lo) + i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r.c_[static_cast<std::size_t>(b.low_ - lo) + i] += b.c_[i];
        r.trim();
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.low_ = a.low_ + b.low_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    LaurentPoly operator*(const Rational& s) const {
        LaurentPoly r;
        if (s.is_zero()) return r;
        r.low_ = low_;
        r.c_.reserve(c_.size());
        for (const auto& x : c_) r.c_.push_back(x * s);
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        if (c_.empty() || o.c_.empty()) return c_.empty() && o.c_.empty();
        return low_ == o.low_ && c_ == o.c_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "s") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Rational& c = c_[i];
            if (c.is_zero()) continue;
            int e = low_ + static_cast<int>(i);
            if (out.empty())
                out += (c.sign() < 0) ? "-" : "";
            else
                out += (c.sign() < 0) ? " - " : " + ";
            Rational a = c.abs();
            if (e == 0) {
                out += a.str();
            } else {
                if (!a.is_one()) out += a.str() + "*";
                out += var;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    void trim() {
        std::size_t front = 0;
        while (front < c_.size() && c_[front].is_zero()) ++front;
        if (front == c_.size()) {
            c_.clear();
            low_ = 0;
            return;
        }
        std::size_t back = c_.size();
        while (back > front && c_[back - 1].is_zero()) --back;
        c_ = std::vector<Rational>(c_.begin() + static_cast<long>(front),
                                   c_.begin() + static_cast<long>(back));
        low_ += static_cast<int>(front);
    }

    int low_ = 0;
    std::vector<Rational> c_;
};

} // namespace rps
