#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

#include "rps/errors.hpp"

namespace rps {

using Integer = mpz_class;

inline std::size_t bit_length(const Integer& x) {
    return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact rational number, always kept canonical: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw UsageError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw UsageError("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw UsageError("Rational: zero denominator");
        q.canonicalize();
        Rational r;
        r.v_ = q;
        return r;
    }

    Integer numerator() const { return Integer(v_.get_num()); }
    Integer denominator() const { return Integer(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const {
        Rational r(*this);
        if (sgn(r.v_) < 0) r.v_ = -r.v_;
        return r;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

} // namespace rps
