#pragma once

#include <mpfr.h>

#include <string>

#include "rps/rational.hpp"

namespace rps {

// Fixed-precision (256-bit, ~77 decimal digits) floating-point value.
class BigFloat {
public:
    static constexpr mpfr_prec_t kPrecision = 256;

    BigFloat() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
    BigFloat(double d) : BigFloat() { mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(long n) : BigFloat() { mpfr_set_si(v_, n, MPFR_RNDN); }
    explicit BigFloat(const Rational& q) : BigFloat() {
        mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) : BigFloat() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept : BigFloat() { mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    BigFloat operator-() const {
        BigFloat r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat abs() const {
        BigFloat r;
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat pow(const BigFloat& e) const {
        BigFloat r;
        mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
        return r;
    }

    BigFloat pow_ui(unsigned long e) const {
        BigFloat r;
        mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    BigFloat root_ui(unsigned long k) const {
        BigFloat r;
        mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator>(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) > 0;
    }

private:
    mpfr_t v_;
};

} // namespace rps
