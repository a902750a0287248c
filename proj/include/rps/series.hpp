#pragma once

#include <utility>
#include <vector>

#include "rps/errors.hpp"
#include "rps/laurent.hpp"
#include "rps/multipoly.hpp"
#include "rps/rational.hpp"

namespace rps {

// Coefficient-ring hooks used by TruncSeries. A "unit" is an element
// invertible in the coefficient ring; inversion of a non-unit constant
// term is a singular expansion.

inline bool ring_is_zero(const Rational& x) { return x.is_zero(); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline Rational ring_invert_unit(const Rational& x) {
    if (x.is_zero()) throw SingularExpansionError("series: constant term is zero");
    return Rational(1) / x;
}

inline bool ring_is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline LaurentPoly ring_one(const LaurentPoly&) { return LaurentPoly(Rational(1)); }
inline LaurentPoly ring_invert_unit(const LaurentPoly& x) {
    if (x.is_zero()) throw SingularExpansionError("series: constant term is zero");
    if (x.low_exp() != 0 || x.high_exp() != 0)
        throw SingularExpansionError("series: constant term is not a unit Laurent coefficient");
    return LaurentPoly(Rational(1) / x.coeff(0));
}

inline bool ring_is_zero(const MultiPoly& x) { return x.is_zero(); }
inline MultiPoly ring_one(const MultiPoly& proto) {
    return MultiPoly::constant(proto.vars(), Rational(1));
}
inline MultiPoly ring_invert_unit(const MultiPoly& x) {
    if (x.is_zero()) throw SingularExpansionError("series: constant term is zero");
    if (!x.is_constant())
        throw SingularExpansionError("series: constant term is not a unit polynomial");
    return MultiPoly::constant(x.vars(), Rational(1) / x.constant_term());
}

// Power series truncated at a fixed order N: N+1 coefficients in a
// commutative ring C. All binary operations require equal orders.
template <typename C>
class TruncSeries {
public:
    TruncSeries(int order, C zero)
        : zero_(std::move(zero)), c_(static_cast<std::size_t>(order) + 1, C()) {
        if (order < 0) throw UsageError("TruncSeries: negative order");
        for (auto& x : c_) x = zero_;
    }

    static TruncSeries from_coeffs(int order, const std::vector<C>& coeffs, C zero) {
        TruncSeries s(order, std::move(zero));
        for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(order); ++i)
            s.c_[i] = coeffs[i];
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& coeff(int n) const { return c_.at(static_cast<std::size_t>(n)); }
    void set_coeff(int n, C v) { c_.at(static_cast<std::size_t>(n)) = std::move(v); }
    const C& zero_element() const { return zero_; }

    TruncSeries operator-() const {
        TruncSeries r(*this);
        for (auto& x : r.c_) x = zero_ - x;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        TruncSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        TruncSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        TruncSeries r(a.order(), a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }

    TruncSeries scale(const C& s) const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    // multiplicative inverse: result * (*this) = 1 + O(t^{N+1})
    TruncSeries invert() const {
        TruncSeries r(order(), zero_);
        C inv0 = ring_invert_unit(c_[0]);
        r.c_[0] = inv0;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            C acc = zero_;
            for (std::size_t j = 1; j <= n; ++j) {
                if (ring_is_zero(c_[j])) continue;
                acc = acc + c_[j] * r.c_[n - j];
            }
            r.c_[n] = zero_ - acc * inv0;
        }
        return r;
    }

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

private:
    void check_order(const TruncSeries& o) const {
        if (c_.size() != o.c_.size()) throw UsageError("TruncSeries: order mismatch");
    }

    C zero_;
    std::vector<C> c_;
};

} // namespace rps
