#pragma once

// Arbitrary-precision real arithmetic under an explicit decimal digit budget.
//
// Backed by MPFR (binary mantissas).  A context of D decimal digits maps to
// ceil(D*log2(10)) + 32 bits, so every value carries at least 9 guard digits
// beyond the declared budget.  All operations round to nearest (MPFR_RNDN);
// this is the fixed rounding discipline for the whole library.  Results are
// therefore deterministic digit-for-digit across runs and platforms.

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>

#include "covering/errors.hpp"

namespace covering {

class PrecisionContext {
public:
    explicit PrecisionContext(int digits = 50) : digits_(digits) {
        if (digits < 30) {
            throw parameter_error("PrecisionContext: need at least 30 decimal digits, got " +
                                  std::to_string(digits));
        }
    }

    int digits() const noexcept { return digits_; }

    mpfr_prec_t bits() const noexcept {
        // log2(10) = 3.3219...; +32 guard bits.
        return static_cast<mpfr_prec_t>(std::ceil(digits_ * 3.3219280948873626)) + 32;
    }

private:
    int digits_;
};

class Scalar {
public:
    explicit Scalar(const PrecisionContext& ctx) : digits_(ctx.digits()) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_zero(v_, 1);
    }

    Scalar(long value, const PrecisionContext& ctx) : digits_(ctx.digits()) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_si(v_, value, MPFR_RNDN);
    }

    Scalar(int value, const PrecisionContext& ctx) : Scalar(static_cast<long>(value), ctx) {}

    Scalar(const Scalar& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    Scalar(Scalar&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    Scalar& operator=(const Scalar& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            digits_ = o.digits_;
        }
        return *this;
    }

    Scalar& operator=(Scalar&& o) noexcept {
        if (this != &o) {
            mpfr_swap(v_, o.v_);
            digits_ = o.digits_;
        }
        return *this;
    }

    ~Scalar() { mpfr_clear(v_); }

    // Exact conversion from a machine double (doubles are dyadic rationals).
    static Scalar from_double(double value, const PrecisionContext& ctx) {
        Scalar s(ctx);
        mpfr_set_d(s.v_, value, MPFR_RNDN);
        return s;
    }

    // Parses a decimal string (plain or scientific notation).
    static Scalar parse(std::string_view text, const PrecisionContext& ctx) {
        size_t b = text.find_first_not_of(" \t");
        size_t e = text.find_last_not_of(" \t");
        if (b == std::string_view::npos) {
            throw parameter_error("Scalar::parse: empty input");
        }
        std::string t(text.substr(b, e - b + 1));
        Scalar s(ctx);
        char* endp = nullptr;
        mpfr_strtofr(s.v_, t.c_str(), &endp, 10, MPFR_RNDN);
        if (endp != t.c_str() + t.size() || t.empty()) {
            throw parameter_error("Scalar::parse: not a decimal number: '" + t + "'");
        }
        return s;
    }

    int digits() const noexcept { return digits_; }
    PrecisionContext context() const { return PrecisionContext(digits_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    mpfr_srcptr raw() const noexcept { return v_; }
    mpfr_ptr raw() noexcept { return v_; }

    // Formats to `significant` decimal digits (0 = the full digit budget).
    // Plain decimal notation for magnitudes near 1, scientific otherwise.
    std::string str(int significant = 0) const {
        int n = (significant > 0) ? significant : digits_;
        if (mpfr_zero_p(v_)) return "0";
        mpfr_exp_t exp = 0;
        char* raw10 = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(n), v_, MPFR_RNDN);
        std::string mant(raw10);
        mpfr_free_str(raw10);
        bool neg = !mant.empty() && mant[0] == '-';
        if (neg) mant.erase(0, 1);
        // value = 0.mant * 10^exp
        size_t last = mant.find_last_not_of('0');
        mant.erase(last == std::string::npos ? 1 : last + 1);
        if (mant == "0") return "0";
        std::string out;
        long e = static_cast<long>(exp);
        if (e >= -3 && e <= 21) {
            if (e <= 0) {
                out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
            } else if (static_cast<size_t>(e) >= mant.size()) {
                out = mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
            } else {
                out = mant.substr(0, static_cast<size_t>(e)) + "." +
                      mant.substr(static_cast<size_t>(e));
            }
        } else {
            out = mant.substr(0, 1);
            if (mant.size() > 1) out += "." + mant.substr(1);
            out += "e" + std::to_string(e - 1);
        }
        return neg ? "-" + out : out;
    }

private:
    friend Scalar binary_result(const Scalar& a, const Scalar& b);

    mpfr_t v_;
    int digits_;
};

// Result carries the wider of the two operand budgets.
inline Scalar binary_result(const Scalar& a, const Scalar& b) {
    return Scalar(PrecisionContext(a.digits_ >= b.digits_ ? a.digits_ : b.digits_));
}

inline Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r = binary_result(a, b);
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

inline Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r = binary_result(a, b);
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

inline Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r = binary_result(a, b);
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

inline Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw domain_error("Scalar division by zero");
    Scalar r = binary_result(a, b);
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

inline Scalar operator-(const Scalar& a) {
    Scalar r(a);
    mpfr_neg(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

inline Scalar operator+(const Scalar& a, long b) { return a + Scalar(b, a.context()); }
inline Scalar operator+(long a, const Scalar& b) { return Scalar(a, b.context()) + b; }
inline Scalar operator-(const Scalar& a, long b) { return a - Scalar(b, a.context()); }
inline Scalar operator-(long a, const Scalar& b) { return Scalar(a, b.context()) - b; }
inline Scalar operator*(const Scalar& a, long b) { return a * Scalar(b, a.context()); }
inline Scalar operator*(long a, const Scalar& b) { return Scalar(a, b.context()) * b; }
inline Scalar operator/(const Scalar& a, long b) { return a / Scalar(b, a.context()); }
inline Scalar operator/(long a, const Scalar& b) { return Scalar(a, b.context()) / b; }

inline bool operator==(const Scalar& a, const Scalar& b) { return mpfr_cmp(a.raw(), b.raw()) == 0; }
inline bool operator!=(const Scalar& a, const Scalar& b) { return mpfr_cmp(a.raw(), b.raw()) != 0; }
inline bool operator<(const Scalar& a, const Scalar& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
inline bool operator<=(const Scalar& a, const Scalar& b) { return mpfr_cmp(a.raw(), b.raw()) <= 0; }
inline bool operator>(const Scalar& a, const Scalar& b) { return mpfr_cmp(a.raw(), b.raw()) > 0; }
inline bool operator>=(const Scalar& a, const Scalar& b) { return mpfr_cmp(a.raw(), b.raw()) >= 0; }

inline Scalar eval_abs(const Scalar& x) {
    Scalar r(x);
    mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

inline Scalar eval_sqrt(const Scalar& x) {
    if (x.sign() < 0) {
        throw domain_error("eval_sqrt: negative argument " + x.str(20));
    }
    Scalar r(x);
    mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

inline Scalar eval_sin(const Scalar& x) {
    Scalar r(x);
    mpfr_sin(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

inline Scalar eval_cos(const Scalar& x) {
    Scalar r(x);
    mpfr_cos(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

inline Scalar eval_asin(const Scalar& x) {
    if (mpfr_cmp_si(x.raw(), 1) > 0 || mpfr_cmp_si(x.raw(), -1) < 0) {
        throw domain_error("eval_asin: argument " + x.str(20) + " outside [-1, 1]");
    }
    Scalar r(x);
    mpfr_asin(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

inline Scalar eval_atan2(const Scalar& y, const Scalar& x) {
    if (x.is_zero() && y.is_zero()) {
        throw domain_error("eval_atan2: both arguments zero");
    }
    Scalar r = binary_result(y, x);
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline Scalar const_pi(const PrecisionContext& ctx) {
    Scalar r(ctx);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

// 10^k, used for precision-scaled tolerances such as 10^(5 - digits).
inline Scalar pow10(long k, const PrecisionContext& ctx) {
    Scalar e(k, ctx);
    Scalar r(ctx);
    mpfr_exp10(r.raw(), e.raw(), MPFR_RNDN);
    return r;
}

inline const Scalar& scalar_min(const Scalar& a, const Scalar& b) { return a <= b ? a : b; }
inline const Scalar& scalar_max(const Scalar& a, const Scalar& b) { return a >= b ? a : b; }

} // namespace covering
