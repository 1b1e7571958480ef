#ifndef BURNSIDE_REAL_HPP
#define BURNSIDE_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "burnside/rational.hpp"

namespace burnside {

// RAII wrapper around mpfr_t.  Every value carries its own precision in
// bits; binary operations round to the minimum precision of the operands,
// so precision never silently inflates through a computation.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    Real(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real from_string(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("bad real literal: " + s);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // 2^e as an exact Real (used for tolerances).
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_nan() const { return mpfr_nan_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    friend mpfr_prec_t min_prec(const Real& a, const Real& b) {
        return std::min(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }

#define BURNSIDE_REAL_BINOP(op, fn)                           \
    friend Real operator op(const Real& a, const Real& b) {  \
        Real r(min_prec(a, b));                               \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                      \
        return r;                                             \
    }
    BURNSIDE_REAL_BINOP(+, mpfr_add)
    BURNSIDE_REAL_BINOP(-, mpfr_sub)
    BURNSIDE_REAL_BINOP(*, mpfr_mul)
    BURNSIDE_REAL_BINOP(/, mpfr_div)
#undef BURNSIDE_REAL_BINOP

    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, long b) {
        Real r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        Real r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, long b) {
        Real r(a.prec());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, long b) {
        Real r(a.prec());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v_, b.v_); }

#define BURNSIDE_REAL_FN(name, fn)         \
    friend Real name(const Real& a) {      \
        Real r(a.prec());                  \
        fn(r.v_, a.v_, MPFR_RNDN);         \
        return r;                          \
    }
    BURNSIDE_REAL_FN(abs, mpfr_abs)
    BURNSIDE_REAL_FN(sqrt, mpfr_sqrt)
    BURNSIDE_REAL_FN(exp, mpfr_exp)
    BURNSIDE_REAL_FN(log, mpfr_log)
    BURNSIDE_REAL_FN(sin, mpfr_sin)
    BURNSIDE_REAL_FN(cos, mpfr_cos)
    BURNSIDE_REAL_FN(tan, mpfr_tan)
    BURNSIDE_REAL_FN(sinh, mpfr_sinh)
    BURNSIDE_REAL_FN(cosh, mpfr_cosh)
    BURNSIDE_REAL_FN(tanh, mpfr_tanh)
    BURNSIDE_REAL_FN(gamma, mpfr_gamma)
    BURNSIDE_REAL_FN(round_nearest, mpfr_rint_round)
#undef BURNSIDE_REAL_FN

    friend Real atan2(const Real& y, const Real& x) {
        Real r(min_prec(y, x));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real hypot(const Real& x, const Real& y) {
        Real r(min_prec(x, y));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real agm(const Real& a, const Real& b) {
        Real r(min_prec(a, b));
        mpfr_agm(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow_si(const Real& a, long e) {
        Real r(a.prec());
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend Real ldexp2(const Real& a, long e) {
        Real r(a.prec());
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

    // Decimal string with the given number of significant digits.
    std::string str(size_t digits = 0) const {
        if (digits == 0) digits = static_cast<size_t>(prec() * 0.30103) + 1;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

  private:
    mpfr_t v_;
};

} // namespace burnside

#endif
