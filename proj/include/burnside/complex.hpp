#ifndef BURNSIDE_COMPLEX_HPP
#define BURNSIDE_COMPLEX_HPP

#include <stdexcept>
#include <string>

#include "burnside/real.hpp"

namespace burnside {

// Arbitrary-precision complex value as a pair of Reals.  The precision of
// a value is min(prec(re), prec(im)); arithmetic follows the Real rule, so
// the result of an operation carries the minimum precision of the operands.
class Complex {
  public:
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}
    Complex(const Rational& q, mpfr_prec_t prec) : re(q, prec), im(0L, prec) {}

    static Complex i(mpfr_prec_t prec) { return Complex(Real(0L, prec), Real(1L, prec)); }
    static Complex from(double r, double i, mpfr_prec_t prec) {
        Complex z(prec);
        mpfr_set_d(z.re.raw(), r, MPFR_RNDN);
        mpfr_set_d(z.im.raw(), i, MPFR_RNDN);
        return z;
    }

    mpfr_prec_t prec() const { return std::min(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_nan() const { return re.is_nan() || im.is_nan(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
    friend Complex operator*(const Complex& a, long s) { return {a.re * s, a.im * s}; }
    friend Complex operator*(long s, const Complex& a) { return a * s; }
    friend Complex operator/(const Complex& a, long s) { return {a.re / s, a.im / s}; }
    friend Complex operator+(const Complex& a, long s) { return {a.re + s, a.im}; }
    friend Complex operator+(long s, const Complex& a) { return a + s; }
    friend Complex operator-(const Complex& a, long s) { return {a.re - s, a.im}; }
    friend Complex operator-(long s, const Complex& a) { return {-a.re + s, -a.im}; }
    friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        // Smith's formula avoids overflow; magnitudes here are tame but the
        // branch costs nothing.
        if (abs(b.re) >= abs(b.im)) {
            Real r = b.im / b.re;
            Real d = b.re + b.im * r;
            return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
        }
        Real r = b.re / b.im;
        Real d = b.re * r + b.im;
        return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
    }

    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }

    friend Complex conj(const Complex& a) { return {a.re, -a.im}; }
    friend Complex mul_i(const Complex& a) { return {-a.im, a.re}; }

    friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
    friend Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
    friend Real arg(const Complex& a) { return atan2(a.im, a.re); }

    friend Complex exp(const Complex& a) {
        Real e = exp(a.re);
        Real c(a.prec()), s(a.prec());
        mpfr_sin_cos(s.raw(), c.raw(), a.im.raw(), MPFR_RNDN);
        return {e * c, e * s};
    }
    // Principal branch, cut on the negative real axis.
    friend Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }

    // Principal square root.
    friend Complex sqrt(const Complex& a) {
        if (a.im.is_zero()) {
            if (a.re.sign() >= 0) return {sqrt(a.re), Real(0L, a.prec())};
            return {Real(0L, a.prec()), sqrt(-a.re)};
        }
        Real m = abs(a);
        Real u = sqrt((m + abs(a.re)) / 2);
        Real v = a.im / (u * 2);
        if (a.re.sign() >= 0) return {u, v};
        // re < 0: |im|/(2u) is the real part
        Real w = abs(a.im) / (u * 2);
        return a.im.sign() >= 0 ? Complex{w, u} : Complex{w, -u};
    }

    friend Complex pow_int(const Complex& a, long e) {
        if (e == 0) return Complex(1, a.prec());
        Complex b = e > 0 ? a : Complex(1, a.prec()) / a;
        unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
        Complex acc(1, a.prec());
        while (n > 0) {
            if (n & 1) acc *= b;
            b *= b;
            n >>= 1;
        }
        return acc;
    }
    // Principal power z^(p/q) via exp((p/q) log z).
    friend Complex pow_rat(const Complex& a, const Rational& e) {
        Complex l = log(a);
        Real f(e, a.prec());
        return exp(Complex{l.re * f, l.im * f});
    }

    std::string str(size_t digits = 0) const {
        std::string s = re.str(digits);
        if (!im.is_zero()) {
            s += (im.sign() >= 0 ? " + " : " - ");
            s += abs(im).str(digits) + "*I";
        }
        return s;
    }
};

inline Complex operator/(long a, const Complex& b) { return Complex(a, b.prec()) / b; }

} // namespace burnside

#endif
