#ifndef BURNSIDE_FINITE_DIFF_HPP
#define BURNSIDE_FINITE_DIFF_HPP

#include <array>
#include <functional>
#include <vector>

#include "burnside/complex.hpp"
#include "burnside/rational.hpp"
#include "burnside/tolerance.hpp"

namespace burnside {

using ComplexFn = std::function<Complex(const Complex&)>;

// Raise a value to a higher working precision (pads with zero bits).
inline Complex lift(const Complex& z, mpfr_prec_t prec) {
    Complex out(prec);
    mpfr_set(out.re.raw(), z.re.raw(), MPFR_RNDN);
    mpfr_set(out.im.raw(), z.im.raw(), MPFR_RNDN);
    return out;
}

inline Real lift(const Real& x, mpfr_prec_t prec) {
    Real out(prec);
    mpfr_set(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

// 8th-order central stencils.  The third derivative uses a triple
// convolution of the first-derivative stencil (offsets -12..12), which
// keeps the truncation order at 8 without a hand-derived D3 table.
namespace stencil {

inline const std::array<Rational, 9>& d1() {
    static const std::array<Rational, 9> c = {rat(1, 280), rat(-4, 105), rat(1, 5),
                                              rat(-4, 5),  rat(0),       rat(4, 5),
                                              rat(-1, 5),  rat(4, 105),  rat(-1, 280)};
    return c;
}

inline const std::array<Rational, 9>& d2() {
    static const std::array<Rational, 9> c = {rat(-1, 560), rat(8, 315),   rat(-1, 5),
                                              rat(8, 5),    rat(-205, 72), rat(8, 5),
                                              rat(-1, 5),   rat(8, 315),   rat(-1, 560)};
    return c;
}

inline const std::vector<Rational>& d3() {
    static const std::vector<Rational> c = [] {
        std::vector<Rational> a(stencil::d1().begin(), stencil::d1().end());
        auto convolve = [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
            std::vector<Rational> r(x.size() + y.size() - 1, Rational(0));
            for (size_t i = 0; i < x.size(); ++i)
                for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
            return r;
        };
        return convolve(convolve(a, a), a); // offsets -12..12
    }();
    return c;
}

} // namespace stencil

struct Derivatives3 {
    Complex f0, d1, d2, d3;
};

// f', f'', f''' of an analytic f at x, sampling f at x + k h for k in
// -12..12.  Callers pick h ~ 2^(-P/6) and evaluate at doubled working
// precision so cancellation stays far below the residual tolerances.
inline Derivatives3 derivatives3(const ComplexFn& f, const Complex& x, const Real& h) {
    mpfr_prec_t prec = x.prec();
    std::array<Complex, 25> v;
    for (int k = -12; k <= 12; ++k) v[k + 12] = f(x + Complex{h * k, Real(0L, prec)});

    Complex a1(prec), a2(prec), a3(prec);
    for (int k = -4; k <= 4; ++k) {
        const Rational& c1 = stencil::d1()[k + 4];
        const Rational& c2 = stencil::d2()[k + 4];
        if (c1 != 0) a1 += v[k + 12] * Real(c1, prec);
        if (c2 != 0) a2 += v[k + 12] * Real(c2, prec);
    }
    for (int k = -12; k <= 12; ++k) {
        const Rational& c3 = stencil::d3()[k + 12];
        if (c3 != 0) a3 += v[k + 12] * Real(c3, prec);
    }
    Real h2 = h * h;
    return {v[12], a1 / h, a2 / h2, a3 / (h2 * h)};
}

inline Complex fd_second_derivative(const ComplexFn& f, const Complex& x, const Real& h) {
    mpfr_prec_t prec = x.prec();
    Complex acc(prec);
    for (int k = -4; k <= 4; ++k) {
        const Rational& c = stencil::d2()[k + 4];
        if (c != 0) acc += f(x + Complex{h * k, Real(0L, prec)}) * Real(c, prec);
    }
    return acc / (h * h);
}

inline Complex fd_first_derivative(const ComplexFn& f, const Complex& x, const Real& h) {
    mpfr_prec_t prec = x.prec();
    Complex acc(prec);
    for (int k = -4; k <= 4; ++k) {
        const Rational& c = stencil::d1()[k + 4];
        if (c != 0) acc += f(x + Complex{h * k, Real(0L, prec)}) * Real(c, prec);
    }
    return acc / h;
}

// Schwarzian derivative {f, x} = f'''/f' - (3/2)(f''/f')^2 from samples.
inline Complex schwarzian(const Derivatives3& d) {
    Complex r = d.d2 / d.d1;
    return d.d3 / d.d1 - r * r * Real(rat(3, 2), d.d1.prec());
}

inline Complex schwarzian_fd(const ComplexFn& f, const Complex& x, const Real& h) {
    return schwarzian(derivatives3(f, x, h));
}

// The meromorphic derivative [f, x] = {f, x}/f_x^2.  It annihilates Moebius
// maps and obeys the chain rule
//   [X(q(x)), x] = [X, q] + (1/X_q^2) [q, x]   at q = q(x).
inline Complex meromorphic_derivative(const ComplexFn& f, const Complex& x, const Real& h) {
    Derivatives3 d = derivatives3(f, x, h);
    if (d.d1.is_zero()) throw NearSingularity("fold point: f_x vanishes");
    return schwarzian(d) / (d.d1 * d.d1);
}

// Canonical step for P-bit verification runs (evaluation happens at 2P).
inline Real fd_step(mpfr_prec_t p_bits, mpfr_prec_t work_prec) {
    return Real::pow2(-(static_cast<long>(p_bits) / 6), work_prec);
}

} // namespace burnside

#endif
