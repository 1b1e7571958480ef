#ifndef BURNSIDE_CYCLO_HPP
#define BURNSIDE_CYCLO_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "burnside/complex.hpp"
#include "burnside/rational.hpp"

namespace burnside {

// Element of the degree-4 number field Q(i, sqrt2), written on the basis
// {1, sqrt2, i, i*sqrt2}:
//
//     a = c0 + c1*sqrt2 + c2*i + c3*i*sqrt2.
//
// Every exact constant appearing in this project lives here: the branch
// multipliers {1, -1, i, -i} and their square roots, k± = (1±sqrt2)/2,
// gamma = sqrt2 - 1, e' = -(3+sqrt2)/6, and so on.  Note
// sqrt(i) = (1+i)/sqrt2 = (sqrt2 + i*sqrt2)/2 is itself an element.
class Cyclo {
  public:
    Rational c0, c1, c2, c3;

    Cyclo() : c0(0), c1(0), c2(0), c3(0) {}
    Cyclo(const Rational& q) : c0(q), c1(0), c2(0), c3(0) {}
    Cyclo(long n) : c0(n), c1(0), c2(0), c3(0) {}
    Cyclo(Rational a, Rational b, Rational c, Rational d)
        : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)), c3(std::move(d)) {}

    static Cyclo i() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
    static Cyclo sqrt2() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
    static Cyclo i_sqrt2() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }
    // sqrt(i) and sqrt(-i), principal branches
    static Cyclo sqrt_i() { return {Rational(0), rat(1, 2), Rational(0), rat(1, 2)}; }
    static Cyclo sqrt_minus_i() { return {Rational(0), rat(1, 2), Rational(0), rat(-1, 2)}; }
    // e^{i pi/4} = (1+i)/sqrt2
    static Cyclo exp_i_pi_4() { return sqrt_i(); }

    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0 && c3 == 0; }
    bool is_rational() const { return c1 == 0 && c2 == 0 && c3 == 0; }
    bool is_real() const { return c2 == 0 && c3 == 0; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3};
    }
    friend Cyclo operator-(const Cyclo& a) { return {-a.c0, -a.c1, -a.c2, -a.c3}; }

    // Multiplication table: sqrt2^2 = 2, i^2 = -1, (i sqrt2)^2 = -2.
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        return {a.c0 * b.c0 + 2 * a.c1 * b.c1 - a.c2 * b.c2 - 2 * a.c3 * b.c3,
                a.c0 * b.c1 + a.c1 * b.c0 - a.c2 * b.c3 - a.c3 * b.c2,
                a.c0 * b.c2 + a.c2 * b.c0 + 2 * (a.c1 * b.c3 + a.c3 * b.c1),
                a.c0 * b.c3 + a.c3 * b.c0 + a.c1 * b.c2 + a.c2 * b.c1};
    }
    friend Cyclo operator*(const Cyclo& a, const Rational& s) {
        return {a.c0 * s, a.c1 * s, a.c2 * s, a.c3 * s};
    }
    friend Cyclo operator*(const Rational& s, const Cyclo& a) { return a * s; }
    friend Cyclo operator*(const Cyclo& a, long s) { return a * Rational(s); }
    friend Cyclo operator*(long s, const Cyclo& a) { return a * Rational(s); }

    // Galois conjugations
    friend Cyclo conj_i(const Cyclo& a) { return {a.c0, a.c1, -a.c2, -a.c3}; }
    friend Cyclo conj_sqrt2(const Cyclo& a) { return {a.c0, -a.c1, a.c2, -a.c3}; }

    Cyclo inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(i,sqrt2)");
        // product of the other three Galois conjugates; a * cof is the
        // rational field norm
        Cyclo cof = conj_i(*this) * conj_sqrt2(*this) * conj_i(conj_sqrt2(*this));
        Cyclo n = *this * cof;
        if (!(n.c1 == 0 && n.c2 == 0 && n.c3 == 0) || n.c0 == 0)
            throw std::logic_error("field norm not rational");
        return cof * (Rational(1) / n.c0);
    }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

    friend Cyclo pow_int(const Cyclo& a, long e) {
        if (e == 0) return Cyclo(1);
        Cyclo b = e > 0 ? a : a.inverse();
        unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
        Cyclo acc(1);
        while (n > 0) {
            if (n & 1) acc *= b;
            b *= b;
            n >>= 1;
        }
        return acc;
    }

    // Numeric embedding into C at precision P bits.
    Complex embed(mpfr_prec_t prec) const {
        Real s2 = sqrt(Real(2L, prec));
        return {Real(c0, prec) + Real(c1, prec) * s2, Real(c2, prec) + Real(c3, prec) * s2};
    }

    std::string str() const {
        auto piece = [](const Rational& c, const char* unit, bool& first) -> std::string {
            if (c == 0) return "";
            std::string s;
            if (!first) s += (c > 0 ? " + " : " - ");
            else if (c < 0) s += "-";
            Rational a = c > 0 ? c : Rational(-c);
            bool unit_only = (a == 1 && unit[0] != '\0');
            if (!unit_only) s += a.get_str();
            if (unit[0] != '\0') {
                if (!unit_only) s += "*";
                s += unit;
            }
            first = false;
            return s;
        };
        bool first = true;
        std::string s = piece(c0, "", first);
        s += piece(c1, "sqrt2", first);
        s += piece(c2, "i", first);
        s += piece(c3, "i*sqrt2", first);
        return first ? "0" : s;
    }
};

enum class CycloOp { add, sub, mul, div };

inline Cyclo cyclo_arith(const Cyclo& a, const Cyclo& b, CycloOp op) {
    switch (op) {
        case CycloOp::add: return a + b;
        case CycloOp::sub: return a - b;
        case CycloOp::mul: return a * b;
        case CycloOp::div: return a / b;
    }
    throw std::logic_error("unreachable");
}

} // namespace burnside

#endif
