#ifndef BURNSIDE_LAURENT_HPP
#define BURNSIDE_LAURENT_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "burnside/complex.hpp"
#include "burnside/cyclo.hpp"
#include "burnside/rational.hpp"

namespace burnside {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational from_rational(const Rational& q) { return q; }
    static Complex embed(const Rational& x, mpfr_prec_t prec) { return Complex(x, prec); }
    static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct RingTraits<Cyclo> {
    static Cyclo zero() { return Cyclo(0); }
    static Cyclo one() { return Cyclo(1); }
    static bool is_zero(const Cyclo& x) { return x.is_zero(); }
    static Cyclo from_rational(const Rational& q) { return Cyclo(q); }
    static Complex embed(const Cyclo& x, mpfr_prec_t prec) { return x.embed(prec); }
    static std::string str(const Cyclo& x) { return x.str(); }
};

// Truncated formal Laurent series with an exponent stride:
//
//     S(q) = sum_k  c[k] q^(lead + step k),      0 <= k < size,
//
// exact coefficients in R (Rational or Cyclo).  `valid_to` semantics: the
// series is known modulo q^(lead + step*size); arithmetic propagates the
// minimum validity, so a truncated result never claims more terms than the
// inputs support.
template <class R>
class Series {
  public:
    using Tr = RingTraits<R>;

    long lead = 0;
    long step = 1;
    std::vector<R> c;

    Series() = default;
    Series(long lead_, long step_, std::vector<R> coeffs)
        : lead(lead_), step(step_), c(std::move(coeffs)) {
        if (step <= 0) throw std::invalid_argument("series step must be positive");
    }
    static Series constant(const R& v, long nterms, long step_ = 1) {
        std::vector<R> cc(static_cast<size_t>(nterms), Tr::zero());
        if (nterms > 0) cc[0] = v;
        return Series(0, step_, std::move(cc));
    }
    static Series monomial(const R& v, long expo, long nterms, long step_ = 1) {
        std::vector<R> cc(static_cast<size_t>(nterms), Tr::zero());
        if (nterms > 0) cc[0] = v;
        return Series(expo, step_, std::move(cc));
    }

    long size() const { return static_cast<long>(c.size()); }
    // exponent of the first unknown coefficient
    long valid_to() const { return lead + step * size(); }
    long exponent(long k) const { return lead + step * k; }

    const R& coeff_at(long expo) const {
        static const R z = Tr::zero();
        long d = expo - lead;
        if (d % step != 0) return z;
        long k = d / step;
        if (k < 0 || k >= size()) {
            if (expo >= valid_to()) throw std::out_of_range("coefficient beyond truncation");
            return z;
        }
        return c[static_cast<size_t>(k)];
    }
    R& at(long k) { return c[static_cast<size_t>(k)]; }
    const R& at(long k) const { return c[static_cast<size_t>(k)]; }

    // first index with nonzero coefficient, or size() if none
    long first_nonzero() const {
        for (long k = 0; k < size(); ++k)
            if (!Tr::is_zero(c[static_cast<size_t>(k)])) return k;
        return size();
    }
    bool is_zero_series() const { return first_nonzero() == size(); }

    // drop leading zero coefficients, keeping validity
    Series normalized() const {
        long f = first_nonzero();
        if (f == 0) return *this;
        Series out;
        out.lead = lead + step * f;
        out.step = step;
        out.c.assign(c.begin() + f, c.end());
        return out;
    }

    // re-grid onto a finer step (new_step must divide step)
    Series with_step(long new_step) const {
        if (step % new_step != 0) throw std::invalid_argument("with_step: incompatible stride");
        long r = step / new_step;
        if (r == 1) return *this;
        Series out;
        out.lead = lead;
        out.step = new_step;
        out.c.assign(static_cast<size_t>((size() - 1) * r + 1), Tr::zero());
        if (c.empty()) out.c.clear();
        for (long k = 0; k < size(); ++k) out.c[static_cast<size_t>(k * r)] = c[static_cast<size_t>(k)];
        return out;
    }

    Series truncated(long nterms) const {
        Series out = *this;
        if (nterms < out.size()) out.c.resize(static_cast<size_t>(nterms));
        return out;
    }

    friend Series operator-(const Series& a) {
        Series out = a;
        for (auto& v : out.c) v = -v;
        return out;
    }

    friend Series operator+(const Series& a, const Series& b) { return add_sub(a, b, false); }
    friend Series operator-(const Series& a, const Series& b) { return add_sub(a, b, true); }

    friend Series operator*(const Series& a, const Series& b) {
        auto [x, y] = align_steps(a, b);
        Series out;
        out.step = x.step;
        out.lead = x.lead + y.lead;
        long vt = std::min(x.lead + y.valid_to(), y.lead + x.valid_to());
        long n = (vt - out.lead) / out.step;
        out.c.assign(static_cast<size_t>(std::max(0L, n)), Tr::zero());
        for (long i = 0; i < x.size(); ++i) {
            if (Tr::is_zero(x.c[static_cast<size_t>(i)])) continue;
            long jmax = std::min(y.size(), n - i);
            for (long j = 0; j < jmax; ++j) {
                if (Tr::is_zero(y.c[static_cast<size_t>(j)])) continue;
                out.c[static_cast<size_t>(i + j)] +=
                    x.c[static_cast<size_t>(i)] * y.c[static_cast<size_t>(j)];
            }
        }
        return out;
    }

    friend Series operator*(const Series& a, const R& s) {
        Series out = a;
        for (auto& v : out.c) v = v * s;
        return out;
    }
    friend Series operator*(const R& s, const Series& a) { return a * s; }

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series shifted(long dexpo) const {
        Series out = *this;
        out.lead += dexpo;
        return out;
    }

    // exact division; divisor's first stored coefficient must be a unit
    friend Series operator/(const Series& a, const Series& b) {
        Series bn = b.normalized();
        if (bn.c.empty() || Tr::is_zero(bn.c[0]))
            throw std::domain_error("series division by zero leading term");
        auto [x, y] = align_steps(a, bn);
        Series out;
        out.step = x.step;
        out.lead = x.lead - y.lead;
        long vt = std::min(x.valid_to() - y.lead, out.lead + y.valid_to() - y.lead);
        long n = (vt - out.lead) / out.step;
        out.c.assign(static_cast<size_t>(std::max(0L, n)), Tr::zero());
        R inv0 = Tr::one() / y.c[0];
        std::vector<R> rem(x.c.begin(), x.c.end());
        rem.resize(static_cast<size_t>(std::max<long>(n, x.size())), Tr::zero());
        for (long k = 0; k < n; ++k) {
            R qk = rem[static_cast<size_t>(k)] * inv0;
            out.c[static_cast<size_t>(k)] = qk;
            if (Tr::is_zero(qk)) continue;
            long jmax = std::min<long>(y.size(), n - k);
            for (long j = 1; j < jmax; ++j)
                rem[static_cast<size_t>(k + j)] -= qk * y.c[static_cast<size_t>(j)];
        }
        return out;
    }

    friend Series pow_int(const Series& a, long e) {
        if (e < 0) return pow_int(Series::constant(Tr::one(), a.size(), a.step) / a, -e);
        // plain repeated multiplication keeps validity bookkeeping simple;
        // exponents here are tiny (<= 8)
        Series result = Series::constant(Tr::one(), a.size(), a.step);
        for (long i = 0; i < e; ++i) result = result * a;
        return result;
    }

    // d/dq
    Series derivative() const {
        Series out = *this;
        out.lead = lead - 1;
        for (long k = 0; k < size(); ++k)
            out.c[static_cast<size_t>(k)] = c[static_cast<size_t>(k)] * Rational(exponent(k));
        return out;
    }

    // q d/dq (exponent-preserving Euler operator)
    Series theta() const {
        Series out = *this;
        for (long k = 0; k < size(); ++k)
            out.c[static_cast<size_t>(k)] = c[static_cast<size_t>(k)] * Rational(exponent(k));
        return out;
    }

    // termwise antiderivative; fails on a q^{-1} term
    Series antiderivative() const {
        Series out = *this;
        out.lead = lead + 1;
        for (long k = 0; k < size(); ++k) {
            long e = exponent(k);
            if (e == -1 && !Tr::is_zero(c[static_cast<size_t>(k)]))
                throw std::domain_error("antiderivative of q^-1 term");
            out.c[static_cast<size_t>(k)] =
                e == -1 ? Tr::zero() : c[static_cast<size_t>(k)] * rat(1, e + 1);
        }
        return out;
    }

    // sqrt of 1 + T where this series is 1 + T (lead exponent 0, c[0] = 1)
    Series sqrt_one_plus() const {
        if (lead != 0 || c.empty() || !(c[0] == Tr::one()))
            throw std::domain_error("sqrt_one_plus: series must start with 1");
        Series out = *this;
        std::fill(out.c.begin(), out.c.end(), Tr::zero());
        out.c[0] = Tr::one();
        Rational half = rat(1, 2);
        for (long k = 1; k < size(); ++k) {
            R acc = c[static_cast<size_t>(k)];
            for (long j = 1; j < k; ++j)
                acc = acc - out.c[static_cast<size_t>(j)] * out.c[static_cast<size_t>(k - j)];
            out.c[static_cast<size_t>(k)] = acc * Tr::from_rational(half);
        }
        return out;
    }

    // composition S(T); T's exponents must stay on one grid when raised to
    // the powers appearing in S (requires step * T.lead ≡ 0 mod T.step).
    friend Series compose(const Series& s, const Series& t) {
        if (s.lead < 0) throw std::domain_error("compose: negative lead unsupported");
        if ((s.step * t.lead) % t.step != 0)
            throw std::domain_error("compose: incompatible exponent grids");
        Series u = pow_int(t, s.step);
        Series acc = Series::constant(s.c.empty() ? Tr::zero() : s.c.back(),
                                      u.size(), u.step);
        acc.lead = 0;
        for (long k = s.size() - 2; k >= 0; --k) {
            acc = acc * u;
            // keep grid: add constant on acc's grid
            Series cst = Series::constant(s.c[static_cast<size_t>(k)], acc.size(), acc.step);
            acc = acc + cst;
        }
        return acc * pow_int(t, s.lead);
    }

    // functional inverse of S (requires lead exponent exactly 1); returns T
    // with S(T(w)) = w + O(w^{valid}).
    friend Series revert(const Series& s) {
        if (s.lead != 1 || s.c.empty() || Tr::is_zero(s.c[0]))
            throw std::domain_error("revert: series must be w*(unit + ...)");
        // Newton: T <- T - (S(T) - w)/S'(T)
        Series t = Series::monomial(Tr::one() / s.c[0], 1, 1, s.step);
        long target = s.size();
        while (t.size() < target) {
            long n = std::min<long>(target, 2 * t.size());
            t.c.resize(static_cast<size_t>(n), Tr::zero());
            Series st = compose(s.truncated(n), t);
            Series w = Series::monomial(Tr::one(), 1, std::max(1L, n), st.step);
            // align w's grid with st
            Series f = st - w.with_step(std::gcd(st.step, w.step));
            Series sp = compose(s.derivative().truncated(n), t);
            Series corr = f / sp;
            t = t - corr.with_step(std::gcd(t.step, corr.step));
            t = t.with_step(std::gcd(t.step, s.step));
            if (t.size() > n) t.c.resize(static_cast<size_t>(n));
        }
        return t;
    }

    // Horner evaluation at numeric q with a crude tail estimate from the
    // last retained term.
    struct EvalResult {
        Complex value;
        Real tail;
    };
    EvalResult eval(const Complex& q, mpfr_prec_t prec) const {
        Complex u = pow_int(q, step);
        Complex acc(prec);
        for (long k = size() - 1; k >= 0; --k) {
            acc = acc * u;
            if (!Tr::is_zero(c[static_cast<size_t>(k)]))
                acc += Tr::embed(c[static_cast<size_t>(k)], prec);
        }
        Complex val = acc * pow_int(q, lead);
        Real last(0L, prec);
        if (!c.empty() && !Tr::is_zero(c.back()))
            last = abs(Tr::embed(c.back(), prec)) * pow_si(abs(q), valid_to() - step);
        Real ratio = pow_si(abs(q), step);
        Real tail = ratio < Real(1L, prec) ? last * ratio / (Real(1L, prec) - ratio) : last;
        return {val, tail};
    }

    bool all_integer() const {
        if constexpr (std::is_same_v<R, Rational>) {
            for (auto& v : c)
                if (v.get_den() != 1) return false;
            return true;
        } else {
            for (auto& v : c)
                if (!(is_integer(v.c0) && is_integer(v.c1) && is_integer(v.c2) &&
                      is_integer(v.c3)))
                    return false;
            return true;
        }
    }

  private:
    static std::pair<Series, Series> align_steps(const Series& a, const Series& b) {
        long g = std::gcd(a.step, b.step);
        return {a.with_step(g), b.with_step(g)};
    }

    static Series add_sub(const Series& a, const Series& b, bool sub) {
        if (a.is_zero_series() && a.c.empty()) return sub ? -b : b;
        long g = std::gcd(a.step, b.step);
        long diff = a.lead - b.lead;
        if (diff % g != 0) g = std::gcd(g, std::abs(diff));
        Series x = a.with_step(g), y = b.with_step(g);
        Series out;
        out.step = g;
        out.lead = std::min(x.lead, y.lead);
        long vt = std::min(x.valid_to(), y.valid_to());
        long n = (vt - out.lead) / g;
        out.c.assign(static_cast<size_t>(std::max(0L, n)), Tr::zero());
        for (long k = 0; k < n; ++k) {
            long e = out.lead + g * k;
            R av = Tr::zero(), bv = Tr::zero();
            long ia = (e - x.lead) / g, ib = (e - y.lead) / g;
            if (ia >= 0 && ia < x.size()) av = x.c[static_cast<size_t>(ia)];
            if (ib >= 0 && ib < y.size()) bv = y.c[static_cast<size_t>(ib)];
            out.c[static_cast<size_t>(k)] = sub ? R(av - bv) : R(av + bv);
        }
        return out;
    }
};

using QSeries = Series<Rational>;
using CycloSeries = Series<Cyclo>;

inline CycloSeries to_cyclo(const QSeries& s) {
    std::vector<Cyclo> cc;
    cc.reserve(s.c.size());
    for (auto& v : s.c) cc.emplace_back(v);
    return CycloSeries(s.lead, s.step, std::move(cc));
}

} // namespace burnside

#endif
