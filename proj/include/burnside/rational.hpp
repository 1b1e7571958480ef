#ifndef BURNSIDE_RATIONAL_HPP
#define BURNSIDE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace burnside {

// Exact rational arithmetic is carried by GMP's mpq_class.  GMP keeps
// results canonical (positive denominator, reduced) as long as inputs are
// canonical, so the only care needed is canonicalize() after raw
// numerator/denominator construction.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw std::domain_error("0^negative");
        b = Rational(1) / b;
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Exact square root of a rational if it is a perfect square, else false.
inline bool sqrt_exact(const Rational& r, Rational& out) {
    if (r < 0) return false;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rational(sn, sd);
    out.canonicalize();
    return true;
}

// sigma_k(n): sum of k-th powers of positive divisors.  Trial division is
// plenty for the series orders used here.
inline mpz_class divisor_sigma(unsigned k, unsigned long n) {
    mpz_class total = 0;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class dd(static_cast<unsigned long>(d));
        mpz_class e(static_cast<unsigned long>(n / d));
        mpz_class dp, ep;
        mpz_pow_ui(dp.get_mpz_t(), dd.get_mpz_t(), k);
        total += dp;
        if (d * d != n) {
            mpz_pow_ui(ep.get_mpz_t(), e.get_mpz_t(), k);
            total += ep;
        }
    }
    return total;
}

} // namespace burnside

#endif
