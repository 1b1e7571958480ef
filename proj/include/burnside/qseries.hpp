#ifndef BURNSIDE_QSERIES_HPP
#define BURNSIDE_QSERIES_HPP

#include <vector>

#include "burnside/laurent.hpp"

namespace burnside {

// One factor family prod_{k>=1} (1 + sign q^{period k - offset})^exponent.
struct EtaFactor {
    long period;
    long offset; // exponent is period*k - offset, k = 1, 2, ...
    int sign;    // +1 or -1
    long exponent;
};

struct EtaProductSpec {
    std::vector<EtaFactor> factors;
    Cyclo leading = Cyclo(1);
    long lead_exp = 0; // leading monomial q-power
};

// Exact expansion of an eta-style product through exponent < limit.
inline QSeries eta_product_series(const EtaProductSpec& spec, long limit) {
    long step = limit;
    for (auto& f : spec.factors) {
        for (long k = 1;; ++k) {
            long e = f.period * k - f.offset;
            if (e >= limit) break;
            step = std::gcd(step, e);
        }
    }
    if (step == limit) step = 1;
    long n = (limit + step - 1) / step;
    QSeries acc = QSeries::constant(Rational(1), n, step);
    for (auto& f : spec.factors) {
        for (long k = 1;; ++k) {
            long e = f.period * k - f.offset;
            if (e >= limit) break;
            // multiply by (1 + sign q^e)^{exponent} via binomial expansion
            QSeries fac = QSeries::constant(Rational(1), n, step);
            Rational binom(1);
            Rational sgn(f.sign);
            for (long j = 1; j <= f.exponent; ++j) {
                binom = binom * Rational(f.exponent - j + 1) / Rational(j);
                long ee = e * j;
                if (ee >= limit) break;
                if (ee % step != 0) throw std::logic_error("eta product off-grid exponent");
                fac.c[static_cast<size_t>(ee / step)] = binom * pow_rat(sgn, j);
            }
            acc = acc * fac;
        }
    }
    return acc.shifted(spec.lead_exp);
}

// (1 + 2 sum_{k>=1} q^{8 k^2})^4 -- the theta_3 fourth power carried by
// Theta_1 at the infinite cusp.
inline QSeries theta3_pow4_series(long limit) {
    long n = (limit + 7) / 8;
    QSeries t(0, 8, std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    t.c[0] = 1;
    for (long k = 1; 8 * k * k < limit; ++k) t.c[static_cast<size_t>(k * k)] = 2;
    QSeries t2 = t * t;
    return (t2 * t2).truncated(n);
}

// sum_{k>=0} sigma_1(2k+1) q^{4k}
inline QSeries sigma1_odd_series(long terms) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(terms));
    for (long k = 0; k < terms; ++k)
        c.emplace_back(divisor_sigma(1, static_cast<unsigned long>(2 * k + 1)));
    return QSeries(0, 4, std::move(c));
}

// g2(tau)/(20 pi^4) = 1/240 + sum_{n>=1} sigma_3(n) q^{8n} in q = e^{pi i tau/4}
inline QSeries g2_eisenstein_series(long terms) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(terms));
    c.push_back(rat(1, 240));
    for (long n = 1; n < terms; ++n)
        c.emplace_back(divisor_sigma(3, static_cast<unsigned long>(n)));
    return QSeries(0, 8, std::move(c));
}

// Product sides of the branch-chart expansions:
// X = prod (1+q^{4k})^2 (1+q^{4k-2})^4,  Y/(4q) = prod (1+q^{4k})^3 (1+q^{2k})^6.
inline QSeries branch_x_product(long limit) {
    return eta_product_series({{{4, 0, +1, 2}, {4, 2, +1, 4}}, Cyclo(1), 0}, limit);
}
inline QSeries branch_y_product(long limit) {
    return eta_product_series({{{4, 0, +1, 3}, {2, 0, +1, 6}}, Cyclo(1), 0}, limit);
}

// Abelian differential products:
// dX/Y   = 2 prod (1-q^{4k}) (1-q^{4k-2})^2 (1-q^{8k})^3 dq
// X dX/Y = 2 prod (1-q^{4k}) (1+q^{4k-2})^2 (1-q^{8k})^3 dq
inline QSeries abelian_dxy_product(long limit) {
    return eta_product_series({{{4, 0, -1, 1}, {4, 2, -1, 2}, {8, 0, -1, 3}}, Cyclo(1), 0}, limit);
}
inline QSeries abelian_xdxy_product(long limit) {
    return eta_product_series({{{4, 0, -1, 1}, {4, 2, +1, 2}, {8, 0, -1, 3}}, Cyclo(1), 0}, limit);
}

} // namespace burnside

#endif
