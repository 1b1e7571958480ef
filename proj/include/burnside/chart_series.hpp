#ifndef BURNSIDE_CHART_SERIES_HPP
#define BURNSIDE_CHART_SERIES_HPP

#include <optional>
#include <string>

#include "burnside/charts.hpp"
#include "burnside/tolerance.hpp"
#include "burnside/laurent.hpp"
#include "burnside/series_ode.hpp"

namespace burnside {

// Exact multiplier recorded separately from a series' rational coefficient
// tail.  value = base (or its principal square root) times pi^pi_power.
// The sqrt form covers the two constants that live outside Q(i,sqrt2):
// sqrt2 e^{-i pi/8} (eighth root of unity times sqrt2, whose square
// sqrt2(1-i) is in the field) and M = 2 sqrt(sqrt2+1).
struct Prefactor {
    Cyclo base = Cyclo(1);
    bool is_sqrt = false;
    int pi_power = 0;

    Complex embed(mpfr_prec_t prec) const {
        Complex v = base.embed(prec);
        if (is_sqrt) v = sqrt(v);
        if (pi_power != 0) v = v * pow_si(Real::pi(prec), pi_power);
        return v;
    }
    std::string str() const {
        std::string s = is_sqrt ? "sqrt(" + base.str() + ")" : base.str();
        if (pi_power == 1) s = "pi*" + s;
        if (pi_power > 1) s = "pi^" + std::to_string(pi_power) + "*" + s;
        if (pi_power < 0) s += "*pi^" + std::to_string(pi_power);
        return s;
    }
};

// One uniformizing function in one cusp chart: value = pre * s(q) with s a
// rational q-series on the chart's exponent grid.  The integer coefficient
// lists quoted for these expansions are exactly s.c.
struct ChartFunctionSeries {
    CuspChart chart;
    Prefactor pre;
    QSeries s;

    Complex eval(const Complex& tau, mpfr_prec_t prec) const {
        Complex q = chart.q_of_tau(tau, prec);
        Real half(rat(1, 2), prec);
        if (abs(q) > half) throw OutOfDomain("chart coordinate |q| > 1/2; use another chart");
        auto r = s.eval(q, prec);
        return pre.embed(prec) * r.value;
    }
};

enum class ChartKind { pole, zero, one, minus_one, plus_i, minus_i, alpha };

inline CuspChart chart_of(ChartKind k) {
    switch (k) {
        case ChartKind::pole: return charts::pole();
        case ChartKind::zero: return charts::zero();
        case ChartKind::one: return charts::one();
        case ChartKind::minus_one: return charts::minus_one();
        case ChartKind::plus_i: return charts::plus_i();
        case ChartKind::minus_i: return charts::minus_i();
        case ChartKind::alpha: return charts::alpha();
    }
    throw std::logic_error("unreachable");
}

struct ChartAnsatz {
    long n0;
    long step;
    Cyclo c0;                      // leading coefficient of X
    std::optional<Rational> a1;    // canonical value when the slot is free
};

inline ChartAnsatz chart_ansatz(ChartKind k) {
    switch (k) {
        case ChartKind::pole:
            return {-2, 8, Cyclo(rat(1, 2)), std::nullopt};
        case ChartKind::zero:
            // c0 = 2 e^{3 pi i/4} = -sqrt2 + i sqrt2
            return {2, 8, Cyclo{Rational(0), Rational(-1), Rational(0), Rational(1)},
                    std::nullopt};
        case ChartKind::one:
            return {0, 2, Cyclo(1), rat(4)};
        case ChartKind::minus_one:
            return {0, 2, Cyclo(-1), rat(4)};
        case ChartKind::plus_i:
            return {0, 2, Cyclo::i(), rat(4)};
        case ChartKind::minus_i:
            return {0, 2, -Cyclo::i(), rat(4)};
        case ChartKind::alpha:
            // same exponent data as the x=1 chart; the rotated coordinate
            // twists coefficients by i^k afterwards
            return {0, 2, Cyclo(1), rat(4)};
    }
    throw std::logic_error("unreachable");
}

// Canonical X-series of a chart: X = c0 q^{n0} (1 + a1 q^step + ...).
inline ChartFunctionSeries solve_schwarz_series(ChartKind kind, long order) {
    ChartAnsatz an = chart_ansatz(kind);
    Cyclo beta_c = pow_int(an.c0, 4);
    if (!beta_c.is_rational()) throw std::logic_error("c0^4 must be rational");
    SchwarzChartAnsatz sa{an.n0, an.step, beta_c.c0};
    OdeProblem prob = schwarz_chart_problem(sa);
    std::optional<FreeSlot> fs;
    if (an.a1) fs = FreeSlot{1, *an.a1};
    QSeries t_series = solve_ode_series(prob, order, fs);

    ChartFunctionSeries out{chart_of(kind), Prefactor{an.c0, false, 0},
                            QSeries(an.n0, an.step, t_series.c)};
    if (kind == ChartKind::alpha) {
        // q_{x=1} = e^{i pi/4} q_alpha rotates coefficient k by i^k; fold
        // the phases in (they are exact field elements) and keep the
        // rational view for the caller via the Cyclo bundle below.
        throw std::invalid_argument("alpha chart: use abelian_differential_series");
    }
    return out;
}

// Y from X through Y^2 = X^5 - X, exactly on the reduced rational series.
// branch = +1 follows the printed leading coefficients (principal square
// roots); -1 is the other sheet.
inline ChartFunctionSeries y_series_from_x(ChartKind kind, const ChartFunctionSeries& x,
                                           int branch = +1) {
    ChartAnsatz an = chart_ansatz(kind);
    Cyclo beta_c = pow_int(an.c0, 4);
    long delta = 4 * an.n0 / an.step;
    // rebuild F = beta t^delta S^5 - S on the t-grid
    QSeries S(0, 1, x.s.c);
    QSeries S5 = S * S;
    S5 = S5 * S5 * S;
    QSeries F = beta_c.c0 * S5.shifted(delta) - S;
    F = F.normalized();
    long m = F.lead;
    Rational rho = F.c[0];
    if ((an.n0 + an.step * m) % 2 != 0)
        throw std::domain_error("y_series_from_x: odd leading order (branch-point chart misuse)");
    QSeries one_plus = (Rational(1) / rho) * F.shifted(-m);
    QSeries V = one_plus.sqrt_one_plus();
    if (branch < 0) V = -V;

    Cyclo pre_sq = an.c0 * Cyclo(rho);
    Prefactor pre;
    Rational root;
    // keep the prefactor plain whenever the square root stays in the field
    if (pre_sq.is_rational() && sqrt_exact(pre_sq.c0, root)) {
        pre = Prefactor{Cyclo(root), false, 0};
    } else if (pre_sq.is_rational() && pre_sq.c0 > 0 &&
               sqrt_exact(pre_sq.c0 / 2, root)) {
        pre = Prefactor{Cyclo(root) * Cyclo::sqrt2(), false, 0};
    } else if (pre_sq == Cyclo(Rational(16)) * Cyclo::i()) {
        pre = Prefactor{Cyclo(4) * Cyclo::sqrt_i(), false, 0};
    } else if (pre_sq == Cyclo(Rational(-16)) * Cyclo::i()) {
        pre = Prefactor{Cyclo(4) * Cyclo::sqrt_minus_i(), false, 0};
    } else if (pre_sq == Cyclo(Rational(-16))) {
        pre = Prefactor{Cyclo(4) * Cyclo::i(), false, 0};
    } else {
        pre = Prefactor{pre_sq, true, 0};
    }
    long n0y = (an.n0 + an.step * m) / 2;
    return {x.chart, pre, QSeries(n0y, an.step, V.c)};
}

// Theta_1 q-expansion at tau -> +i oo in q = e^{pi i (tau-3)/4}:
// (pi^2/16) theta_3(q^8)^4 as a rational series times the pi^2/16 tag.
//
// Theta_1 = -(pi^2/16) q x_q/(x^2-1); the Euler combination q d/dq is
// invariant under rescaling the coordinate, and the surviving exponents
// are multiples of 8, where the x-chart coordinate e^{(pi i/4)(tau-2)} and
// the Theta chart e^{(pi i/4)(tau-3)} coincide.  So the computation stays
// in the x=-1 chart and the mod-8 support is asserted.
inline ChartFunctionSeries theta1_inf_series(long order) {
    ChartFunctionSeries xm = solve_schwarz_series(ChartKind::minus_one, 4 * order + 2);
    const QSeries& W = xm.s; // x = -W, lead 0, step 2
    QSeries num = W.theta();
    QSeries den = W * W - QSeries::constant(Rational(1), W.size() * 2, 2);
    QSeries ratio = num.normalized() / den.normalized();
    QSeries out(0, 8, {});
    for (long k = 0; k < ratio.size(); ++k) {
        long e = ratio.exponent(k);
        if (e % 8 == 0) {
            // the half-unit shift of the chart constant flips q^8 -> -q^8
            Rational v = ratio.c[static_cast<size_t>(k)];
            if ((e / 8) % 2 != 0) v = -v;
            out.c.push_back(v);
        } else if (ratio.c[static_cast<size_t>(k)] != 0) {
            throw std::logic_error("theta1_inf_series: unexpected exponent support");
        }
    }
    return {charts::theta1_inf(), Prefactor{Cyclo(rat(1, 16)), false, 2}, out.truncated(order)};
}

// Theta_1 expansion at the zero cusp in q = e^{(pi i/4)(2 tau - 1)/tau}:
// -4 q^2 sum sigma_1(2k+1) q^{4k} times the logarithmic dressing
// (ln q - pi i/2)^2, which is not a power series and is applied only at
// numeric evaluation time.
inline ChartFunctionSeries theta1_cusp_series(long order) {
    ChartFunctionSeries xz = solve_schwarz_series(ChartKind::zero, order + 2);
    // in the rotated coordinate the zero-chart phases collapse:
    // x(q) = 2 q^2 S(-q^8)
    QSeries S(0, 1, xz.s.c);
    for (long k = 1; k < S.size(); k += 2) S.c[static_cast<size_t>(k)] = -S.c[static_cast<size_t>(k)];
    QSeries xs(2, 8, S.c);
    xs = Rational(2) * xs;
    QSeries num = xs.theta();
    QSeries den = xs * xs - QSeries::constant(Rational(1), xs.size() * 2, 4);
    QSeries ratio = num / den.normalized();
    // ratio = -4 q^2 sum sigma_1(2k+1) q^{4k}; export with the -4 pulled out
    return {charts::theta1_cusp(), Prefactor{Cyclo(-4), false, 0},
            (rat(-1, 4) * ratio).truncated(order)};
}

} // namespace burnside

#endif
