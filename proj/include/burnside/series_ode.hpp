#ifndef BURNSIDE_SERIES_ODE_HPP
#define BURNSIDE_SERIES_ODE_HPP

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>

#include "burnside/laurent.hpp"

namespace burnside {

// Power-series solver for the nonlinear third-order equations produced by
// the Schwarz equation in an exponential cusp coordinate.
//
// Every target equation reduces, after factoring the exponent ansatz
// X = c0 q^{n0} S(t), t = q^step, to a rational master equation
//
//     G(S) = 0,   S = 1 + a1 t + a2 t^2 + ...
//
// whose coefficients are polynomial in t, S and the Euler-type images
// u_j = L_j S, where L_j multiplies the t^k coefficient by
// prod_{i<j}(n0 + step*k - i).  The solver runs Newton stages with order
// doubling: at each stage it evaluates G and its exact Frechet data
//
//     dG[dS] = A0 dS + A1 L1 dS + A2 L2 dS + A3 L3 dS,
//
// then performs the triangular linear solve for the unknown coefficients.
// A vanishing pivot with nonzero residual is a genuine degeneracy; a
// vanishing pivot with zero residual is a free normalization slot and must
// be supplied by the caller (this is the q -> lambda q freedom of the
// branch charts).
struct OdeFrechet {
    QSeries R;
    std::array<QSeries, 4> A; // A0..A3
};

struct OdeProblem {
    // fills fr with residual + Frechet data for the padded S
    std::function<void(const QSeries& S, long len, OdeFrechet& fr)> companions;
    // scalar multiplying A_j in the response of coefficient slot k (j >= 1);
    // slot 0 multiplies A0 with 1
    std::function<Rational(long k, int j)> lcoef;
};

struct FreeSlot {
    long index;
    Rational value;
};

inline QSeries solve_ode_series(const OdeProblem& prob, long nterms,
                                std::optional<FreeSlot> free_slot = std::nullopt) {
    QSeries S(0, 1, {Rational(1)});
    long m = 0;
    if (free_slot && free_slot->index == 1) {
        S.c.push_back(free_slot->value);
        m = 1;
    }
    while (m < nterms) {
        long M = std::min(nterms, std::max(2 * m, m + 1));
        // guard padding: truncation bookkeeping through the nonlinear
        // products is conservative, while the response-lead analysis
        // guarantees residual row k + resp_lead depends on a_{<=k} only
        S.c.resize(static_cast<size_t>(M) + 9, Rational(0));
        OdeFrechet fr;
        prob.companions(S, M, fr);
        S.c.resize(static_cast<size_t>(M) + 1);
        QSeries rcur = fr.R;

        // lead of the Frechet response: charts whose F = beta t^d S^5 - S
        // vanishes at order zero push it above lead_G
        long resp_lead = rcur.valid_to();
        for (int j = 0; j < 4; ++j) {
            QSeries n = fr.A[j].normalized();
            if (!n.c.empty() && n.first_nonzero() < n.size())
                resp_lead = std::min(resp_lead, n.lead);
        }

        // coefficients below the first unknown slot must already vanish
        for (long e = rcur.lead; e <= m + resp_lead && e < rcur.valid_to(); ++e)
            if (rcur.coeff_at(e) != 0)
                throw std::logic_error("series ODE: inconsistent low-order residual");

        std::array<Rational, 4> apiv;
        for (int j = 0; j < 4; ++j) apiv[j] = fr.A[j].coeff_at(resp_lead);

        for (long k = m + 1; k <= M; ++k) {
            Rational r = rcur.coeff_at(k + resp_lead);
            Rational pivot = apiv[0];
            for (int j = 1; j < 4; ++j) pivot += prob.lcoef(k, j) * apiv[j];
            if (pivot == 0) {
                if (r != 0) throw std::domain_error("series ODE: recurrence degeneracy");
                // a free slot beyond the seeded one would corrupt the stage
                throw std::domain_error("series ODE: unexpected free coefficient slot");
            }
            Rational da = -r / pivot;
            if (da == 0) continue;
            S.c[static_cast<size_t>(k)] += da;
            // rcur += da * (A0 + sum_j lcoef(k,j) A_j) * t^k
            QSeries resp = fr.A[0];
            for (int j = 1; j < 4; ++j) resp += prob.lcoef(k, j) * fr.A[j];
            rcur += (da * resp).shifted(k);
        }
        m = M;
    }
    S.c.resize(static_cast<size_t>(nterms) + 1);
    return S;
}

// multiply the t^k coefficient by prod_{i=0..j-1} (n0 + step*k - i)
inline QSeries apply_euler(const QSeries& s, const Rational& n0, long step, int j) {
    QSeries out = s;
    for (long k = 0; k < out.size(); ++k) {
        Rational f(1);
        Rational base = n0 + Rational(step) * Rational(out.exponent(k));
        for (int i = 0; i < j; ++i) f *= base - i;
        out.c[static_cast<size_t>(k)] = out.c[static_cast<size_t>(k)] * f;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Master equation of x(tau) in a cusp chart.
//
// With Q(x) = -(1/2)(x^8 + 14x^4 + 1)/(x^5 - x)^2 the Schwarz equation in
// an exponential coordinate is [X,q] - 1/(2 q^2 X_q^2) = Q(X).  Clearing
// denominators and factoring X = c0 q^{n0} S(q^step) with beta = c0^4
// turns it into the rational equation (delta = 4 n0 / step):
//
//   G(S) = F^2 (2 u3 u1 - 3 u2^2 - u1^2) + P u1^4 = 0,
//   F = beta t^delta S^5 - S,
//   P = beta^2 t^{2 delta} S^8 + 14 beta t^delta S^4 + 1.
// ---------------------------------------------------------------------------
struct SchwarzChartAnsatz {
    long n0;       // leading exponent of X in q
    long step;     // exponent stride of the chart
    Rational beta; // c0^4 of the leading coefficient
};

inline OdeProblem schwarz_chart_problem(const SchwarzChartAnsatz& an) {
    if ((4 * an.n0) % an.step != 0)
        throw std::invalid_argument("chart ansatz: step must divide 4 n0");
    long delta = 4 * an.n0 / an.step;
    OdeProblem prob;
    Rational n0r(an.n0);
    long s = an.step;
    Rational beta = an.beta;
    prob.lcoef = [n0r, s](long k, int j) {
        Rational f(1);
        Rational base = n0r + Rational(s) * Rational(k);
        for (int i = 0; i < j; ++i) f *= base - i;
        return f;
    };
    prob.companions = [n0r, s, beta, delta](const QSeries& S, long len, OdeFrechet& fr) {
        (void)len;
        QSeries S2 = S * S;
        QSeries S3 = S2 * S;
        QSeries S4 = S2 * S2;
        QSeries S5 = S4 * S;
        QSeries S7 = S4 * S3;
        QSeries S8 = S4 * S4;
        long clen = S.size() + 2 * std::abs(delta) + 2;
        QSeries one = QSeries::constant(Rational(1), clen);
        QSeries F = beta * S5.shifted(delta) - S;
        QSeries F2 = F * F;
        QSeries u1 = apply_euler(S, n0r, s, 1);
        QSeries u2 = apply_euler(S, n0r, s, 2);
        QSeries u3 = apply_euler(S, n0r, s, 3);
        QSeries P = (beta * beta) * S8.shifted(2 * delta) + (beta * 14) * S4.shifted(delta) + one;
        QSeries Phi = (beta * 5) * S4.shifted(delta) - one;
        QSeries Pi = (beta * beta * 8) * S7.shifted(2 * delta) + (beta * 56) * S3.shifted(delta);
        QSeries u1sq = u1 * u1;
        QSeries u1cu = u1sq * u1;
        QSeries u1q = u1sq * u1sq;
        QSeries W2 = u3 * u1 * Rational(2) - u2 * u2 * Rational(3) - u1sq;
        fr.R = F2 * W2 + P * u1q;
        fr.A[0] = F * Phi * W2 * Rational(2) + Pi * u1q;
        fr.A[1] = F2 * (u3 - u1) * Rational(2) + P * u1cu * Rational(4);
        fr.A[2] = -(F2 * u2 * Rational(6));
        fr.A[3] = F2 * u1 * Rational(2);
    };
    return prob;
}

// ---------------------------------------------------------------------------
// Master equation of the conversion coordinate.
//
// [tau, mu] = c g2(tau)/pi^2 with mu = q^kappa m(t), t = q^8,
// q = e^{pi i tau/4} becomes
//
//   2 u3 u1 - 3 u2^2 - 2 Rhat u1^2 = 0,
//   Rhat(t) = (1/2 + 4c/3) + 320 c sum sigma3(n) t^n,
//
// with kappa^2 = -8c/3 fixed by the indicial balance (kappa must be a
// positive rational for a series chart to exist).
// ---------------------------------------------------------------------------
inline OdeProblem conversion_problem(const Rational& kappa, const QSeries& rhat) {
    OdeProblem prob;
    prob.lcoef = [kappa](long k, int j) {
        Rational f(1);
        Rational base = kappa + Rational(8) * Rational(k);
        for (int i = 0; i < j; ++i) f *= base - i;
        return f;
    };
    prob.companions = [kappa, rhat](const QSeries& S, long len, OdeFrechet& fr) {
        (void)len;
        QSeries u1 = apply_euler(S, kappa, 8, 1);
        QSeries u2 = apply_euler(S, kappa, 8, 2);
        QSeries u3 = apply_euler(S, kappa, 8, 3);
        QSeries rh = rhat.truncated(S.size() + 2);
        fr.R = u3 * u1 * Rational(2) - u2 * u2 * Rational(3) - rh * u1 * u1 * Rational(2);
        fr.A[0] = QSeries::constant(Rational(0), S.size() + 2);
        fr.A[1] = u3 * Rational(2) - rh * u1 * Rational(4);
        fr.A[2] = -(u2 * Rational(3) * Rational(2));
        fr.A[3] = u1 * Rational(2);
    };
    return prob;
}

} // namespace burnside

#endif
