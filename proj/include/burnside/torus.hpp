#ifndef BURNSIDE_TORUS_HPP
#define BURNSIDE_TORUS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "burnside/chart_series.hpp"
#include "burnside/curve.hpp"
#include "burnside/elliptic.hpp"
#include "burnside/qseries.hpp"
#include "burnside/quadrature.hpp"

namespace burnside {

// ---------------------------------------------------------------------------
// Jacobi's degree-2 reduction: y^2 = x(x-1)(x-a)(x-b)(x-ab) covers the two
// tori mu^2 = lambda(lambda-1)(k lambda - 1) with
// k± = -(sqrt a ± sqrt b)^2 / ((a-1)(b-1)).
// ---------------------------------------------------------------------------

// Exact square root inside Q(i, sqrt2) when one exists: the numeric root is
// rounded to small rational coordinates and verified by exact squaring.
inline std::optional<Cyclo> cyclo_sqrt(const Cyclo& c) {
    const mpfr_prec_t prec = 192;
    Complex r = sqrt(c.embed(prec));
    Real s2 = sqrt(Real(2L, prec));
    auto decompose = [&](const Real& v, Rational& p, Rational& q) {
        for (long dq = 1; dq <= 48; ++dq) {
            Real qr = (v / s2) * dq;
            long hint = round_nearest(qr).to_long();
            for (long m = hint - 1; m <= hint + 1; ++m) {
                for (long dp = 1; dp <= 48; ++dp) {
                    Real scaled = (v - Real(rat(m, dq), prec) * s2) * dp;
                    Real rounded = round_nearest(scaled);
                    if (abs(scaled - rounded) < Real::pow2(-96, prec)) {
                        p = rat(rounded.to_long(), dp);
                        q = rat(m, dq);
                        return true;
                    }
                }
            }
        }
        return false;
    };
    Rational p0, p1, p2, p3;
    if (!decompose(r.re, p0, p1) || !decompose(r.im, p2, p3)) return std::nullopt;
    Cyclo cand{p0, p1, p2, p3};
    if (cand * cand == c) return cand;
    return std::nullopt;
}

struct JacobiK {
    std::optional<Cyclo> exact_plus, exact_minus;
    Complex k_plus, k_minus;
};

inline JacobiK jacobi_k(const Cyclo& a, const Cyclo& b, mpfr_prec_t prec = kDefaultPrec) {
    Cyclo den = (a - Cyclo(1)) * (b - Cyclo(1));
    if (den.is_zero()) throw OutOfDomain("jacobi_k: (a-1)(b-1) = 0");
    if (a.is_zero() || b.is_zero()) throw OutOfDomain("jacobi_k: a, b must be nonzero");
    auto sa = cyclo_sqrt(a);
    auto sb = cyclo_sqrt(b);
    JacobiK out;
    if (sa && sb) {
        Cyclo sp = *sa + *sb, sm = *sa - *sb;
        Cyclo kp = -(sp * sp) / den;
        Cyclo km = -(sm * sm) / den;
        out.exact_plus = kp;
        out.exact_minus = km;
        out.k_plus = kp.embed(prec);
        out.k_minus = km.embed(prec);
        return out;
    }
    Complex san = sqrt(a.embed(prec)), sbn = sqrt(b.embed(prec));
    Complex denn = den.embed(prec);
    out.k_plus = -(pow_int(san + sbn, 2)) / denn;
    out.k_minus = -(pow_int(san - sbn, 2)) / denn;
    return out;
}

// ---------------------------------------------------------------------------
// The Burnside torus: g2 = 5/3, g3 = -(7/27) sqrt2 (upper sign of k±),
// omega = pi sqrt2 eta^2(sqrt2 i), omega' = i omega/sqrt2, J = 125/27.
// ---------------------------------------------------------------------------
struct BurnsideTorus {
    mpfr_prec_t prec;
    Complex omega, omega_prime, omega_dprime;
    Lattice lat;
    LatticeParams lp;
    Cyclo g2_exact, g3_exact;
    Cyclo e, e_prime, e_dprime; // wp(omega), wp(omega'), wp(omega'')
    Cyclo wp_aleph;             // -7/2 - (13/6) sqrt2
    Complex aleph;

    explicit BurnsideTorus(mpfr_prec_t p = kDefaultPrec)
        : prec(p),
          omega(compute_omega(p)),
          omega_prime(mul_i(omega) / sqrt(Real(2L, p))),
          omega_dprime(-(omega + omega_prime)),
          lat(omega, omega_prime),
          lp(lat.params()),
          g2_exact(rat(5, 3)),
          g3_exact(Cyclo{Rational(0), rat(-7, 27), Rational(0), Rational(0)}),
          e(Cyclo{Rational(0), rat(1, 3), Rational(0), Rational(0)}),
          e_prime(Cyclo{rat(-1, 2), rat(-1, 6), Rational(0), Rational(0)}),
          e_dprime(Cyclo{rat(1, 2), rat(-1, 6), Rational(0), Rational(0)}),
          wp_aleph(Cyclo{rat(-7, 2), rat(-13, 6), Rational(0), Rational(0)}),
          aleph(p) {
        aleph = wp_inverse(wp_aleph.embed(p), lat,
                           mul_i(Complex{abs(omega_prime) * Real(rat(26, 100), p), Real(0L, p)}));
    }

    // wp'(aleph) = 32^{1/4} (7 + 5 sqrt2) i
    Complex wp_prime_aleph_exact() const {
        Real r32 = sqrt(sqrt(Real(32L, prec)));
        return mul_i(Complex{r32 * (sqrt(Real(2L, prec)) * 5 + 7), Real(0L, prec)});
    }

    static Complex compute_omega(mpfr_prec_t p) {
        Complex tau{Real(0L, p), sqrt(Real(2L, p))};
        Complex eta = dedekind_eta(tau);
        return Complex{Real::pi(p) * sqrt(Real(2L, p)), Real(0L, p)} * eta * eta;
    }
};

// Mirror torus with g3 = +(7/27) sqrt2 (lower sign): the lattice rotated
// by i, half-periods (omega/sqrt2, i omega).
struct BurnsideTorusMinus {
    mpfr_prec_t prec;
    Complex omega, omega_prime;
    Lattice lat;
    LatticeParams lp;

    explicit BurnsideTorusMinus(const BurnsideTorus& plus)
        : prec(plus.prec),
          omega(plus.omega / sqrt(Real(2L, plus.prec))),
          omega_prime(mul_i(plus.omega)),
          lat(omega, omega_prime),
          lp(lat.params()) {}
};

// wp(alpha) = e' + (1+3e)/(x - i) - i (1+3e)/(x + 1)
inline Complex cover_wp_of_x(const Complex& x, const BurnsideTorus& t) {
    mpfr_prec_t p = x.prec();
    Complex i = Complex::i(p);
    Complex c = (Cyclo(1) + Cyclo(3) * t.e).embed(p);
    if (abs(x - i) < Real::pow2(-(static_cast<long>(p)) / 2, p) ||
        abs(x + 1) < Real::pow2(-(static_cast<long>(p)) / 2, p))
        throw NearSingularity("cover pole at x = i or x = -1");
    return t.e_prime.embed(p) + c / (x - i) - mul_i(c) / (x + 1);
}

// the same value through Jacobi's chain lambda -> z = k lambda - (k+1)/3
inline Complex cover_wp_via_lambda(const Complex& x, const BurnsideTorus& t) {
    mpfr_prec_t p = x.prec();
    Complex i = Complex::i(p);
    Complex lam = ((Complex(1, p) - i) * x * 2) / ((x + 1) * (x - i));
    Cyclo kp{rat(1, 2), rat(1, 2), Rational(0), Rational(0)}; // (1+sqrt2)/2
    return kp.embed(p) * lam - (kp + Cyclo(1)).embed(p) / 3;
}

// the two x-sheets over a torus point
inline std::array<Complex, 2> cover_x_of_wp(const Complex& wp_alpha, const BurnsideTorus& t) {
    mpfr_prec_t p = wp_alpha.prec();
    Complex i = Complex::i(p);
    Complex ep = t.e_prime.embed(p);
    Complex b = (i - 1) * ((wp_alpha + ep - t.e.embed(p) * 2) / (wp_alpha - ep));
    Complex disc = sqrt(b * b + i * 4);
    return {(b + disc) / 2, (b - disc) / 2};
}

inline Complex find_aleph(const BurnsideTorus& t) { return t.aleph; }

// ---------------------------------------------------------------------------
// Ramification accounting for the cover, both directions, exact integers.
// ---------------------------------------------------------------------------
struct BranchRecord {
    std::string point;
    std::vector<long> scheme;
};

struct RamificationProfile {
    std::string direction;
    std::vector<BranchRecord> branch_data;
    long sheets;
    long genus_base;
    long genus_cover;

    static long hurwitz_genus(const std::vector<BranchRecord>& data, long n, long g) {
        long s = 0;
        for (auto& b : data)
            for (long q : b.scheme) s += q - 1;
        if (s % 2 != 0) throw std::logic_error("odd total ramification");
        return s / 2 + n * (g - 1) + 1;
    }
};

inline RamificationProfile ramification_profile(bool alpha_to_x) {
    RamificationProfile out;
    out.sheets = 2;
    if (alpha_to_x) {
        out.direction = "alpha->x";
        out.genus_base = 1;
        out.branch_data = {{"omega''", {1, 1}}, {"+aleph", {2}}, {"-aleph", {2}}};
    } else {
        out.direction = "x->alpha";
        out.genus_base = 0;
        out.branch_data = {{"alpha=omega (x=1,-i)", {2, 2}},
                           {"alpha=omega' (x=0,oo)", {2, 2}},
                           {"alpha=omega'' (x=-i sqrt i)", {1, 1}},
                           {"alpha=0 (x=-1,i)", {2, 2}}};
    }
    out.genus_cover =
        RamificationProfile::hurwitz_genus(out.branch_data, out.sheets, out.genus_base);
    return out;
}

// ---------------------------------------------------------------------------
// Puiseux expansion of the inverse cover at (alpha = omega, x = 1):
// alpha(x) = omega - i sqrt(i sqrt2 + i) sqrt(x-1)
//          + ((i sqrt(26 sqrt2 + 34) - sqrt(26 sqrt2 - 14))/24) sqrt(x-1)^3 + ...
// ---------------------------------------------------------------------------
struct PuiseuxCoeffs {
    Complex c1, c2;
};

inline PuiseuxCoeffs puiseux_at_branch(const BurnsideTorus& t) {
    mpfr_prec_t p = t.prec;
    Complex c1 = -(mul_i(sqrt((Cyclo::i_sqrt2() + Cyclo::i()).embed(p))));
    Real s2 = sqrt(Real(2L, p));
    Real a = sqrt(s2 * 26 + 34), b = sqrt(s2 * 26 - 14);
    Complex c2 = (mul_i(Complex{a, Real(0L, p)}) - Complex{b, Real(0L, p)}) / 24;
    return {c1, c2};
}

// continuation of alpha(x) near the branch point, for verifying the
// Puiseux constants against the cover itself
inline Complex alpha_near_branch(const BurnsideTorus& t, const Complex& x, const Complex& hint) {
    return wp_inverse(cover_wp_of_x(x, t), t.lat, hint);
}

// ---------------------------------------------------------------------------
// The plane equation in Jacobi's lambda and the torus equations.
// ---------------------------------------------------------------------------

// printed rational Q(lambda), so Lambda_{ll} = (1/2) Q(lambda) Lambda
inline Complex lambda_fuchsian_Q(const Complex& lam) {
    mpfr_prec_t p = lam.prec();
    Complex l2 = lam * lam;
    Complex num = pow_int(lam, 6) + pow_int(lam, 5) * 4 + pow_int(lam, 4) * 16 -
                  pow_int(lam, 3) * 56 + l2 * 68 - lam * 48 + 16;
    Complex den = l2 * pow_int(lam - 1, 2) * pow_int(l2 + lam * 4 - 4, 2);
    if (abs(den) < Real::pow2(-(static_cast<long>(p)), p))
        throw NearSingularity("lambda at a singular point");
    return -(num / den) / 2;
}

// exact coefficient of (lambda - l0)^{-2} in Q(lambda)/2 by partial
// fractions over Q(i, sqrt2); l0 must be one of {0, 1, -2 ± 2 sqrt2}
inline Cyclo lambda_double_pole_coeff(const Cyclo& l0) {
    Cyclo num = pow_int(l0, 6) + Cyclo(4) * pow_int(l0, 5) + Cyclo(16) * pow_int(l0, 4) -
                Cyclo(56) * pow_int(l0, 3) + Cyclo(68) * l0 * l0 - Cyclo(48) * l0 + Cyclo(16);
    Cyclo lp{Rational(-2), Rational(2), Rational(0), Rational(0)};
    Cyclo lm{Rational(-2), Rational(-2), Rational(0), Rational(0)};
    Cyclo rest(1);
    bool found = false;
    for (const Cyclo& root : {Cyclo(0), Cyclo(1), lp, lm}) {
        if (root == l0) {
            found = true;
            continue;
        }
        rest *= (l0 - root) * (l0 - root);
    }
    if (!found) throw std::invalid_argument("not a finite singular point of the lambda equation");
    return Cyclo(rat(-1, 4)) * num / rest;
}

// lambda as a function of the torus point: lambda = 2(sqrt2-1) wp + (2 sqrt2-1)/3
inline Complex lambda_of_alpha_wp(const Complex& wp_alpha) {
    mpfr_prec_t p = wp_alpha.prec();
    Cyclo slope{Rational(-2), Rational(2), Rational(0), Rational(0)};     // 2(sqrt2-1)
    Cyclo icept{rat(-1, 3), rat(2, 3), Rational(0), Rational(0)};         // (2 sqrt2-1)/3
    return slope.embed(p) * wp_alpha + icept.embed(p);
}

// {lambda, x} and lambda_x for Jacobi's substitution, closed forms
struct LambdaDerivs {
    Complex lambda, d1, schwarzian;
};

inline LambdaDerivs lambda_derivs_of_x(const Complex& x) {
    mpfr_prec_t p = x.prec();
    Complex i = Complex::i(p);
    Complex c = (Complex(1, p) - i) * 2;
    Complex D = x * x + (Complex(1, p) - i) * x - i;
    Complex Dp = x * 2 + (Complex(1, p) - i);
    Complex lam = c * x / D;
    Complex x2i = x * x + i;
    Complex d1 = -(c * x2i) / (D * D);
    Complex d2 = -(c * (x * D * 2 - x2i * Dp * 2)) / (D * D * D);
    Complex d3 = -(c * ((D * 2 - x * Dp * 2 - x2i * 4) * D - (x * D * 2 - x2i * Dp * 2) * Dp * 3)) /
                 (D * D * D * D);
    Complex r = d2 / d1;
    Complex sw = d3 / d1 - r * r * Real(rat(3, 2), p);
    return {lam, d1, sw};
}

// Q(lambda) obtained by pushing a plane equation Psi_xx = (1/2) qx Psi
// through lambda(x):  Q_out = ({lambda,x} + qx)/lambda_x^2.
inline Complex lambda_q_from_plane(const Complex& x, const Complex& qx) {
    LambdaDerivs ld = lambda_derivs_of_x(x);
    return (ld.schwarzian + qx) / (ld.d1 * ld.d1);
}

enum class TorusVariant { burnside, whittaker };
enum class TorusForm { zeta, algebraic };

// (1/2) Q(alpha) of the torus Fuchsian equation; both printed forms of
// both variants.
inline Complex torus_q_half(const BurnsideTorus& t, const Complex& alpha, TorusVariant variant,
                            TorusForm form) {
    mpfr_prec_t p = t.prec;
    const Lattice& lat = t.lat;
    // The zeta-forms are written for the elliptic-point representative with
    // wp' = +32^{1/4}(7+5 sqrt2) i, which is -aleph; wp-parity puts the
    // opposite derivative at the Fig.-1 representative +aleph.
    Complex al_eq = -t.aleph;
    Complex wp_a_pm = lat.wp(alpha - al_eq) + lat.wp(alpha + al_eq);
    Real s2 = sqrt(Real(2L, p));
    Real root8 = sqrt(sqrt(Real(8L, p)));

    if (variant == TorusVariant::burnside) {
        Complex punctures = lat.wp(alpha) + lat.wp(alpha - t.omega) + lat.wp(alpha - t.omega_prime);
        Complex acc = -(punctures / 4);
        if (form == TorusForm::zeta) {
            Complex zdiff = lat.zeta(alpha - al_eq) - lat.zeta(alpha + al_eq);
            Complex zal = lat.zeta(al_eq);
            acc -= wp_a_pm * Real(rat(3, 16), p);
            acc += mul_i(zdiff) * (root8 * Real(rat(9, 64), p));
            acc += (mul_i(zal) * root8 + Complex{s2 * 2 + 2, Real(0L, p)}) * Real(rat(9, 32), p);
            return acc;
        }
        Complex pole_term =
            Complex{(s2 * 5 + 7) * 3, Real(0L, p)} / (lat.wp(alpha) - t.wp_aleph.embed(p));
        Complex inner = wp_a_pm + pole_term - Complex{s2 * 3 + 3, Real(0L, p)};
        return acc - inner * Real(rat(3, 16), p);
    }

    if (form == TorusForm::zeta) {
        Real inv_root32 = Real(1L, p) / sqrt(sqrt(Real(32L, p)));
        Real inv_root2_4 = Real(1L, p) / sqrt(sqrt(Real(2L, p)));
        Complex zdiff = lat.zeta(alpha - al_eq) - lat.zeta(alpha + al_eq);
        Complex zal = lat.zeta(al_eq);
        Complex inner = wp_a_pm - mul_i(zdiff) * inv_root32 -
                        (mul_i(zal) * inv_root2_4 + Complex{s2 + 1, Real(0L, p)});
        return -(inner * Real(rat(3, 16), p));
    }
    Complex pole_term = Complex{s2 * 5 + 7, Real(0L, p)} / (lat.wp(alpha) - t.wp_aleph.embed(p));
    Complex inner = wp_a_pm + pole_term - Complex{s2 + 1, Real(0L, p)};
    return -(inner * Real(rat(3, 16), p));
}

// construction route: Q(alpha) = -{lambda,alpha} + lambda_alpha^2 Q(lambda)
// with -{lambda,alpha} = 6 wp(2 alpha) (lambda is affine in wp).  For the
// Whittaker variant the plane equation carries (3/4) Q(x).
inline Complex torus_q_half_construction(const BurnsideTorus& t, const Complex& alpha,
                                         TorusVariant variant) {
    mpfr_prec_t p = t.prec;
    Real s2 = sqrt(Real(2L, p));
    auto [wp_a, wpp_a] = t.lat.wp_and_prime(alpha);
    Complex lam = lambda_of_alpha_wp(wp_a);
    Complex lam_alpha = wpp_a * (s2 - 1) * 2;
    Complex q_lam(p);
    if (variant == TorusVariant::burnside) {
        q_lam = lambda_fuchsian_Q(lam);
    } else {
        Complex x = cover_x_of_wp(wp_a, t)[0];
        q_lam = lambda_q_from_plane(x, fuchs_q_x(x) * Real(rat(3, 4), p));
    }
    Complex q_alpha = Complex(6, p) * t.lat.wp(alpha * 2) + lam_alpha * lam_alpha * q_lam;
    return q_alpha / 2;
}

// Renormalized form on half-periods (1, sqrt2 i): alpha = omega' alpha~,
// all accessory parameters real, with M = 2^{1/4} omega.
inline Complex torus_q_half_renormalized(const BurnsideTorus& t, const Complex& alpha_tilde) {
    mpfr_prec_t p = t.prec;
    Complex one(1, p);
    Complex tau{Real(0L, p), sqrt(Real(2L, p))};
    Lattice lt(one, tau);
    // same -aleph representative as the zeta-forms; the constant stays real
    // (it is -zeta~ of the Fig.-1 point, -3.831...)
    Complex aleph_t = -(t.aleph / t.omega_prime);
    Real m = sqrt(sqrt(Real(2L, p))) * abs(t.omega); // M = 2^{1/4} omega (real > 0)
    Complex acc = -((lt.wp(alpha_tilde) + lt.wp(alpha_tilde - one) + lt.wp(alpha_tilde - tau)) / 4);
    acc -= (lt.wp(alpha_tilde - aleph_t) + lt.wp(alpha_tilde + aleph_t)) * Real(rat(3, 16), p);
    acc -= (lt.zeta(alpha_tilde - aleph_t) - lt.zeta(alpha_tilde + aleph_t)) *
           (m * Real(rat(9, 64), p));
    Real inv_s2 = Real(1L, p) / sqrt(Real(2L, p));
    acc -= (lt.zeta(aleph_t) + Complex{(inv_s2 + 1) * m, Real(0L, p)}) * (m * Real(rat(9, 32), p));
    return acc;
}

// ---------------------------------------------------------------------------
// alpha(tau): the holomorphic Abelian integral as a function of tau.
// ---------------------------------------------------------------------------
struct AlphaValue {
    Complex alpha;
    int palpha_sign; // sign of i sqrt(i) in the wp' normalization that held
};

// wp'(alpha) consistent with d alpha = ((x - i sqrt i)/sqrt(1+i)) dX/Y on
// the + sheet: wp'(alpha) = v'(x) y sqrt(1+i)/(x - i sqrt i), equivalently
// -(6e+2)/sqrt(1+i) (x + i sqrt i) y/((x-i)^2 (x+1)^2).
inline Complex alpha_wp_prime_target(const BurnsideTorus& t, const Complex& x, const Complex& y,
                                     int sheet) {
    mpfr_prec_t p = t.prec;
    Complex i = Complex::i(p);
    Complex isqrti = Cyclo::sqrt_i().embed(p) * i; // i sqrt i = e^{3 pi i/4}
    Complex c = (Cyclo(1) + Cyclo(3) * t.e).embed(p);
    Complex vprime = -(c / pow_int(x - i, 2)) + mul_i(c) / pow_int(x + 1, 2);
    Complex sqrt1pi = sqrt(Complex(1, p) + i);
    Complex denom = sheet > 0 ? x - isqrti : x + isqrti;
    return vprime * y * sqrt1pi / denom;
}

inline AlphaValue alpha_of_tau(const BurnsideTorus& t, const Complex& tau, int sheet = +1) {
    if (sheet < 0)
        throw std::invalid_argument("alpha_of_tau: only the + sheet torus is wired here");
    mpfr_prec_t p = t.prec;
    BurnsideState s = burnside_state(lift(tau, p));
    Complex v = cover_wp_of_x(s.x, t);
    Complex hint = t.omega * Real(rat(3, 10), p) + t.omega_prime * Real(rat(2, 5), p);
    Complex a0 = wp_inverse(v, t.lat, hint);
    Complex target = alpha_wp_prime_target(t, s.x, s.y, +1);
    Complex wp_p = t.lat.wp_prime(a0);
    Real d_plus = abs(wp_p - target), d_minus = abs(wp_p + target);
    Complex alpha = d_plus <= d_minus ? a0 : -a0;
    // representative in the cell [0, 2 omega) x [0, 2 omega'), where the
    // series-anchored branch lives
    Complex center = t.omega + t.omega_prime;
    long m, n;
    alpha = center + t.lat.reduce(alpha - center, m, n);
    return {alpha, +1};
}

// ---------------------------------------------------------------------------
// Abelian differential series at the (alpha = omega, x = 1) cusp, chart
// q = e^{(pi i/4)(tau-1)/(2 tau-1)}.
// ---------------------------------------------------------------------------
struct AbelianSeries {
    Cyclo dxy_mult;       // multiplier of dX/Y (2 e^{i pi/4} here)
    QSeries dxy_rat;      // rational product factor of dX/Y
    Cyclo xdxy_mult;      // multiplier of X dX/Y
    QSeries xdxy_rat;     // rational product factor of X dX/Y
    Prefactor m_alpha;    // M = 2 sqrt(sqrt2 + 1)
    CycloSeries dalpha;   // d alpha/(M dq): real coefficients in Q(sqrt2)
    CycloSeries alpha_tail; // (alpha - omega)/M, termwise antiderivative
};

inline AbelianSeries abelian_differential_series(long order) {
    ChartFunctionSeries xb = solve_schwarz_series(ChartKind::one, order + 2);
    ChartFunctionSeries yb = y_series_from_x(ChartKind::one, xb);

    // everything stays rational in the x=1 chart coordinate first
    QSeries X = xb.s;          // lead 0, step 2, c0 = 1 (the x=1 multiplier)
    QSeries Y = Rational(4) * yb.s; // lead 1, step 2
    QSeries dxy = (X.derivative().normalized() / Y).normalized();
    AbelianSeries out;
    // the multiplier convention here is sqrt(c0) = 1 for this cusp
    out.dxy_mult = Cyclo(dxy.c[0] / 2) * Cyclo(2); // records the leading 2 exactly
    out.dxy_rat = (Rational(1) / Rational(2)) * dxy;
    QSeries xdxy = ((X * dxy).normalized());
    out.xdxy_mult = Cyclo(xdxy.c[0] / 2) * Cyclo(2);
    out.xdxy_rat = (Rational(1) / Rational(2)) * xdxy;

    // d alpha+ = ((X - i sqrt i)/sqrt(1+i)) dX/Y, re-expressed in the
    // rotated chart q_{x=1} = e^{i pi/4} q: the q^{2k} coefficient picks up
    // i^k, and dividing by the exact lead (1 - i sqrt i) 2 in the field
    // leaves real coefficients in Q(sqrt2) with the overall constant
    // M = 2 sqrt(sqrt2+1) recorded as a square-root tag.
    Cyclo isqrti = Cyclo::sqrt_i() * Cyclo::i();
    CycloSeries Xc = to_cyclo(X);
    CycloSeries T = ((Xc - CycloSeries::constant(isqrti, Xc.size(), 2)) * to_cyclo(dxy)).normalized();
    if (T.lead != 0) throw std::logic_error("d alpha: unexpected lead");
    Cyclo lead = T.c[0];
    Cyclo lead_inv = lead.inverse();
    Cyclo iu = Cyclo::i();
    out.dalpha = CycloSeries(0, 2, {});
    out.dalpha.c.reserve(T.c.size());
    for (long k = 0; k < T.size(); ++k) {
        Cyclo v = T.c[static_cast<size_t>(k)] * pow_int(iu, k) * lead_inv;
        if (!v.is_real()) throw std::logic_error("d alpha: coefficient outside Q(sqrt2)");
        out.dalpha.c.push_back(v);
    }
    out.m_alpha = Prefactor{Cyclo{Rational(4), Rational(4), Rational(0), Rational(0)}, true, 0};
    out.alpha_tail = out.dalpha.antiderivative();
    out.dalpha = out.dalpha.truncated(order);
    out.alpha_tail = out.alpha_tail.truncated(order);
    out.dxy_rat = out.dxy_rat.truncated(order);
    out.xdxy_rat = out.xdxy_rat.truncated(order);
    return out;
}

// numeric alpha+ from the series: omega + M * alpha_tail(q(tau))
inline Complex alpha_series_eval(const BurnsideTorus& t, const AbelianSeries& ab,
                                 const Complex& tau) {
    mpfr_prec_t p = t.prec;
    Complex q = charts::alpha().q_of_tau(tau, p);
    auto r = ab.alpha_tail.eval(q, p);
    return t.omega + ab.m_alpha.embed(p) * r.value;
}

// ---------------------------------------------------------------------------
// Xi solutions: Xi(alpha) = sqrt((x - i sqrt i) y) (A K(x^2) + B K'(x^2)).
// ---------------------------------------------------------------------------

// x and y over a torus point, continued from reference values
inline std::pair<Complex, Complex> cover_xy_at(const BurnsideTorus& t, const Complex& alpha,
                                               const Complex& x_ref) {
    mpfr_prec_t p = t.prec;
    auto [wp_a, wpp_a] = t.lat.wp_and_prime(alpha);
    auto roots = cover_x_of_wp(wp_a, t);
    Complex x = (abs(roots[0] - x_ref) <= abs(roots[1] - x_ref)) ? roots[0] : roots[1];
    // y from the wp' relation; the i sqrt(i) sign is fixed by y^2 = x^5 - x
    Complex i = Complex::i(p);
    Complex isqrti = Cyclo::sqrt_i().embed(p) * i;
    Complex c = (Cyclo(1) + Cyclo(3) * t.e).embed(p);
    Complex vprime = -(c / pow_int(x - i, 2)) + mul_i(c) / pow_int(x + 1, 2);
    Complex sqrt1pi = sqrt(Complex(1, p) + i);
    Complex y_plus = wpp_a * (x - isqrti) / (vprime * sqrt1pi);
    Complex y_minus = wpp_a * (x + isqrti) / (vprime * sqrt1pi);
    Complex f = pow_int(x, 5) - x;
    Complex y = (abs(y_plus * y_plus - f) <= abs(y_minus * y_minus - f)) ? y_plus : y_minus;
    return {x, y};
}

inline Real xi_solution_check(const BurnsideTorus& t, const Complex& alpha, const Complex& A,
                              const Complex& B, mpfr_prec_t p_bits = kDefaultPrec) {
    mpfr_prec_t wp = 2 * p_bits;
    BurnsideTorus tw(wp);
    Complex a0 = lift(alpha, wp);
    Real h = fd_step(p_bits, wp);
    Complex i = Complex::i(wp);
    Complex isqrti = Cyclo::sqrt_i().embed(wp) * i;

    Complex x_ref = cover_x_of_wp(tw.lat.wp(a0), tw)[0];
    auto xy0 = cover_xy_at(tw, a0, x_ref);
    Complex sq_ref = sqrt((xy0.first - isqrti) * xy0.second);

    auto xi = [&](const Complex& a) {
        auto [x, y] = cover_xy_at(tw, a, x_ref);
        Complex s = sqrt_cont((x - isqrti) * y, sq_ref);
        // K(x^2) is the modulus convention; our K takes the parameter,
        // so the argument is x^4
        Complex m = pow_int(x, 4);
        return s * (lift(A, wp) * complete_elliptic_K(m) + lift(B, wp) * complete_elliptic_Kprime(m));
    };
    Complex xi_aa = fd_second_derivative(xi, a0, h);
    Complex residual = xi_aa - torus_q_half(tw, a0, TorusVariant::burnside, TorusForm::zeta) * xi(a0);
    return abs(residual);
}

// ---------------------------------------------------------------------------
// Holomorphic integral check: quadrature of (x -+ i sqrt i)/sqrt(x^5-x)
// along a path against sqrt(1+i) * (difference of alpha values), modulo
// the period lattice (2 omega, 2 omega').
// ---------------------------------------------------------------------------
struct HoloIntegralResult {
    Complex integral;
    Complex alpha_difference; // sqrt(1+i) (alpha_end - alpha_start), branch-matched
    Real residual;            // distance of the mismatch to the nearest lattice vector
    long lattice_m, lattice_n;
};

inline HoloIntegralResult holo_integral_check(const BurnsideTorus& t,
                                              const std::vector<Complex>& path) {
    mpfr_prec_t p = t.prec;
    Complex i = Complex::i(p);
    Complex isqrti = Cyclo::sqrt_i().embed(p) * i;
    Real tol = Real::pow2(-(static_cast<long>(p) / 2), p);

    // subdivide so the sqrt branch can be chained segment by segment
    std::vector<Complex> pts;
    for (size_t k = 0; k + 1 < path.size(); ++k) {
        const int sub = 16;
        for (int j = 0; j < sub; ++j) {
            Real f(rat(j, sub), p);
            pts.push_back(path[k] + (path[k + 1] - path[k]) * f);
        }
    }
    pts.push_back(path.back());

    auto froot = [&](const Complex& x, const Complex& ref) {
        return sqrt_cont(pow_int(x, 5) - x, ref);
    };
    Complex ref = sqrt(pow_int(pts[0], 5) - pts[0]);
    Complex y_start = ref;
    Complex acc(p);
    for (size_t k = 0; k + 1 < pts.size(); ++k) {
        Complex seg_ref = froot((pts[k] + pts[k + 1]) / 2, ref);
        acc += integrate_segment(
            [&](const Complex& x) { return (x - isqrti) / froot(x, seg_ref); }, pts[k],
            pts[k + 1], tol);
        ref = froot(pts[k + 1], seg_ref);
    }
    Complex y_end = ref;

    // endpoint alpha values on the branches matched to the tracked y
    auto alpha_at = [&](const Complex& x, const Complex& y) {
        Complex v = cover_wp_of_x(x, t);
        Complex hint = t.omega * Real(rat(3, 10), p) + t.omega_prime * Real(rat(2, 5), p);
        Complex a0 = wp_inverse(v, t.lat, hint);
        Complex target = alpha_wp_prime_target(t, x, y, +1);
        Complex wp_p = t.lat.wp_prime(a0);
        return (abs(wp_p - target) <= abs(wp_p + target)) ? a0 : -a0;
    };
    Complex a_start = alpha_at(pts.front(), y_start);
    Complex a_end = alpha_at(pts.back(), y_end);

    HoloIntegralResult out{acc, sqrt(Complex(1, p) + i) * (a_end - a_start), Real(0L, p), 0, 0};
    // mismatch must be sqrt(1+i) times a lattice vector
    Complex diff = (acc - out.alpha_difference) / sqrt(Complex(1, p) + i);
    long m, n;
    Complex red = t.lat.reduce(diff, m, n);
    out.lattice_m = m;
    out.lattice_n = n;
    out.residual = abs(red);
    return out;
}

} // namespace burnside

#endif
