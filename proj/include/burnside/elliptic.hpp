#ifndef BURNSIDE_ELLIPTIC_HPP
#define BURNSIDE_ELLIPTIC_HPP

#include <array>
#include <functional>
#include <stdexcept>
#include <utility>

#include "burnside/complex.hpp"
#include "burnside/tolerance.hpp"

namespace burnside {

// Half-periods (omega, omega') of a Weierstrass lattice, Im(omega'/omega) > 0.
struct HalfPeriods {
    Complex omega, omega_prime;
};

struct LatticeParams {
    HalfPeriods hp;
    Complex g2, g3;
    Complex eta, eta_prime;      // zeta(omega), zeta(omega')
    Complex e, e_prime, e_dprime; // wp(omega), wp(omega'), wp(omega'')
};

struct WeierstrassValues {
    Complex sigma, zeta, wp, wp_prime;
};

// All Weierstrass evaluation goes through Jacobi theta series in the nome
// q = exp(i pi omega'/omega).  They converge geometrically; the truncated
// Eisenstein lattice sum survives only as a test oracle.
//
// A Lattice instance precomputes the theta constants for one (omega,
// omega', precision) and is immutable afterwards, so it can be shared
// freely across threads.
class Lattice {
  public:
    Lattice(const Complex& omega, const Complex& omega_prime)
        : omega_(omega), omega_prime_(omega_prime), prec_(min_prec_of(omega, omega_prime)) {
        Complex tau = omega_prime_ / omega_;
        if (tau.im.sign() <= 0) throw OutOfDomain("Im(omega'/omega) must be positive");
        Real pi = Real::pi(prec_);
        Complex ipitau = mul_i(Complex{tau.re * pi, tau.im * pi});
        q_ = exp(ipitau);
        q4_ = exp(ipitau / 4);
        if (abs(q_) > Real(1L, prec_) - Real::pow2(-10, prec_))
            throw OutOfDomain("degenerate lattice: |q| too close to 1");
        eps_ = Real::pow2(-(prec_ + 32), prec_);

        // theta constants
        Complex q2 = q_ * q_;
        Complex qn2(1, prec_);  // q^{n^2} running value starts at n=0 term handled separately
        Complex t3(1, prec_), t4(1, prec_);
        Complex qpow = q_; // q^{n^2}, n=1
        long n = 1;
        while (true) {
            Complex term = qpow * 2;
            t3 += term;
            t4 += (n % 2 == 0) ? term : -term;
            if (abs(term) < eps_) break;
            // q^{(n+1)^2} = q^{n^2} * q^{2n+1}
            qpow = qpow * pow_int(q_, 2 * n + 1);
            ++n;
        }
        Complex t2(0, prec_), t1p(0, prec_), t1ppp(0, prec_);
        Complex qnn(1, prec_); // q^{n(n+1)}, n=0
        n = 0;
        while (true) {
            Complex term = qnn;
            long m = 2 * n + 1;
            t2 += term;
            Complex signed_term = (n % 2 == 0) ? term : -term;
            t1p += signed_term * m;
            t1ppp += signed_term * (m * m * m);
            if (abs(term) * m * m * m < eps_) break;
            qnn = qnn * pow_int(q_, 2 * (n + 1));
            ++n;
        }
        th2_0_ = q4_ * t2 * 2;
        th3_0_ = t3;
        th4_0_ = t4;
        th1p_0_ = q4_ * t1p * 2;
        th1ppp_0_ = -(q4_ * t1ppp * 2);

        c_ = Complex{pi, Real(0L, prec_)} / (omega_ * 2);
        Complex c2 = c_ * c_;
        Complex d13 = c2 * pow_int(th3_0_, 4); // e - e'
        Complex d12 = c2 * pow_int(th4_0_, 4); // e - e''
        e_ = (d13 + d12) / 3;
        e_prime_ = e_ - d13;
        e_dprime_ = e_ - d12;
        g2_ = (e_ * e_ + e_prime_ * e_prime_ + e_dprime_ * e_dprime_) * 2;
        g3_ = e_ * e_prime_ * e_dprime_ * 4;
        // eta = zeta(omega) = -(pi^2/(12 omega)) theta1'''(0)/theta1'(0),
        // eta' from Legendre's relation eta omega' - eta' omega = i pi / 2.
        eta_ = -(Complex{pi * pi, Real(0L, prec_)} / (omega_ * 12)) * (th1ppp_0_ / th1p_0_);
        Complex half_i_pi = mul_i(Complex{pi / 2, Real(0L, prec_)});
        eta_prime_ = (eta_ * omega_prime_ - half_i_pi) / omega_;
    }

    mpfr_prec_t prec() const { return prec_; }
    const Complex& omega() const { return omega_; }
    const Complex& omega_prime() const { return omega_prime_; }

    LatticeParams params() const {
        return {
            {omega_, omega_prime_}, g2_, g3_, eta_, eta_prime_, e_, e_prime_, e_dprime_};
    }

    // Reduce z modulo the period lattice (2 omega, 2 omega') to the cell
    // centred at 0; reports the removed integer multiples.
    Complex reduce(const Complex& z, long& m, long& n) const {
        Complex two_w = omega_ * 2, two_wp = omega_prime_ * 2;
        Real det = two_w.re * two_wp.im - two_w.im * two_wp.re;
        Real s = (z.re * two_wp.im - z.im * two_wp.re) / det;
        Real t = (two_w.re * z.im - two_w.im * z.re) / det;
        m = round_nearest(s).to_long();
        n = round_nearest(t).to_long();
        return z - two_w * m - two_wp * n;
    }

    Complex wp(const Complex& z) const {
        auto th = thetas(guarded_reduce(z));
        Complex r = c_ * th3_0_ * th4_0_ * th[1] / th[0];
        return e_ + r * r;
    }

    Complex wp_prime(const Complex& z) const {
        auto th = thetas(guarded_reduce(z));
        Complex cube = th[0] * th[0] * th[0];
        return -(c_ * c_ * c_) * th1p_0_ * th1p_0_ * (th[1] * th[2] * th[3] / cube) * 2;
    }

    std::pair<Complex, Complex> wp_and_prime(const Complex& z) const {
        auto th = thetas(guarded_reduce(z));
        Complex r = c_ * th3_0_ * th4_0_ * th[1] / th[0];
        Complex cube = th[0] * th[0] * th[0];
        Complex wpp = -(c_ * c_ * c_) * th1p_0_ * th1p_0_ * (th[1] * th[2] * th[3] / cube) * 2;
        return {e_ + r * r, wpp};
    }

    Complex zeta(const Complex& z) const {
        long m, n;
        Complex zr = reduce(z, m, n);
        guard(zr);
        auto thd = theta1_and_d1(zr);
        Complex val = (eta_ / omega_) * zr + c_ * (thd.second / thd.first);
        return val + eta_ * (2 * m) + eta_prime_ * (2 * n);
    }

    Complex sigma(const Complex& z) const {
        long m, n;
        Complex zr = reduce(z, m, n);
        auto thd = theta1_and_d1(zr);
        Complex base = (omega_ * 2 / Complex{Real::pi(prec_), Real(0L, prec_)}) *
                       exp((eta_ / (omega_ * 2)) * zr * zr) * (thd.first / th1p_0_);
        if (m == 0 && n == 0) return base;
        Complex periods = eta_ * (2 * m) + eta_prime_ * (2 * n);
        Complex corr = exp(periods * (zr + omega_ * m + omega_prime_ * n));
        long sgn = ((m + n + m * n) % 2 == 0) ? 1 : -1;
        return base * corr * sgn;
    }

  private:
    static mpfr_prec_t min_prec_of(const Complex& a, const Complex& b) {
        return std::min(a.prec(), b.prec());
    }

    void guard(const Complex& zr) const {
        Real g = Real::pow2(-(prec_ / 4), prec_) * abs(omega_);
        for (long a = -1; a <= 1; ++a)
            for (long b = -1; b <= 1; ++b) {
                Complex p = omega_ * (2 * a) + omega_prime_ * (2 * b);
                if (abs(zr - p) < g)
                    throw NearSingularity("argument within guard radius of a lattice point");
            }
    }

    Complex guarded_reduce(const Complex& z) const {
        long m, n;
        Complex zr = reduce(z, m, n);
        guard(zr);
        return zr;
    }

    // theta_1..theta_4 at v = pi z/(2 omega); returns [th1, th2, th3, th4].
    std::array<Complex, 4> thetas(const Complex& z) const {
        Complex v = (Complex{Real::pi(prec_), Real(0L, prec_)} * z) / (omega_ * 2);
        Complex u = exp(mul_i(v));
        Complex uinv = 1 / u;
        Complex u2 = u * u, u2inv = uinv * uinv;
        Complex up = u, um = uinv;        // u^{2n+1}
        Complex ue(1, prec_), ueinv(1, prec_); // u^{2n}
        Complex t1(0, prec_), t2(0, prec_), t3(1, prec_), t4(1, prec_);
        Complex qnn(1, prec_); // q^{n(n+1)}
        Complex qsq = q_;      // q^{n^2}, n=1
        long n = 0;
        Real peak(0L, prec_);
        while (true) {
            // odd-index terms for theta1/theta2
            Complex odd_sum = up + um, odd_diff = up - um;
            Complex term12 = qnn;
            Complex c1 = term12 * odd_diff; // still needs (-1)^n and -i/... factors
            t2 += term12 * odd_sum;
            t1 += (n % 2 == 0) ? c1 : -c1;
            Real mag = abs(term12) * abs(odd_sum);
            // even-index terms for theta3/theta4 (n+1 because n=0 term is 1)
            ue *= u2;
            ueinv *= u2inv;
            Complex even_sum = ue + ueinv;
            Complex term34 = qsq * even_sum;
            t3 += term34;
            t4 += ((n + 1) % 2 == 0) ? term34 : -term34;
            Real mag34 = abs(term34);
            Real m = mag > mag34 ? mag : mag34;
            if (m > peak) peak = m;
            if (m < eps_ && n > 2) break;
            if (n > 100000) throw ConvergenceFailure("theta series did not converge");
            qnn = qnn * pow_int(q_, 2 * (n + 1));
            qsq = qsq * pow_int(q_, 2 * n + 3);
            up *= u2;
            um *= u2inv;
            ++n;
        }
        // theta1 = -i sum (-1)^n q^{(n+1/2)^2} (u^{2n+1} - u^{-(2n+1)})
        return {-(mul_i(q4_ * t1)), q4_ * t2, t3, t4};
    }

    // theta1(v) and d theta1 / dv at v = pi z /(2 omega)
    std::pair<Complex, Complex> theta1_and_d1(const Complex& z) const {
        Complex v = (Complex{Real::pi(prec_), Real(0L, prec_)} * z) / (omega_ * 2);
        Complex u = exp(mul_i(v));
        Complex uinv = 1 / u;
        Complex u2 = u * u, u2inv = uinv * uinv;
        Complex up = u, um = uinv;
        Complex t1(0, prec_), t1d(0, prec_);
        Complex qnn(1, prec_);
        long n = 0;
        while (true) {
            Complex diff = up - um, sum = up + um;
            Complex base = qnn;
            Complex c1 = base * diff;
            Complex cd = base * sum * (2 * n + 1);
            if (n % 2 == 0) {
                t1 += c1;
                t1d += cd;
            } else {
                t1 -= c1;
                t1d -= cd;
            }
            if (abs(base) * (abs(sum) + abs(diff)) * (2 * n + 1) < eps_ && n > 2) break;
            if (n > 100000) throw ConvergenceFailure("theta series did not converge");
            qnn = qnn * pow_int(q_, 2 * (n + 1));
            up *= u2;
            um *= u2inv;
            ++n;
        }
        return {-(mul_i(q4_ * t1)), q4_ * t1d};
    }

    Complex omega_, omega_prime_;
    mpfr_prec_t prec_;
    Complex q_, q4_, c_;
    Complex th2_0_, th3_0_, th4_0_, th1p_0_, th1ppp_0_;
    Complex e_, e_prime_, e_dprime_, g2_, g3_, eta_, eta_prime_;
    Real eps_{64};
};

inline LatticeParams lattice_params(const HalfPeriods& hp) {
    return Lattice(hp.omega, hp.omega_prime).params();
}

inline WeierstrassValues wp_family(const Complex& z, const HalfPeriods& hp) {
    Lattice lat(hp.omega, hp.omega_prime);
    auto [wp, wpp] = lat.wp_and_prime(z);
    return {lat.sigma(z), lat.zeta(z), wp, wpp};
}

// Dedekind eta(tau) = e^{pi i tau/12} prod (1 - e^{2 pi i n tau}), summed by
// Euler's pentagonal number theorem.
inline Complex dedekind_eta(const Complex& tau) {
    if (tau.im.sign() <= 0) throw OutOfDomain("Im(tau) must be positive");
    mpfr_prec_t prec = tau.prec();
    Real pi = Real::pi(prec);
    Complex Q = exp(mul_i(Complex{tau.re * pi * 2, tau.im * pi * 2}));
    Real eps = Real::pow2(-(prec + 16), prec);
    Complex sum(1, prec);
    long k = 1;
    while (true) {
        long gp = k * (3 * k - 1) / 2, gm = k * (3 * k + 1) / 2;
        Complex term = pow_int(Q, gp) + pow_int(Q, gm);
        sum += (k % 2 == 0) ? term : -term;
        if (abs(term) < eps) break;
        ++k;
        if (k > 100000) throw ConvergenceFailure("eta series did not converge");
    }
    Complex pref = exp(mul_i(Complex{tau.re * pi / 12, tau.im * pi / 12}));
    return pref * sum;
}

// Klein's absolute invariant J = g2^3/(g2^3 - 27 g3^2) on half-periods (1, tau).
inline Complex klein_j(const Complex& tau) {
    mpfr_prec_t prec = tau.prec();
    LatticeParams lp = lattice_params({Complex(1, prec), tau});
    Complex g2c = pow_int(lp.g2, 3);
    return g2c / (g2c - lp.g3 * lp.g3 * 27);
}

// Complete elliptic integral K(m) in the *parameter* convention,
//   K(m) = integral_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt = pi / (2 AGM(1, sqrt(1-m))),
// principal branch with a cut on the real ray [1, oo).
inline Complex complete_elliptic_K(const Complex& m) {
    mpfr_prec_t prec = m.prec();
    if (m.im.is_zero() && m.re >= Real(1L, prec))
        throw OutOfDomain("K(m): parameter on the branch cut [1, oo)");
    Complex a(1, prec);
    Complex b = sqrt(Complex(1, prec) - m);
    Real eps = Real::pow2(-(prec - 8), prec);
    for (int it = 0; it < 4 * 64 && abs(a - b) > eps * abs(a); ++it) {
        Complex a1 = (a + b) / 2;
        Complex b1 = sqrt(a * b);
        if (abs(a1 - b1) > abs(a1 + b1)) b1 = -b1;
        a = a1;
        b = b1;
    }
    return Complex{Real::pi(prec), Real(0L, prec)} / (a * 2);
}

inline Complex complete_elliptic_Kprime(const Complex& m) {
    return complete_elliptic_K(Complex(1, m.prec()) - m);
}

namespace detail {

// Carlson's symmetric integral R_F by the duplication algorithm; used as
// the first approximation in wp_inverse.
inline Complex carlson_rf(Complex x, Complex y, Complex z, mpfr_prec_t prec) {
    Real eps = Real::pow2(-(static_cast<long>(prec) / 6), prec);
    Complex A = (x + y + z) / 3;
    for (int it = 0; it < 400; ++it) {
        Real spread = abs(A - x);
        if (abs(A - y) > spread) spread = abs(A - y);
        if (abs(A - z) > spread) spread = abs(A - z);
        if (spread < eps * abs(A)) break;
        Complex sx = sqrt(x), sy = sqrt(y), sz = sqrt(z);
        Complex lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) / 4;
        y = (y + lam) / 4;
        z = (z + lam) / 4;
        A = (x + y + z) / 3;
    }
    Complex X = (A - x) / A, Y = (A - y) / A, Z = -(X + Y);
    Complex E2 = X * Y - Z * Z, E3 = X * Y * Z;
    Complex one(1, prec);
    Complex series = one - E2 / 10 + E3 / 14 + E2 * E2 / 24 - E2 * E3 * 3 / 44;
    return series / sqrt(A);
}

} // namespace detail

// Invert wp on the lattice: find z with wp(z) = v, choosing the preimage in
// the period cell translated nearest to branch_hint.  Carlson R_F provides
// the seed; Newton with wp' polishes it.
inline Complex wp_inverse(const Complex& v, const Lattice& lat, const Complex& branch_hint) {
    mpfr_prec_t prec = lat.prec();
    LatticeParams lp = lat.params();
    Complex z = detail::carlson_rf(v - lp.e, v - lp.e_prime, v - lp.e_dprime, prec);

    Real tol = Real::pow2(-(static_cast<long>(prec) - prec / 8), prec);
    Real scale = abs(v) > Real(1L, prec) ? abs(v) : Real(1L, prec);
    auto newton = [&](Complex w, int iters) {
        for (int i = 0; i < iters; ++i) {
            auto [p, pp] = lat.wp_and_prime(w);
            Complex f = p - v;
            if (abs(f) < tol * scale) return std::pair{w, true};
            if (abs(pp) < Real::pow2(-(static_cast<long>(prec)), prec)) break;
            w = w - f / pp;
        }
        auto [p, pp] = lat.wp_and_prime(w);
        (void)pp;
        return std::pair{w, abs(p - v) < tol * scale * 16};
    };

    auto [zn, ok] = newton(z, 80);
    if (!ok) {
        // coarse search over the fundamental cell, then Newton again
        Real best(1L, prec);
        bool have = false;
        Complex zb(prec);
        for (int a = -11; a <= 11; ++a)
            for (int b = -11; b <= 11; ++b) {
                Complex cand = lp.hp.omega * 2 * Real(rat(a, 23), prec) +
                               lp.hp.omega_prime * 2 * Real(rat(b, 23), prec);
                Complex r(prec);
                try {
                    r = lat.wp(cand) - v;
                } catch (const NearSingularity&) {
                    continue;
                }
                if (!have || abs(r) < best) {
                    best = abs(r);
                    zb = cand;
                    have = true;
                }
            }
        if (!have) throw ConvergenceFailure("wp_inverse: no usable seed");
        std::tie(zn, ok) = newton(zb, 120);
        if (!ok) throw ConvergenceFailure("wp_inverse: Newton did not converge (bad hint?)");
    }

    // wp is even, so +-zn are both preimages; move each to the translate
    // nearest the hint and keep the closer one.
    long m, n;
    Complex c1 = branch_hint + lat.reduce(zn - branch_hint, m, n);
    Complex c2 = branch_hint + lat.reduce(-zn - branch_hint, m, n);
    Complex chosen = (abs(c1 - branch_hint) <= abs(c2 - branch_hint)) ? c1 : c2;
    auto [zf, okf] = newton(chosen, 24);
    if (!okf) throw ConvergenceFailure("wp_inverse: polish failed");
    return zf;
}

inline Complex wp_inverse(const Complex& v, const LatticeParams& lp, const Complex& branch_hint) {
    return wp_inverse(v, Lattice(lp.hp.omega, lp.hp.omega_prime), branch_hint);
}

// Residuals of the closed differential system satisfied by g2(tau), g3(tau)
// and eta(tau) on half-periods (1, tau):
//   dg2/dtau = (i/pi)(8 g2 eta - 12 g3)
//   dg3/dtau = (i/pi)(12 g3 eta - (2/3) g2^2)
//   deta/dtau = (i/pi)(2 eta^2 - (1/6) g2)
// Derivatives are 8th-order central differences with step h.
struct DiffSystemResiduals {
    Real g2, g3, eta;
};

inline DiffSystemResiduals verify_diff_system(const Complex& tau, const Real& h) {
    mpfr_prec_t prec = tau.prec();
    Complex one(1, prec);
    std::array<LatticeParams, 9> lp;
    for (int k = -4; k <= 4; ++k)
        lp[k + 4] = lattice_params({one, tau + Complex{h * k, Real(0L, prec)}});

    static const std::array<std::pair<int, Rational>, 8> st = {{{-4, rat(1, 280)},
                                                                {-3, rat(-4, 105)},
                                                                {-2, rat(1, 5)},
                                                                {-1, rat(-4, 5)},
                                                                {1, rat(4, 5)},
                                                                {2, rat(-1, 5)},
                                                                {3, rat(4, 105)},
                                                                {4, rat(-1, 280)}}};
    auto d1 = [&](auto field) {
        Complex acc(prec);
        for (auto& [k, c] : st) acc += field(lp[k + 4]) * Real(c, prec);
        return acc / Real(h);
    };
    Complex dg2 = d1([](const LatticeParams& p) { return p.g2; });
    Complex dg3 = d1([](const LatticeParams& p) { return p.g3; });
    Complex deta = d1([](const LatticeParams& p) { return p.eta; });

    const LatticeParams& c = lp[4];
    Complex i_over_pi = mul_i(one) / Complex{Real::pi(prec), Real(0L, prec)};
    Complex r2 = dg2 - i_over_pi * (c.g2 * c.eta * 8 - c.g3 * 12);
    Complex r3 = dg3 - i_over_pi * (c.g3 * c.eta * 12 - c.g2 * c.g2 * Real(rat(2, 3), prec));
    Complex re = deta - i_over_pi * (c.eta * c.eta * 2 - c.g2 * Real(rat(1, 6), prec));
    return {abs(r2), abs(r3), abs(re)};
}

} // namespace burnside

#endif
