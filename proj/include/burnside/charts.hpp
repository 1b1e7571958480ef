#ifndef BURNSIDE_CHARTS_HPP
#define BURNSIDE_CHARTS_HPP

#include <stdexcept>
#include <string>

#include "burnside/cyclo.hpp"
#include "burnside/rational.hpp"

namespace burnside {

// Local coordinate at a parabolic point:
//
//     q(tau) = exp( (pi i / 4) * (a tau + b) / (c tau + d) ),
//
// with (a,b,c,d) exact in Q(i,sqrt2) and ad - bc != 0.  The pi i/4 factor
// is common to every canonical chart of this project and is part of the
// chart semantics, which keeps the Moebius data inside the exact field.
struct CuspChart {
    Cyclo a, b, c, d;
    std::string cusp;     // label of the branch value this chart expands at
    std::string approach; // how tau approaches the parabolic point

    CuspChart(long a_, long b_, long c_, long d_, std::string cusp_, std::string approach_)
        : a(a_), b(b_), c(c_), d(d_), cusp(std::move(cusp_)), approach(std::move(approach_)) {
        if ((a * d - b * c).is_zero()) throw std::invalid_argument("degenerate chart");
    }

    Complex q_of_tau(const Complex& tau, mpfr_prec_t prec) const {
        Complex num = a.embed(prec) * tau + b.embed(prec);
        Complex den = c.embed(prec) * tau + d.embed(prec);
        Real pi4 = Real::pi(prec) / 4;
        return exp(mul_i(num / den * pi4));
    }
};

// The canonical charts.  x-value labels follow the branch-point table
// x(0)=0, x(1/2)=1, x(oo)=-1, x(1)=i, x(-1)=-i with the pole at tau=2.
namespace charts {

inline CuspChart pole() { return {2, -5, 1, -2, "x=oo", "tau -> 2 + i0"}; }
inline CuspChart zero() { return {1, -2, 2, 0, "x=0", "tau -> 0 + i0"}; }
inline CuspChart one() { return {3, -2, 2, -1, "x=1", "tau -> 1/2 + i0"}; }
inline CuspChart minus_one() { return {1, -2, 0, 1, "x=-1", "tau -> +i oo"}; }
inline CuspChart plus_i() { return {1, -2, 1, -1, "x=i", "tau -> 1 + i0"}; }
inline CuspChart minus_i() { return {1, -1, 1, 1, "x=-i", "tau -> -1 + i0"}; }
// chart used for the Abelian differential series at (alpha_1 = omega, x = 1);
// it is the x=1 chart rotated by e^{i pi/4}
inline CuspChart alpha() { return {1, -1, 2, -1, "x=1 (alpha)", "tau -> 1/2 + i0"}; }
// Theta_1 expansion charts
inline CuspChart theta1_inf() { return {2, -5, 0, 2, "theta1 @ oo", "tau -> +i oo"}; }
inline CuspChart theta1_cusp() { return {2, -1, 1, 0, "theta1 @ 0", "tau -> 0 + i0"}; }
// chart of the conversion series, q = e^{pi i tau / 4}
inline CuspChart conversion() { return {1, 0, 0, 1, "mu", "tau -> +i oo"}; }

} // namespace charts

// Local-exponent bookkeeping for a double pole mu/(X - e_j)^2 in a Q
// function with Fuchsian monodromy: meromorphic solutions force
// n^2 (2 mu + 1) = 1 with integer order n, and mu = -1/2 is the parabolic
// degeneration (n = oo, exponential local coordinate).
struct SingularityClass {
    Rational mu;
    bool parabolic = false;
    long n = 0; // defined only when !parabolic; orders come in pairs +-n
};

inline SingularityClass classify_singularity(const Rational& mu) {
    if (mu == rat(-1, 2)) return {mu, true, 0};
    Rational r = Rational(1) / (mu * 2 + 1);
    Rational root;
    if (!sqrt_exact(r, root) || !is_integer(root))
        throw std::domain_error("exponent constraint n^2(2mu+1)=1 has no integer solution");
    return {mu, false, root.get_num().get_si()};
}

} // namespace burnside

#endif
