#ifndef BURNSIDE_QUADRATURE_HPP
#define BURNSIDE_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "burnside/complex.hpp"
#include "burnside/tolerance.hpp"

namespace burnside {

// tanh-sinh (double-exponential) quadrature of an analytic integrand along
// a straight segment: u = tanh((pi/2) sinh t), trapezoid in t with level
// doubling until two refinements agree to tol.  The paths used here stay
// away from branch points, so convergence is double-exponential.
inline Complex integrate_segment(const std::function<Complex(const Complex&)>& f,
                                 const Complex& a, const Complex& b, const Real& tol) {
    mpfr_prec_t prec = a.prec();
    Complex mid = (a + b) / 2;
    Complex halfd = (b - a) / 2;
    Real c = Real::pi(prec) / 2;
    Real cutoff = Real::pow2(-(static_cast<long>(prec) + 32), prec);

    auto sample = [&](const Real& t, Complex& acc) {
        Real sh = sinh(t);
        Real w = cosh(t) / pow_si(cosh(sh * c), 2) * c;
        if (w < cutoff) return false;
        Real u = tanh(sh * c);
        acc += f(mid + halfd * u) * w;
        return true;
    };

    // level 0: integer nodes
    Complex sum = f(mid) * c; // t = 0 has weight c
    for (long j = 1; j <= 12; ++j) {
        Complex part(prec);
        bool live = sample(Real(j, prec), part);
        live = sample(Real(-j, prec), part) || live;
        sum += part;
        if (!live) break;
    }
    Complex prev = sum * halfd;

    for (int level = 1; level <= 13; ++level) {
        Real h = ldexp2(Real(1L, prec), -level);
        long jmax = 12L << level;
        for (long j = 1; j <= jmax; j += 2) {
            Complex part(prec);
            Real t = h * j;
            bool live = sample(t, part);
            live = sample(-t, part) || live;
            sum += part;
            if (!live && t > Real(3L, prec)) break;
        }
        Complex cur = sum * halfd * h;
        if (level >= 3 && abs(cur - prev) < tol * (Real(1L, prec) + abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

// integrate along a polyline
inline Complex integrate_path(const std::function<Complex(const Complex&)>& f,
                              const std::vector<Complex>& path, const Real& tol) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least two points");
    Complex acc(path[0].prec());
    for (size_t k = 0; k + 1 < path.size(); ++k)
        acc += integrate_segment(f, path[k], path[k + 1], tol);
    return acc;
}

} // namespace burnside

#endif
