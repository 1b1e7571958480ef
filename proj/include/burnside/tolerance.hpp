#ifndef BURNSIDE_TOLERANCE_HPP
#define BURNSIDE_TOLERANCE_HPP

#include <stdexcept>

#include "burnside/real.hpp"

namespace burnside {

// Default working precision.  All the 30-digit constants checked here need
// a little over 110 bits, so 256 leaves a wide guard band.
inline constexpr mpfr_prec_t kDefaultPrec = 256;

struct Tolerance {
    mpfr_prec_t precision_bits = kDefaultPrec;
    long digit_tol = 30; // decimal digits for constant matching

    explicit Tolerance(mpfr_prec_t p = kDefaultPrec) : precision_bits(p) {
        if (p < 64) throw std::invalid_argument("precision must be >= 64 bits");
    }

    // residual_tol defaults to 2^(-P/2)
    Real residual_tol() const { return Real::pow2(-(precision_bits / 2), precision_bits); }
    Real pow2_tol(long e) const { return Real::pow2(e, precision_bits); }
};

struct NearSingularity : std::domain_error {
    using std::domain_error::domain_error;
};
struct OutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace burnside

#endif
