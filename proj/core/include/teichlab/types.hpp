#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace teichlab {

using cxd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Thrown when an iterative or adaptive scheme exhausts its budget without
// reaching the requested tolerance.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed input files.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer power by squaring; n may be negative (z must be nonzero then).
inline cxd pow_int(cxd z, long n) {
    if (n < 0) return 1.0 / pow_int(z, -n);
    cxd r = 1.0, base = z;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

}  // namespace teichlab
