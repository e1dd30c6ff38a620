#ifndef KRAWX_REAL_HPP
#define KRAWX_REAL_HPP

#include <complex>

namespace krawx {

// Working precision of every public value. Internal kernels accumulate in
// long double regardless, so switching Real to long double only widens the
// API surface, not the arithmetic.
#ifdef KRAWX_REAL_LONG_DOUBLE
using Real = long double;
#else
using Real = double;
#endif

using Complex = std::complex<Real>;

} // namespace krawx

#endif
