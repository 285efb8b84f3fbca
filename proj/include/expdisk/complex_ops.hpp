#pragma once

#include "expdisk/common.hpp"

namespace expdisk {

// Principal branch of the logarithm with Im(log w) in (-pi, pi].
// Throws InputError on w == 0 and on non-finite input.
cplx principal_log(cplx w);

// Gamma function on the complex plane (Lanczos approximation, g = 7,
// 9 coefficients, reflection formula for Re z < 1/2).  Relative error
// is below 1e-12 for |z| <= 50.  Throws on poles (z = 0, -1, -2, ...).
cplx complex_gamma(cplx z);

// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.  n >= 0.
cplx pochhammer(cplx x, int n);

}  // namespace expdisk
