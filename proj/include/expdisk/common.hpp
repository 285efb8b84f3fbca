#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace expdisk {

using cplx = std::complex<double>;

// Raised for violated parameter exclusions, malformed configuration and
// out-of-domain arguments.  Everything else that goes wrong numerically
// (a ratio test that never settles, a vanishing denominator) also lands
// here: the library fails loudly instead of returning NaN.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

void require_finite(cplx v, const char* what);
void require_finite(double v, const char* what);

// Exact tests; exclusion sets are exact parameter values, not neighbourhoods.
bool is_nonpositive_integer(cplx v);
bool is_positive_integer(cplx v);
bool is_negative_odd_integer(cplx v);

std::string fmt_cplx(cplx v);

}  // namespace expdisk
