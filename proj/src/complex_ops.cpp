#include "expdisk/complex_ops.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace expdisk {

void require_finite(cplx v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw InputError(std::string(what) + ": non-finite value");
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw InputError(std::string(what) + ": non-finite value");
}

bool is_nonpositive_integer(cplx v) {
    return v.imag() == 0.0 && v.real() <= 0.0 && v.real() == std::floor(v.real());
}

bool is_positive_integer(cplx v) {
    return v.imag() == 0.0 && v.real() > 0.0 && v.real() == std::floor(v.real());
}

bool is_negative_odd_integer(cplx v) {
    if (v.imag() != 0.0) return false;
    double x = v.real();
    if (x >= 0.0 || x != std::floor(x)) return false;
    return std::llround(std::fabs(x)) % 2 == 1;
}

std::string fmt_cplx(cplx v) {
    std::ostringstream os;
    os.precision(17);
    os << v.real();
    if (v.imag() != 0.0) os << (v.imag() < 0 ? "-" : "+") << std::fabs(v.imag()) << "i";
    return os.str();
}

cplx principal_log(cplx w) {
    require_finite(w, "principal_log");
    if (w == cplx(0.0, 0.0)) throw InputError("principal_log: argument is zero");
    cplx v = std::log(w);
    // std::log maps the negative real axis to Im = +pi already, but a signed
    // zero in the imaginary part of w can produce Im = -pi; normalise.
    if (v.imag() == -std::numbers::pi) v = cplx(v.real(), std::numbers::pi);
    return v;
}

namespace {

// Lanczos coefficients, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace

cplx complex_gamma(cplx z) {
    require_finite(z, "complex_gamma");
    if (is_nonpositive_integer(z))
        throw InputError("complex_gamma: pole at z = " + fmt_cplx(z));
    const double pi = std::numbers::pi;
    if (z.real() < 0.5)
        return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
    cplx x = z - 1.0;
    cplx a = kLanczos[0];
    for (int k = 1; k < 9; ++k) a += kLanczos[k] / (x + static_cast<double>(k));
    cplx t = x + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

cplx pochhammer(cplx x, int n) {
    require_finite(x, "pochhammer");
    if (n < 0) throw InputError("pochhammer: n must be >= 0");
    cplx v = 1.0;
    for (int k = 0; k < n; ++k) v *= x + static_cast<double>(k);
    return v;
}

}  // namespace expdisk
