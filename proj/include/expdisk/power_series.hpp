#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "expdisk/common.hpp"

namespace expdisk {

// Truncated Maclaurin series c_0 + c_1 z + ... + c_N z^N together with a
// bound on the discarded remainder, valid on the closed disk |z| <= r_ref.
//
// tail_bound is an estimate of sup_{|z|<=r_ref} |sum_{n>N} c_n z^n|; it is
// zero for exact polynomials (terminating series, coefficient-level
// constructions).  r_ref lies in (0, 1].
struct PowerSeries {
    std::vector<cplx> coeffs;
    double tail_bound = 0.0;
    double r_ref = 1.0;

    PowerSeries() = default;
    PowerSeries(std::vector<cplx> cs, double tail, double r);

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    // Compensated (Kahan) summation of the truncated polynomial at z.
    // Requires |z| <= r_ref (tiny relative slack for rounded circle points).
    cplx eval(cplx z) const;

    // Coefficient-exact derivative.  The remainder bound of the derivative
    // of a tail is not derivable from the tail bound alone; the recorded
    // estimate uses the crude factor N / (1 - r_ref).
    PowerSeries derivative() const;
};

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_scale(const PowerSeries& a, cplx s);
PowerSeries series_add_const(const PowerSeries& a, cplx s);

// Multiplication / division by the variable.  shift_down requires c_0 = 0.
PowerSeries series_shift_up(const PowerSeries& a);
PowerSeries series_shift_down(const PowerSeries& a);

// Quotient num/den as a series of the given truncation degree, by solving
// the convolution equations for the quotient coefficients.  Requires
// den c_0 != 0.  The quotient tail bound is estimated from the trailing
// computed coefficients (ratio majorant).
PowerSeries series_divide(const PowerSeries& num, const PowerSeries& den,
                          std::size_t degree);

// Estimate of sum_{n>N} |c_n| r^n from the trailing behaviour of the listed
// coefficients.  Never throws; falls back to a pessimistic multiple of the
// last terms when the trailing ratios have not settled below 1/2.
double ratio_majorant_tail(const std::vector<cplx>& coeffs, double r);

namespace detail {

// Appends coefficients c_{n+1} = ratio(n) * c_n to cs until the ratio test
// certifies the remainder on |z| <= r_ref below tail_target (requiring at
// least min_degree coefficients), and returns that remainder bound.
// A ratio of exactly zero terminates the series (bound 0).  Throws after
// 10000 coefficients.
double extend_by_ratio(std::vector<cplx>& cs,
                       const std::function<cplx(std::size_t)>& ratio,
                       double r_ref, double tail_target,
                       std::size_t min_degree);

}  // namespace detail

}  // namespace expdisk
