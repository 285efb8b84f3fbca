#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "expdisk/complex_ops.hpp"
#include "expdisk/power_series.hpp"

namespace expdisk {

// --------------------------------------------------------------------------
// Series constructors.
//
// Every constructor validates its parameter exclusions, builds coefficients
// from the term ratio recurrence and certifies the truncation remainder on
// |z| <= r_ref with a ratio-majorant bound (see extend_by_ratio).
// --------------------------------------------------------------------------

// Confluent hypergeometric function Phi(a; c; z) = sum (a)_n / ((c)_n n!) z^n.
// Requires c not in {0, -1, -2, ...}.  For a = -m (m = 0, 1, 2, ...) the
// series terminates: the result has exactly m+1 coefficients and tail 0.
PowerSeries kummer_series(cplx a, cplx c, double r_ref);

// Normalized companion Lambda(a; c; z) = (Phi(a; c; z) - 1) c / a, built from
// its own recurrence so the two leading coefficients are exactly 0 and 1.
// Requires a != 0 and the same exclusion on c.
PowerSeries kummer_lambda_series(cplx a, cplx c, double r_ref);

// Normalized Lommel function of the first kind,
//   h(z) = z + sum_{n>=1} (-1/4)^n / ((A)_n (B)_n) z^{n+1},
// with A = (mu - nu + 3)/2, B = (mu + nu + 3)/2.  Requires that neither
// mu + nu nor mu - nu is a negative odd integer.
PowerSeries lommel_series(double mu, double nu, double r_ref);

// Image of the Lommel map under the integral transform that divides the
// n-th coefficient by n.
PowerSeries lommel_alexander_series(double mu, double nu, double r_ref);

// Generalized Struve map u(z) = sum (-c/4)^n / ((3/2)_n (kappa)_n) z^n.
// Requires kappa not in {0, -1, -2, ...}.
PowerSeries struve_u_series(cplx kappa, cplx c, double r_ref);

// Normalized companion chi(z) = 6 kappa (1 - u(z)) / c (requires c != 0),
// built from its own recurrence; leading coefficients exactly 0 and 1.
PowerSeries struve_chi_series(cplx kappa, cplx c, double r_ref);

// --------------------------------------------------------------------------
// Pointwise evaluation and cross-checks.
// --------------------------------------------------------------------------

// Phi(a; c; z) for |z| <= 1 via the certified series.
cplx kummer_eval(cplx a, cplx c, cplx z);

// Independent evaluation of Phi through the Euler integral representation
//   Gamma(c) / (Gamma(a) Gamma(c-a)) * int_0^1 t^{a-1} (1-t)^{c-a-1} e^{tz} dt,
// computed on a dyadic mesh graded into both endpoints with Gauss-Legendre
// panels.  Requires Re a > 0 and Re(c - a) > 0 (endpoint integrability).
cplx kummer_quadrature_oracle(cplx a, cplx c, cplx z);

// | a Phi(a+1; c+1; z) - c Phi'(a; c; z) |.
double kummer_contiguous_check(cplx a, cplx c, cplx z);

// | u(z) + 2 z u'(z) + (c z / (2 kappa)) u_+(z) - 1 | where u = u_{kappa,c}
// and u_+ = u_{kappa+1,c}.
double struve_recursion_check(cplx kappa, cplx c, cplx z);

// Struve function H_nu, modified Struve function L_nu and Bessel function
// J_nu of the first kind, by direct term summation (entire in z after the
// principal-branch power prefactor).  nu + 3/2 (resp. nu + 1 for J) must not
// be a nonpositive integer.
cplx struve_H_eval(double nu, cplx z);
cplx mod_struve_L_eval(double nu, cplx z);
cplx bessel_j_eval(double nu, cplx z);

// 2^nu sqrt(pi) Gamma(nu + 3/2) z^{-(nu+1)} H_nu(z): the power-normalized
// Struve function, equal to u_{nu+3/2, 1} evaluated at z^2.  Computed from
// struve_H_eval so the identity can be checked rather than assumed.
cplx struve_normalized_from_H(double nu, cplx z);

// --------------------------------------------------------------------------
// Defining-equation residuals.
// --------------------------------------------------------------------------

struct OdeResidualReport {
    double max_abs_residual = 0.0;
    std::size_t sample_count = 0;
    cplx worst_z = 0.0;
};

// Maximum absolute residual of the defining differential equation over a
// 32 x 32 polar grid covering |z| <= region_r (region_r in (0, 1]).
OdeResidualReport kummer_residual(cplx a, cplx c, double region_r);
OdeResidualReport lommel_residual(double mu, double nu, double region_r);
OdeResidualReport struve_u_residual(cplx kappa, cplx c, double region_r);

// Same scans on caller-supplied series (supports fault-injection checks).
OdeResidualReport kummer_residual_on(const PowerSeries& s, cplx a, cplx c,
                                     double region_r);
OdeResidualReport lommel_residual_on(const PowerSeries& s, double mu, double nu,
                                     double region_r);
OdeResidualReport struve_u_residual_on(const PowerSeries& s, cplx kappa, cplx c,
                                       double region_r);

// --------------------------------------------------------------------------
// Function identifiers (CLI-facing dispatch).
// --------------------------------------------------------------------------

struct KummerId { cplx a, c; };
struct KummerLambdaId { double a, c; };
struct NormalizedLommelId { double mu, nu; };
struct LommelAlexanderId { double mu, nu; };
struct GeneralizedStruveId { cplx kappa, c; };
struct StruveChiId { double kappa; cplx c; };
struct StruveHId { double nu; };
struct ModStruveLId { double nu; };
struct BesselJId { double nu; };

using SpecialFunctionId =
    std::variant<KummerId, KummerLambdaId, NormalizedLommelId,
                 LommelAlexanderId, GeneralizedStruveId, StruveChiId,
                 StruveHId, ModStruveLId, BesselJId>;

// Throws InputError on violated parameter exclusions.
void validate(const SpecialFunctionId& id);

std::string family_name(const SpecialFunctionId& id);

// True for families that are Maclaurin maps of the unit disk (everything
// except StruveH / ModStruveL / BesselJ, which carry a z^nu-type prefactor).
bool has_disk_series(const SpecialFunctionId& id);

// True for disk-series families normalized to f(0) = 0, f'(0) = 1.
bool is_normalized_family(const SpecialFunctionId& id);

// Certified series on |z| <= r_ref; throws for families without one.
PowerSeries series_of(const SpecialFunctionId& id, double r_ref);

// Pointwise value (disk families require |z| <= 1).
cplx eval_of(const SpecialFunctionId& id, cplx z);

}  // namespace expdisk
