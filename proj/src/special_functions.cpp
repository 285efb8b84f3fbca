#include "expdisk/special_functions.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

namespace expdisk {

namespace {

constexpr double kTailTarget = 1e-21;
constexpr std::size_t kMinDegree = 30;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_kummer_c(cplx c) {
    if (is_nonpositive_integer(c))
        throw InputError("kummer: parameter c = " + fmt_cplx(c) +
                         " is a nonpositive integer");
}

void check_lommel_params(double mu, double nu) {
    require_finite(mu, "lommel mu");
    require_finite(nu, "lommel nu");
    if (is_negative_odd_integer(cplx(mu + nu)) ||
        is_negative_odd_integer(cplx(mu - nu)))
        throw InputError("lommel: mu +/- nu must not be a negative odd integer");
}

void check_struve_kappa(cplx kappa) {
    if (is_nonpositive_integer(kappa))
        throw InputError("struve: parameter kappa = " + fmt_cplx(kappa) +
                         " is a nonpositive integer");
}

// Keeps the early-settle stop from truncating a terminating hypergeometric
// series short of its final coefficient.
std::size_t kummer_min_degree(cplx a) {
    if (!is_nonpositive_integer(a)) return kMinDegree;
    // one past the final coefficient, so the zero term ratio is what stops
    // the extension (exact polynomial, zero tail)
    return std::max(kMinDegree, static_cast<std::size_t>(-a.real()) + 1);
}

}  // namespace

PowerSeries kummer_series(cplx a, cplx c, double r_ref) {
    require_finite(a, "kummer a");
    require_finite(c, "kummer c");
    check_kummer_c(c);
    std::vector<cplx> cs{cplx(1.0)};
    auto ratio = [a, c](std::size_t n) {
        double dn = static_cast<double>(n);
        return (a + dn) / ((c + dn) * (dn + 1.0));
    };
    double tail =
        detail::extend_by_ratio(cs, ratio, r_ref, kTailTarget, kummer_min_degree(a));
    return PowerSeries(std::move(cs), tail, r_ref);
}

PowerSeries kummer_lambda_series(cplx a, cplx c, double r_ref) {
    require_finite(a, "kummer a");
    require_finite(c, "kummer c");
    if (a == cplx(0.0))
        throw InputError("kummer_lambda: a must be nonzero");
    check_kummer_c(c);
    std::vector<cplx> cs{cplx(0.0), cplx(1.0)};
    // Lambda_n is proportional to Phi_n for n >= 1, so the term ratios agree.
    auto ratio = [a, c](std::size_t n) {
        double dn = static_cast<double>(n);
        return (a + dn) / ((c + dn) * (dn + 1.0));
    };
    double tail =
        detail::extend_by_ratio(cs, ratio, r_ref, kTailTarget, kummer_min_degree(a));
    return PowerSeries(std::move(cs), tail, r_ref);
}

PowerSeries lommel_series(double mu, double nu, double r_ref) {
    check_lommel_params(mu, nu);
    const double A = (mu - nu + 3.0) / 2.0;
    const double B = (mu + nu + 3.0) / 2.0;
    std::vector<cplx> cs{cplx(0.0), cplx(1.0)};
    auto ratio = [A, B](std::size_t n) {
        double dn = static_cast<double>(n) - 1.0;
        return cplx(-0.25 / ((A + dn) * (B + dn)));
    };
    double tail = detail::extend_by_ratio(cs, ratio, r_ref, kTailTarget, kMinDegree);
    return PowerSeries(std::move(cs), tail, r_ref);
}

PowerSeries lommel_alexander_series(double mu, double nu, double r_ref) {
    PowerSeries h = lommel_series(mu, nu, r_ref);
    std::vector<cplx> cs(h.coeffs.size());
    cs[0] = 0.0;
    for (std::size_t n = 1; n < cs.size(); ++n)
        cs[n] = h.coeffs[n] / static_cast<double>(n);
    return PowerSeries(std::move(cs), h.tail_bound, r_ref);
}

PowerSeries struve_u_series(cplx kappa, cplx c, double r_ref) {
    require_finite(kappa, "struve kappa");
    require_finite(c, "struve c");
    check_struve_kappa(kappa);
    std::vector<cplx> cs{cplx(1.0)};
    auto ratio = [kappa, c](std::size_t n) {
        double dn = static_cast<double>(n);
        return (-0.25 * c) / ((1.5 + dn) * (kappa + dn));
    };
    double tail = detail::extend_by_ratio(cs, ratio, r_ref, kTailTarget, kMinDegree);
    return PowerSeries(std::move(cs), tail, r_ref);
}

PowerSeries struve_chi_series(cplx kappa, cplx c, double r_ref) {
    require_finite(kappa, "struve kappa");
    require_finite(c, "struve c");
    check_struve_kappa(kappa);
    if (c == cplx(0.0))
        throw InputError("struve_chi: c must be nonzero");
    std::vector<cplx> cs{cplx(0.0), cplx(1.0)};
    // chi_n = -(6 kappa / c) u_n for n >= 1: the term ratios match those of u.
    auto ratio = [kappa, c](std::size_t n) {
        double dn = static_cast<double>(n);
        return (-0.25 * c) / ((1.5 + dn) * (kappa + dn));
    };
    double tail = detail::extend_by_ratio(cs, ratio, r_ref, kTailTarget, kMinDegree);
    return PowerSeries(std::move(cs), tail, r_ref);
}

cplx kummer_eval(cplx a, cplx c, cplx z) {
    require_finite(z, "kummer_eval z");
    if (std::abs(z) > 1.0 + 1e-12)
        throw InputError("kummer_eval: requires |z| <= 1");
    return kummer_series(a, c, 1.0).eval(z);
}

// ---------------------------------------------------------------------------
// Euler-integral oracle.
// ---------------------------------------------------------------------------

namespace {

struct GaussLegendre {
    std::array<double, 24> x{}, w{};
};

const GaussLegendre& gl24() {
    static const GaussLegendre g = [] {
        GaussLegendre r;
        const int n = 24;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double p1 = 0.0, p0 = 0.0;
            for (int it = 0; it < 64; ++it) {
                p0 = 1.0;
                p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::fabs(dt) < 1e-15) break;
            }
            p0 = 1.0;
            p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            r.x[i] = t;
            r.w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
        return r;
    }();
    return g;
}

}  // namespace

cplx kummer_quadrature_oracle(cplx a, cplx c, cplx z) {
    require_finite(a, "oracle a");
    require_finite(c, "oracle c");
    require_finite(z, "oracle z");
    if (!(a.real() > 0.0) || !((c - a).real() > 0.0))
        throw InputError(
            "kummer_quadrature_oracle: requires Re a > 0 and Re(c - a) > 0");
    const GaussLegendre& g = gl24();
    // t^{a-1} (1-t)^{c-a-1} e^{t z} integrated over a mesh graded dyadically
    // into both endpoints; u parameterizes distance to the nearer endpoint.
    auto left = [&](double u) {
        return std::pow(cplx(u), a - 1.0) * std::pow(cplx(1.0 - u), c - a - 1.0) *
               std::exp(u * z);
    };
    auto right = [&](double u) {
        return std::pow(cplx(1.0 - u), a - 1.0) * std::pow(cplx(u), c - a - 1.0) *
               std::exp((1.0 - u) * z);
    };
    cplx total = 0.0;
    const int levels = 200;  // neglected core [0, 2^-202]: O(eps^{Re a}) each side
    double hi = 0.5;
    for (int k = 0; k <= levels; ++k) {
        double lo = hi * 0.5;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        cplx panel = 0.0;
        for (int i = 0; i < 24; ++i) {
            double u = mid + half * g.x[i];
            panel += g.w[i] * (left(u) + right(u));
        }
        total += panel * half;
        hi = lo;
    }
    cplx pref = complex_gamma(c) / (complex_gamma(a) * complex_gamma(c - a));
    return pref * total;
}

double kummer_contiguous_check(cplx a, cplx c, cplx z) {
    require_finite(z, "contiguous z");
    if (std::abs(z) > 1.0 + 1e-12)
        throw InputError("kummer_contiguous_check: requires |z| <= 1");
    PowerSeries base = kummer_series(a, c, 1.0);
    PowerSeries up = kummer_series(a + 1.0, c + 1.0, 1.0);
    cplx lhs = a * up.eval(z);
    cplx rhs = c * base.derivative().eval(z);
    return std::abs(lhs - rhs);
}

double struve_recursion_check(cplx kappa, cplx c, cplx z) {
    require_finite(z, "recursion z");
    if (std::abs(z) > 1.0 + 1e-12)
        throw InputError("struve_recursion_check: requires |z| <= 1");
    PowerSeries u = struve_u_series(kappa, c, 1.0);
    PowerSeries un = struve_u_series(kappa + 1.0, c, 1.0);
    cplx v = u.eval(z) + 2.0 * z * u.derivative().eval(z) +
             (c * z / (2.0 * kappa)) * un.eval(z) - 1.0;
    return std::abs(v);
}

// ---------------------------------------------------------------------------
// Entire-function evaluators.
// ---------------------------------------------------------------------------

namespace {

// Kahan sum of t_0 * sum_m prod_{j<m} rho(j) w^m where rho supplies the
// term-to-term factor (w folded in by the caller's rho).
cplx entire_sum(cplx t0, const std::function<cplx(std::size_t)>& next_factor) {
    cplx term = t0, sum = 0.0, comp = 0.0;
    for (std::size_t m = 0;; ++m) {
        cplx y = term - comp;
        cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        cplx nt = term * next_factor(m);
        if (m >= 8 && std::abs(nt) <= 1e-18 * (1.0 + std::abs(sum))) break;
        if (m > 400)
            throw InputError("entire series evaluation did not converge");
        term = nt;
    }
    return sum;
}

}  // namespace

cplx struve_H_eval(double nu, cplx z) {
    require_finite(nu, "struve nu");
    require_finite(z, "struve z");
    if (is_nonpositive_integer(cplx(nu + 1.5)))
        throw InputError("struve_H_eval: nu + 3/2 is a nonpositive integer");
    if (z == cplx(0.0)) {
        if (nu + 1.0 > 0.0) return 0.0;
        throw InputError("struve_H_eval: z = 0 requires nu > -1");
    }
    cplx w = 0.25 * z * z;
    cplx t0 = 1.0 / (complex_gamma(cplx(1.5)) * complex_gamma(cplx(nu + 1.5)));
    cplx s = entire_sum(t0, [nu, w](std::size_t m) {
        double dm = static_cast<double>(m);
        return -w / ((dm + 1.5) * (dm + nu + 1.5));
    });
    return std::pow(0.5 * z, cplx(nu + 1.0)) * s;
}

cplx mod_struve_L_eval(double nu, cplx z) {
    require_finite(nu, "struve nu");
    require_finite(z, "struve z");
    if (is_nonpositive_integer(cplx(nu + 1.5)))
        throw InputError("mod_struve_L_eval: nu + 3/2 is a nonpositive integer");
    if (z == cplx(0.0)) {
        if (nu + 1.0 > 0.0) return 0.0;
        throw InputError("mod_struve_L_eval: z = 0 requires nu > -1");
    }
    cplx w = 0.25 * z * z;
    cplx t0 = 1.0 / (complex_gamma(cplx(1.5)) * complex_gamma(cplx(nu + 1.5)));
    cplx s = entire_sum(t0, [nu, w](std::size_t m) {
        double dm = static_cast<double>(m);
        return w / ((dm + 1.5) * (dm + nu + 1.5));
    });
    return std::pow(0.5 * z, cplx(nu + 1.0)) * s;
}

cplx bessel_j_eval(double nu, cplx z) {
    require_finite(nu, "bessel nu");
    require_finite(z, "bessel z");
    if (is_nonpositive_integer(cplx(nu + 1.0)))
        throw InputError("bessel_j_eval: nu + 1 is a nonpositive integer");
    if (z == cplx(0.0)) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw InputError("bessel_j_eval: z = 0 requires nu >= 0");
    }
    cplx w = 0.25 * z * z;
    cplx t0 = 1.0 / complex_gamma(cplx(nu + 1.0));
    cplx s = entire_sum(t0, [nu, w](std::size_t m) {
        double dm = static_cast<double>(m);
        return -w / ((dm + 1.0) * (dm + nu + 1.0));
    });
    return std::pow(0.5 * z, cplx(nu)) * s;
}

cplx struve_normalized_from_H(double nu, cplx z) {
    require_finite(nu, "struve nu");
    require_finite(z, "struve z");
    if (z == cplx(0.0)) return 1.0;
    const double spi = std::sqrt(std::numbers::pi);
    return std::pow(2.0, nu) * spi * complex_gamma(cplx(nu + 1.5)) *
           std::pow(z, cplx(-(nu + 1.0))) * struve_H_eval(nu, z);
}

// ---------------------------------------------------------------------------
// Defining-equation residual scans.
// ---------------------------------------------------------------------------

namespace {

OdeResidualReport residual_scan(const std::function<cplx(cplx)>& resid,
                                double region_r) {
    if (!(region_r > 0.0 && region_r <= 1.0))
        throw InputError("residual scan: region_r must lie in (0, 1]");
    OdeResidualReport rep;
    const int nr = 32, na = 32;
    for (int i = 1; i <= nr; ++i) {
        double r = region_r * static_cast<double>(i) / nr;
        for (int k = 0; k < na; ++k) {
            double th = 2.0 * std::numbers::pi * k / na;
            cplx z = std::polar(r, th);
            double v = std::abs(resid(z));
            ++rep.sample_count;
            if (v > rep.max_abs_residual) {
                rep.max_abs_residual = v;
                rep.worst_z = z;
            }
        }
    }
    return rep;
}

}  // namespace

OdeResidualReport kummer_residual_on(const PowerSeries& s, cplx a, cplx c,
                                     double region_r) {
    PowerSeries d1 = s.derivative();
    PowerSeries d2 = d1.derivative();
    return residual_scan(
        [&](cplx z) {
            return z * d2.eval(z) + (c - z) * d1.eval(z) - a * s.eval(z);
        },
        region_r);
}

OdeResidualReport lommel_residual_on(const PowerSeries& s, double mu, double nu,
                                     double region_r) {
    PowerSeries d1 = s.derivative();
    PowerSeries d2 = d1.derivative();
    const double p = 0.25 * ((mu - 1.0) * (mu - 1.0) - nu * nu);
    const double q = 0.25 * ((mu + 1.0) * (mu + 1.0) - nu * nu);
    return residual_scan(
        [&](cplx z) {
            return z * z * d2.eval(z) + mu * z * d1.eval(z) +
                   (p + 0.25 * z) * s.eval(z) - q * z;
        },
        region_r);
}

OdeResidualReport struve_u_residual_on(const PowerSeries& s, cplx kappa, cplx c,
                                       double region_r) {
    PowerSeries d1 = s.derivative();
    PowerSeries d2 = d1.derivative();
    return residual_scan(
        [&](cplx z) {
            return 4.0 * z * z * d2.eval(z) + 2.0 * (2.0 * kappa + 1.0) * z * d1.eval(z) +
                   (c * z + 2.0 * (kappa - 1.0)) * s.eval(z) - 2.0 * (kappa - 1.0);
        },
        region_r);
}

OdeResidualReport kummer_residual(cplx a, cplx c, double region_r) {
    return kummer_residual_on(kummer_series(a, c, region_r), a, c, region_r);
}

OdeResidualReport lommel_residual(double mu, double nu, double region_r) {
    return lommel_residual_on(lommel_series(mu, nu, region_r), mu, nu, region_r);
}

OdeResidualReport struve_u_residual(cplx kappa, cplx c, double region_r) {
    return struve_u_residual_on(struve_u_series(kappa, c, region_r), kappa, c,
                                region_r);
}

// ---------------------------------------------------------------------------
// Identifier dispatch.
// ---------------------------------------------------------------------------

void validate(const SpecialFunctionId& id) {
    std::visit(
        overloaded{
            [](const KummerId& f) {
                require_finite(f.a, "kummer a");
                require_finite(f.c, "kummer c");
                check_kummer_c(f.c);
            },
            [](const KummerLambdaId& f) {
                require_finite(f.a, "kummer a");
                require_finite(f.c, "kummer c");
                if (f.a == 0.0) throw InputError("kummer_lambda: a must be nonzero");
                check_kummer_c(cplx(f.c));
            },
            [](const NormalizedLommelId& f) { check_lommel_params(f.mu, f.nu); },
            [](const LommelAlexanderId& f) { check_lommel_params(f.mu, f.nu); },
            [](const GeneralizedStruveId& f) {
                require_finite(f.kappa, "struve kappa");
                require_finite(f.c, "struve c");
                check_struve_kappa(f.kappa);
            },
            [](const StruveChiId& f) {
                require_finite(f.kappa, "struve kappa");
                require_finite(f.c, "struve c");
                check_struve_kappa(cplx(f.kappa));
                if (f.c == cplx(0.0)) throw InputError("struve_chi: c must be nonzero");
            },
            [](const StruveHId& f) {
                require_finite(f.nu, "struve nu");
                if (is_nonpositive_integer(cplx(f.nu + 1.5)))
                    throw InputError("struve_h: nu + 3/2 is a nonpositive integer");
            },
            [](const ModStruveLId& f) {
                require_finite(f.nu, "struve nu");
                if (is_nonpositive_integer(cplx(f.nu + 1.5)))
                    throw InputError("mod_struve_l: nu + 3/2 is a nonpositive integer");
            },
            [](const BesselJId& f) {
                require_finite(f.nu, "bessel nu");
                if (is_nonpositive_integer(cplx(f.nu + 1.0)))
                    throw InputError("bessel_j: nu + 1 is a nonpositive integer");
            },
        },
        id);
}

std::string family_name(const SpecialFunctionId& id) {
    return std::visit(
        overloaded{
            [](const KummerId&) { return std::string("kummer"); },
            [](const KummerLambdaId&) { return std::string("kummer-lambda"); },
            [](const NormalizedLommelId&) { return std::string("lommel"); },
            [](const LommelAlexanderId&) { return std::string("lommel-alexander"); },
            [](const GeneralizedStruveId&) { return std::string("struve-u"); },
            [](const StruveChiId&) { return std::string("struve-chi"); },
            [](const StruveHId&) { return std::string("struve-h"); },
            [](const ModStruveLId&) { return std::string("mod-struve-l"); },
            [](const BesselJId&) { return std::string("bessel-j"); },
        },
        id);
}

bool has_disk_series(const SpecialFunctionId& id) {
    return !(std::holds_alternative<StruveHId>(id) ||
             std::holds_alternative<ModStruveLId>(id) ||
             std::holds_alternative<BesselJId>(id));
}

bool is_normalized_family(const SpecialFunctionId& id) {
    return std::holds_alternative<KummerLambdaId>(id) ||
           std::holds_alternative<NormalizedLommelId>(id) ||
           std::holds_alternative<LommelAlexanderId>(id) ||
           std::holds_alternative<StruveChiId>(id);
}

PowerSeries series_of(const SpecialFunctionId& id, double r_ref) {
    validate(id);
    return std::visit(
        overloaded{
            [&](const KummerId& f) { return kummer_series(f.a, f.c, r_ref); },
            [&](const KummerLambdaId& f) {
                return kummer_lambda_series(cplx(f.a), cplx(f.c), r_ref);
            },
            [&](const NormalizedLommelId& f) {
                return lommel_series(f.mu, f.nu, r_ref);
            },
            [&](const LommelAlexanderId& f) {
                return lommel_alexander_series(f.mu, f.nu, r_ref);
            },
            [&](const GeneralizedStruveId& f) {
                return struve_u_series(f.kappa, f.c, r_ref);
            },
            [&](const StruveChiId& f) {
                return struve_chi_series(cplx(f.kappa), f.c, r_ref);
            },
            [&](const StruveHId&) -> PowerSeries {
                throw InputError("struve-h: no unit-disk Maclaurin series; use eval");
            },
            [&](const ModStruveLId&) -> PowerSeries {
                throw InputError("mod-struve-l: no unit-disk Maclaurin series; use eval");
            },
            [&](const BesselJId&) -> PowerSeries {
                throw InputError("bessel-j: no unit-disk Maclaurin series; use eval");
            },
        },
        id);
}

cplx eval_of(const SpecialFunctionId& id, cplx z) {
    validate(id);
    if (has_disk_series(id)) return series_of(id, 1.0).eval(z);
    return std::visit(
        overloaded{
            [&](const StruveHId& f) { return struve_H_eval(f.nu, z); },
            [&](const ModStruveLId& f) { return mod_struve_L_eval(f.nu, z); },
            [&](const BesselJId& f) { return bessel_j_eval(f.nu, z); },
            [&](const auto&) -> cplx { return 0.0; },  // unreachable
        },
        id);
}

}  // namespace expdisk
