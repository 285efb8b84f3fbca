#include "expdisk/geometry.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "expdisk/complex_ops.hpp"

namespace expdisk {

SamplingPlan default_plan() {
    SamplingPlan p;
    if (const char* env = std::getenv("EXPDISK_ANGLES")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0')
            throw InputError("EXPDISK_ANGLES: not an integer: " + std::string(env));
        if (v < 256)
            throw InputError("EXPDISK_ANGLES: at least 256 angles required");
        p.angles = static_cast<std::size_t>(v);
    }
    return p;
}

std::pair<bool, double> in_exp_disk(cplx w) {
    require_finite(w, "in_exp_disk");
    if (w == cplx(0.0))
        return {false, std::numeric_limits<double>::infinity()};
    double m = std::abs(principal_log(w));
    return {m < 1.0, m};
}

namespace {

void require_normalized(const AnalyticMap& f, const char* what) {
    if (f.kind != MapKind::normalized)
        throw InputError(std::string(what) + ": requires a normalized map");
    if (f.series.coeffs[0] != cplx(0.0) ||
        (f.series.coeffs.size() > 1 &&
         std::abs(f.series.coeffs[1] - 1.0) > 1e-12))
        throw InputError(std::string(what) +
                         ": normalized map must have f(0) = 0, f'(0) = 1");
}

}  // namespace

AnalyticMap starlike_quantity(const AnalyticMap& f) {
    require_normalized(f, "starlike_quantity");
    PowerSeries num = f.series.derivative();
    PowerSeries den = series_shift_down(f.series);
    std::size_t deg = std::max(num.degree(), den.degree());
    return AnalyticMap{series_divide(num, den, deg), MapKind::raw};
}

AnalyticMap convex_quantity(const AnalyticMap& f) {
    require_normalized(f, "convex_quantity");
    PowerSeries d1 = f.series.derivative();
    PowerSeries num = series_shift_up(d1.derivative());
    std::size_t deg = std::max(num.degree(), d1.degree());
    PowerSeries q = series_divide(num, d1, deg);
    return AnalyticMap{series_add_const(q, cplx(1.0)), MapKind::raw};
}

namespace {

void validate_plan(const SamplingPlan& plan, double r_ref) {
    if (plan.radii.empty()) throw InputError("sampling plan: no radii");
    for (double r : plan.radii) {
        require_finite(r, "sampling radius");
        if (!(r > 0.0 && r < 1.0))
            throw InputError("sampling plan: radii must lie in (0, 1)");
        if (r > r_ref * (1.0 + 1e-12))
            throw InputError("sampling plan: radius exceeds series domain");
    }
    if (plan.angles < 256)
        throw InputError("sampling plan: at least 256 angles required");
    if (plan.refine_factor < 2)
        throw InputError("sampling plan: refine_factor must be >= 2");
}

}  // namespace

SubordinationCertificate certify_subordination_to_exp(const AnalyticMap& p,
                                                      const SamplingPlan& plan) {
    if (p.kind != MapKind::raw)
        throw InputError("certify: expects a raw map with p(0) = 1");
    if (std::abs(p.series.coeffs[0] - 1.0) > 1e-12)
        throw InputError("certify: map does not satisfy p(0) = 1");
    validate_plan(plan, p.series.r_ref);

    SubordinationCertificate cert;
    cert.plan_used = plan;
    double best = -1.0;
    cplx best_z = 0.0;
    bool zero = false;
    cplx zero_at = 0.0;

    auto consider = [&](cplx z, double& circle_best, cplx& circle_z) {
        cplx v = p.series.eval(z);
        if (std::abs(v) < 1e-300) {
            if (!zero) {
                zero = true;
                zero_at = z;
            }
            return;
        }
        double m = std::abs(principal_log(v));
        if (m > circle_best) {
            circle_best = m;
            circle_z = z;
        }
    };

    const double two_pi = 2.0 * std::numbers::pi;
    for (double r : plan.radii) {
        double cb = -1.0;
        cplx cz = 0.0;
        const double step = two_pi / static_cast<double>(plan.angles);
        for (std::size_t k = 0; k < plan.angles; ++k)
            consider(std::polar(r, step * static_cast<double>(k)), cb, cz);
        double window = step;
        for (int round = 0; round < 3 && cb >= 0.0; ++round) {
            double th0 = std::arg(cz);
            double h = window / static_cast<double>(plan.refine_factor);
            long nf = static_cast<long>(plan.refine_factor);
            for (long j = -nf; j <= nf; ++j) {
                if (j == 0) continue;
                consider(std::polar(r, th0 + h * static_cast<double>(j)), cb, cz);
            }
            window = h;
        }
        if (cb > best) {
            best = cb;
            best_z = cz;
        }
    }

    cert.max_log_mod = best < 0.0 ? 0.0 : best;
    cert.margin = 1.0 - cert.max_log_mod;
    cert.zero_encountered = zero;
    cert.witness = zero ? zero_at : best_z;
    if (zero || cert.max_log_mod > 1.0 + 1e-12)
        cert.status = CertificateStatus::refuted;
    else if (cert.max_log_mod >= 1.0 - 1e-9)
        cert.status = CertificateStatus::inconclusive;
    else
        cert.status = CertificateStatus::verified_on_grid;
    return cert;
}

SubordinationCertificate class_membership(const AnalyticMap& f, FunctionClass cls,
                                          const SamplingPlan& plan) {
    switch (cls) {
        case FunctionClass::exp_caratheodory:
            return certify_subordination_to_exp(f, plan);
        case FunctionClass::exp_starlike:
            return certify_subordination_to_exp(starlike_quantity(f), plan);
        case FunctionClass::exp_convex:
            return certify_subordination_to_exp(convex_quantity(f), plan);
    }
    throw InputError("class_membership: unknown class");
}

AnalyticMap hadamard(const AnalyticMap& a, const AnalyticMap& b) {
    if (a.kind != b.kind)
        throw InputError("hadamard: operands have different normalization");
    std::size_t n = std::min(a.series.coeffs.size(), b.series.coeffs.size());
    std::vector<cplx> c(n);
    double ma = 0.0, mb = 0.0;
    for (const cplx& v : a.series.coeffs) ma = std::max(ma, std::abs(v));
    for (const cplx& v : b.series.coeffs) mb = std::max(mb, std::abs(v));
    for (std::size_t k = 0; k < n; ++k)
        c[k] = a.series.coeffs[k] * b.series.coeffs[k];
    double tail = std::min(a.series.tail_bound * std::max(1.0, mb),
                           b.series.tail_bound * std::max(1.0, ma));
    double r = std::min(a.series.r_ref, b.series.r_ref);
    return AnalyticMap{PowerSeries(std::move(c), tail, r), a.kind};
}

AnalyticMap alexander(const AnalyticMap& f) {
    require_normalized(f, "alexander");
    std::vector<cplx> c(f.series.coeffs.size());
    c[0] = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k)
        c[k] = f.series.coeffs[k] / static_cast<double>(k);
    double tail = f.series.tail_bound / static_cast<double>(c.size());
    return AnalyticMap{PowerSeries(std::move(c), tail, f.series.r_ref),
                       MapKind::normalized};
}

AnalyticMap libera(const AnalyticMap& f) {
    require_normalized(f, "libera");
    std::vector<cplx> c(f.series.coeffs.size());
    c[0] = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k)
        c[k] = 2.0 * f.series.coeffs[k] / static_cast<double>(k + 1);
    double tail = 2.0 * f.series.tail_bound / static_cast<double>(c.size() + 1);
    return AnalyticMap{PowerSeries(std::move(c), tail, f.series.r_ref),
                       MapKind::normalized};
}

AnalyticMap geometric_kernel(std::size_t degree) {
    if (degree < 1) throw InputError("geometric_kernel: degree >= 1 required");
    std::vector<cplx> c(degree + 1, cplx(1.0));
    c[0] = 0.0;
    double tail = ratio_majorant_tail(c, 1.0);
    return AnalyticMap{PowerSeries(std::move(c), tail, 1.0), MapKind::normalized};
}

AnalyticMap alexander_kernel(std::size_t degree) {
    if (degree < 1) throw InputError("alexander_kernel: degree >= 1 required");
    std::vector<cplx> c(degree + 1);
    c[0] = 0.0;
    for (std::size_t k = 1; k <= degree; ++k) c[k] = 1.0 / static_cast<double>(k);
    double tail = ratio_majorant_tail(c, 1.0);
    return AnalyticMap{PowerSeries(std::move(c), tail, 1.0), MapKind::normalized};
}

AnalyticMap libera_kernel(std::size_t degree) {
    if (degree < 1) throw InputError("libera_kernel: degree >= 1 required");
    std::vector<cplx> c(degree + 1);
    c[0] = 0.0;
    for (std::size_t k = 1; k <= degree; ++k)
        c[k] = 2.0 / static_cast<double>(k + 1);
    double tail = ratio_majorant_tail(c, 1.0);
    return AnalyticMap{PowerSeries(std::move(c), tail, 1.0), MapKind::normalized};
}

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::verified_on_grid: return "verified_on_grid";
        case CertificateStatus::refuted: return "refuted";
        case CertificateStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::string to_string(FunctionClass c) {
    switch (c) {
        case FunctionClass::exp_caratheodory: return "Pe";
        case FunctionClass::exp_starlike: return "Se_star";
        case FunctionClass::exp_convex: return "Ke";
    }
    return "unknown";
}

std::optional<FunctionClass> class_from_string(const std::string& name) {
    if (name == "Pe") return FunctionClass::exp_caratheodory;
    if (name == "Se_star") return FunctionClass::exp_starlike;
    if (name == "Ke") return FunctionClass::exp_convex;
    return std::nullopt;
}

}  // namespace expdisk
