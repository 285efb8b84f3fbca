#include "expdisk/theorems.hpp"

#include <algorithm>
#include <cmath>

namespace expdisk {

namespace thresholds {

double kummer_disk_bound() {
    const double e = std::exp(1.0);
    return (e - 1.0) * (e - 1.0) * (e + 1.0) / (e * e);
}

double gdelta_radius() {
    const double e = std::exp(1.0);
    return (e * e * e - 2.0 * e * e - e + 1.0) / (e * e * (e - 1.0));
}

double hdelta_radius() {
    const double e = std::exp(1.0);
    return (e * e - 1.0) / (e * e);
}

double lommel_convex_rhs() {
    const double e = std::exp(1.0);
    return e * e * e * e - 3.0 * e * e * e + 3.25 * e * e - 0.75 * e - 3.0 / e +
           2.0 - 2.0 * std::sin(1.0);
}

double lommel_alex_rhs() {
    const double e = std::exp(1.0);
    return e * e * e - e * e + 3.25 * e - 4.0;
}

double struve_convex_rhs(double abs_c) {
    const double e = std::exp(1.0);
    const double em1 = e - 1.0;
    return (e + 1.0) * abs_c + 4.0 * em1 * em1 * em1 + 6.0 * em1 * em1 +
           6.0 / e - 12.0 / (e * e);
}

double struve_h_nu_bound() {
    const double e = std::exp(1.0);
    return e * struve_convex_rhs(1.0) / (8.0 * std::sin(1.0) + 6.0 - 2.0 * e) - 1.5;
}

}  // namespace thresholds

std::vector<TheoremId> all_theorems() {
    return {TheoremId::CH_P,     TheoremId::CH_K,      TheoremId::CH_S,
            TheoremId::CH_GDELTA, TheoremId::CH_HDELTA, TheoremId::LOM_K,
            TheoremId::LOM_ALEX, TheoremId::LOM_P,     TheoremId::STR_P,
            TheoremId::STR_P_REC, TheoremId::STR_K,     TheoremId::STR_H,
            TheoremId::STR_L,    TheoremId::STR_CONV};
}

std::string to_string(TheoremId t) {
    switch (t) {
        case TheoremId::CH_P: return "CH_P";
        case TheoremId::CH_K: return "CH_K";
        case TheoremId::CH_S: return "CH_S";
        case TheoremId::CH_GDELTA: return "CH_GDELTA";
        case TheoremId::CH_HDELTA: return "CH_HDELTA";
        case TheoremId::LOM_K: return "LOM_K";
        case TheoremId::LOM_ALEX: return "LOM_ALEX";
        case TheoremId::LOM_P: return "LOM_P";
        case TheoremId::STR_P: return "STR_P";
        case TheoremId::STR_P_REC: return "STR_P_REC";
        case TheoremId::STR_K: return "STR_K";
        case TheoremId::STR_H: return "STR_H";
        case TheoremId::STR_L: return "STR_L";
        case TheoremId::STR_CONV: return "STR_CONV";
    }
    return "unknown";
}

std::optional<TheoremId> theorem_from_string(const std::string& name) {
    for (TheoremId t : all_theorems())
        if (to_string(t) == name) return t;
    return std::nullopt;
}

namespace {

cplx need(const std::optional<cplx>& v, const char* theorem, const char* what) {
    if (!v)
        throw InputError(std::string(theorem) + ": missing parameter " + what);
    require_finite(*v, what);
    return *v;
}

double need_real(const std::optional<cplx>& v, const char* theorem,
                 const char* what) {
    cplx w = need(v, theorem, what);
    if (w.imag() != 0.0)
        throw InputError(std::string(theorem) + ": parameter " + what +
                         " must be real");
    return w.real();
}

double need_delta(const std::optional<double>& v, const char* theorem) {
    if (!v) throw InputError(std::string(theorem) + ": missing parameter delta");
    require_finite(*v, "delta");
    return *v;
}

Condition make(std::string label, double slack, bool strict = false) {
    Condition c;
    c.label = std::move(label);
    c.slack = slack;
    c.strict = strict;
    c.satisfied = strict ? slack > 0.0 : slack >= 0.0;
    return c;
}

// The denominator-parameter exclusion adopted here is the standard one
// (nonpositive integers only); a literal reading of the stated constraint
// would also reject positive integers.  Flag the divergence, without gating.
void flag_integer_reading(std::vector<Condition>& conds, const char* name,
                          cplx value) {
    if (!is_positive_integer(value)) return;
    Condition c;
    c.label = std::string(name) + " = " + fmt_cplx(value) +
              " is a positive integer: admitted under the standard exclusion, "
              "rejected by a literal reading of the constraint";
    c.satisfied = true;
    c.slack = 0.0;
    c.informational = true;
    conds.push_back(std::move(c));
}

void append_kummer_structural(std::vector<Condition>& conds, double a, double c,
                              bool shifted) {
    // shifted = false: convex case, pivot a > -1; true: starlike case, a > 0.
    if (!shifted) {
        if (a > -1.0) {
            conds.push_back(make("c >= a  (case a > -1)", c - a));
        } else {
            conds.push_back(make("c >= sqrt(1 + (1+a)^2)  (case a <= -1)",
                                 c - std::sqrt(1.0 + (1.0 + a) * (1.0 + a))));
        }
    } else {
        if (a > 0.0) {
            conds.push_back(make("c >= a  (case a > 0)", c - a));
        } else {
            conds.push_back(make("c >= 1 + sqrt(1 + a^2)  (case a <= 0)",
                                 c - (1.0 + std::sqrt(1.0 + a * a))));
        }
    }
}

}  // namespace

HypothesisReport check_hypothesis(TheoremId t, const TheoremParams& p) {
    HypothesisReport rep;
    rep.theorem = t;
    rep.params = p;
    auto& conds = rep.conditions;
    const double e = std::exp(1.0);

    switch (t) {
        case TheoremId::CH_P: {
            cplx a = need(p.a, "CH_P", "a");
            cplx c = need(p.c, "CH_P", "c");
            validate(SpecialFunctionId{KummerId{a, c}});
            conds.push_back(make("Re(c) >= |a| + 2", c.real() - std::abs(a) - 2.0));
            flag_integer_reading(conds, "c", c);
            break;
        }
        case TheoremId::CH_K: {
            double a = need_real(p.a, "CH_K", "a");
            double c = need_real(p.c, "CH_K", "c");
            if (a == 0.0) throw InputError("CH_K: a must be nonzero");
            validate(SpecialFunctionId{KummerLambdaId{a, c}});
            append_kummer_structural(conds, a, c, false);
            conds.push_back(
                make("(e-1)|c-2| + |a| <= (e-1)^2 (e+1) / e^2",
                     thresholds::kummer_disk_bound() -
                         ((e - 1.0) * std::fabs(c - 2.0) + std::fabs(a))));
            flag_integer_reading(conds, "c", cplx(c));
            break;
        }
        case TheoremId::CH_S: {
            double a = need_real(p.a, "CH_S", "a");
            double c = need_real(p.c, "CH_S", "c");
            validate(SpecialFunctionId{KummerId{cplx(a), cplx(c)}});
            append_kummer_structural(conds, a, c, true);
            conds.push_back(
                make("(e-1)|c-3| + |a-1| <= (e-1)^2 (e+1) / e^2",
                     thresholds::kummer_disk_bound() -
                         ((e - 1.0) * std::fabs(c - 3.0) + std::fabs(a - 1.0))));
            flag_integer_reading(conds, "c", cplx(c));
            break;
        }
        case TheoremId::CH_GDELTA: {
            double d = need_delta(p.delta, "CH_GDELTA");
            validate(SpecialFunctionId{KummerLambdaId{1.0, 1.0 + d}});
            conds.push_back(make("|delta - 1| <= (e^3 - 2e^2 - e + 1)/(e^2 (e-1))",
                                 thresholds::gdelta_radius() - std::fabs(d - 1.0)));
            flag_integer_reading(conds, "1 + delta", cplx(1.0 + d));
            break;
        }
        case TheoremId::CH_HDELTA: {
            double d = need_delta(p.delta, "CH_HDELTA");
            validate(SpecialFunctionId{KummerId{cplx(1.0), cplx(1.0 + d)}});
            conds.push_back(make("|delta - 2| <= (e^2 - 1)/e^2",
                                 thresholds::hdelta_radius() - std::fabs(d - 2.0)));
            flag_integer_reading(conds, "1 + delta", cplx(1.0 + d));
            break;
        }
        case TheoremId::LOM_K: {
            double mu = need_real(p.mu, "LOM_K", "mu");
            double nu = need_real(p.nu, "LOM_K", "nu");
            validate(SpecialFunctionId{NormalizedLommelId{mu, nu}});
            conds.push_back(make("mu + 5 > sqrt(3/2 + nu^2)",
                                 mu + 5.0 - std::sqrt(1.5 + nu * nu), true));
            const double M = (mu + 5.0) * (mu + 5.0) - nu * nu;
            const double N = (mu + 3.0) * (mu + 3.0) - nu * nu;
            conds.push_back(
                make("2M - 3 > 4M/N, M = (mu+5)^2 - nu^2, N = (mu+3)^2 - nu^2",
                     2.0 * M - 3.0 - 4.0 * M / N, true));
            conds.push_back(
                make("mu (1 + 2 sin 1) - e(e-1)|(mu+1)(mu-7) - nu^2|/4 >= "
                     "e^4 - 3e^3 + 13e^2/4 - 3e/4 - 3/e + 2 - 2 sin 1",
                     mu * (1.0 + 2.0 * std::sin(1.0)) -
                         0.25 * e * (e - 1.0) *
                             std::fabs((mu + 1.0) * (mu - 7.0) - nu * nu) -
                         thresholds::lommel_convex_rhs()));
            break;
        }
        case TheoremId::LOM_ALEX: {
            double mu = need_real(p.mu, "LOM_ALEX", "mu");
            double nu = need_real(p.nu, "LOM_ALEX", "nu");
            validate(SpecialFunctionId{NormalizedLommelId{mu, nu}});
            conds.push_back(
                make("(mu+1)((mu+1)(mu+3) - nu^2) >= 1/8",
                     (mu + 1.0) * ((mu + 1.0) * (mu + 3.0) - nu * nu) - 0.125));
            conds.push_back(
                make("mu (2e-1) - e(e-1)|(mu-1)^2 - nu^2|/4 >= e^3 - e^2 + 13e/4 - 4",
                     mu * (2.0 * e - 1.0) -
                         0.25 * e * (e - 1.0) *
                             std::fabs((mu - 1.0) * (mu - 1.0) - nu * nu) -
                         thresholds::lommel_alex_rhs()));
            break;
        }
        case TheoremId::LOM_P: {
            cplx mu = need(p.mu, "LOM_P", "mu");
            cplx nu = need(p.nu, "LOM_P", "nu");
            if (is_negative_odd_integer(mu + nu) || is_negative_odd_integer(mu - nu))
                throw InputError("LOM_P: mu +/- nu must not be a negative odd integer");
            conds.push_back(
                make("4 Re(mu) + 3 >= (e-1)|(mu+1)^2 - nu^2|",
                     4.0 * mu.real() + 3.0 -
                         (e - 1.0) * std::abs((mu + 1.0) * (mu + 1.0) - nu * nu)));
            break;
        }
        case TheoremId::STR_P: {
            cplx kappa = need(p.kappa, "STR_P", "kappa");
            cplx c = need(p.cparam, "STR_P", "c");
            validate(SpecialFunctionId{GeneralizedStruveId{kappa, c}});
            conds.push_back(make("Re(kappa) >= (e-1)|kappa - 1|/2 + |c|/4 + 1/2",
                                 kappa.real() - 0.5 * (e - 1.0) * std::abs(kappa - 1.0) -
                                     0.25 * std::abs(c) - 0.5));
            flag_integer_reading(conds, "kappa", kappa);
            break;
        }
        case TheoremId::STR_P_REC: {
            cplx kappa = need(p.kappa, "STR_P_REC", "kappa");
            cplx c = need(p.cparam, "STR_P_REC", "c");
            validate(SpecialFunctionId{GeneralizedStruveId{kappa, c}});
            validate(SpecialFunctionId{GeneralizedStruveId{kappa + 1.0, c}});
            if (c == cplx(0.0)) throw InputError("STR_P_REC: c must be nonzero");
            conds.push_back(
                make("Re(kappa) + 1 >= (e-1)|kappa|/2 + |c|/4 + 1/2",
                     kappa.real() + 1.0 - 0.5 * (e - 1.0) * std::abs(kappa) -
                         0.25 * std::abs(c) - 0.5));
            flag_integer_reading(conds, "kappa", kappa);
            break;
        }
        case TheoremId::STR_K:
        case TheoremId::STR_CONV: {
            const char* name = t == TheoremId::STR_K ? "STR_K" : "STR_CONV";
            double kappa = need_real(p.kappa, name, "kappa");
            cplx c = need(p.cparam, name, "c");
            validate(SpecialFunctionId{StruveChiId{kappa, c}});
            conds.push_back(
                make("2 kappa (4 sin 1 + 3 - e)/e >= (e+1)|c| + 4(e-1)^3 + "
                     "6(e-1)^2 + 6/e - 12/e^2",
                     2.0 * kappa / e * (4.0 * std::sin(1.0) + 3.0 - e) -
                         thresholds::struve_convex_rhs(std::abs(c))));
            flag_integer_reading(conds, "kappa", cplx(kappa));
            break;
        }
        case TheoremId::STR_H:
        case TheoremId::STR_L: {
            const char* name = t == TheoremId::STR_H ? "STR_H" : "STR_L";
            double nu = need_real(p.nu, name, "nu");
            double cc = t == TheoremId::STR_H ? 1.0 : -1.0;
            validate(SpecialFunctionId{StruveChiId{nu + 1.5, cplx(cc)}});
            conds.push_back(
                make("nu >= e (4(e-1)^3 + 6(e-1)^2 + (e+1) + 6/e - 12/e^2) / "
                     "(8 sin 1 + 6 - 2e) - 3/2",
                     nu - thresholds::struve_h_nu_bound()));
            flag_integer_reading(conds, "kappa", cplx(nu + 1.5));
            break;
        }
    }

    rep.all_satisfied = std::all_of(conds.begin(), conds.end(),
                                    [](const Condition& c) { return c.satisfied; });
    return rep;
}

namespace {

AnalyticMap normalized_map(PowerSeries s) {
    return AnalyticMap{std::move(s), MapKind::normalized};
}

AnalyticMap raw_map(PowerSeries s) {
    return AnalyticMap{std::move(s), MapKind::raw};
}

// (2 kappa / c) * (1 - u(z) - 2 z u'(z)) / z: the recursion combination,
// termwise equal to u_{kappa+1, c}.
AnalyticMap struve_recursion_member(cplx kappa, cplx c, double r_ref) {
    PowerSeries u = struve_u_series(kappa, c, r_ref);
    PowerSeries m = series_add(series_scale(u, cplx(-1.0)),
                               series_scale(series_shift_up(u.derivative()),
                                            cplx(-2.0)));
    m = series_add_const(m, cplx(1.0));
    m = series_shift_down(m);
    return raw_map(series_scale(m, 2.0 * kappa / c));
}

}  // namespace

std::vector<ClaimedMember> claimed_members(TheoremId t, const TheoremParams& p,
                                           double r_ref) {
    std::vector<ClaimedMember> out;
    switch (t) {
        case TheoremId::CH_P: {
            cplx a = need(p.a, "CH_P", "a");
            cplx c = need(p.c, "CH_P", "c");
            out.push_back({"Phi(a;c)", raw_map(kummer_series(a, c, r_ref)),
                           FunctionClass::exp_caratheodory});
            break;
        }
        case TheoremId::CH_K: {
            double a = need_real(p.a, "CH_K", "a");
            double c = need_real(p.c, "CH_K", "c");
            out.push_back({"Lambda(a;c)",
                           normalized_map(kummer_lambda_series(cplx(a), cplx(c), r_ref)),
                           FunctionClass::exp_convex});
            break;
        }
        case TheoremId::CH_S: {
            double a = need_real(p.a, "CH_S", "a");
            double c = need_real(p.c, "CH_S", "c");
            out.push_back({"z Phi(a;c)",
                           normalized_map(series_shift_up(
                               kummer_series(cplx(a), cplx(c), r_ref))),
                           FunctionClass::exp_starlike});
            break;
        }
        case TheoremId::CH_GDELTA: {
            double d = need_delta(p.delta, "CH_GDELTA");
            out.push_back({"Lambda(1;1+delta)",
                           normalized_map(kummer_lambda_series(
                               cplx(1.0), cplx(1.0 + d), r_ref)),
                           FunctionClass::exp_convex});
            break;
        }
        case TheoremId::CH_HDELTA: {
            double d = need_delta(p.delta, "CH_HDELTA");
            out.push_back({"z Phi(1;1+delta)",
                           normalized_map(series_shift_up(kummer_series(
                               cplx(1.0), cplx(1.0 + d), r_ref))),
                           FunctionClass::exp_starlike});
            break;
        }
        case TheoremId::LOM_K: {
            double mu = need_real(p.mu, "LOM_K", "mu");
            double nu = need_real(p.nu, "LOM_K", "nu");
            out.push_back({"h(mu,nu)", normalized_map(lommel_series(mu, nu, r_ref)),
                           FunctionClass::exp_convex});
            break;
        }
        case TheoremId::LOM_ALEX: {
            double mu = need_real(p.mu, "LOM_ALEX", "mu");
            double nu = need_real(p.nu, "LOM_ALEX", "nu");
            out.push_back({"A[h(mu,nu)]",
                           normalized_map(lommel_alexander_series(mu, nu, r_ref)),
                           FunctionClass::exp_convex});
            out.push_back({"h(mu,nu)", normalized_map(lommel_series(mu, nu, r_ref)),
                           FunctionClass::exp_starlike});
            break;
        }
        case TheoremId::LOM_P: {
            cplx mu = need(p.mu, "LOM_P", "mu");
            cplx nu = need(p.nu, "LOM_P", "nu");
            if (mu.imag() != 0.0 || nu.imag() != 0.0)
                throw InputError(
                    "LOM_P members: complex Lommel parameters are outside the "
                    "series constructor domain");
            out.push_back({"h(mu,nu)/z",
                           raw_map(series_shift_down(
                               lommel_series(mu.real(), nu.real(), r_ref))),
                           FunctionClass::exp_caratheodory});
            break;
        }
        case TheoremId::STR_P: {
            cplx kappa = need(p.kappa, "STR_P", "kappa");
            cplx c = need(p.cparam, "STR_P", "c");
            out.push_back({"u(kappa,c)", raw_map(struve_u_series(kappa, c, r_ref)),
                           FunctionClass::exp_caratheodory});
            break;
        }
        case TheoremId::STR_P_REC: {
            cplx kappa = need(p.kappa, "STR_P_REC", "kappa");
            cplx c = need(p.cparam, "STR_P_REC", "c");
            if (c == cplx(0.0)) throw InputError("STR_P_REC: c must be nonzero");
            out.push_back({"(2 kappa / c)(1 - u - 2 z u')/z",
                           struve_recursion_member(kappa, c, r_ref),
                           FunctionClass::exp_caratheodory});
            break;
        }
        case TheoremId::STR_K: {
            double kappa = need_real(p.kappa, "STR_K", "kappa");
            cplx c = need(p.cparam, "STR_K", "c");
            out.push_back({"chi(kappa,c)",
                           normalized_map(struve_chi_series(cplx(kappa), c, r_ref)),
                           FunctionClass::exp_convex});
            break;
        }
        case TheoremId::STR_H:
        case TheoremId::STR_L: {
            const char* name = t == TheoremId::STR_H ? "STR_H" : "STR_L";
            double nu = need_real(p.nu, name, "nu");
            cplx cc(t == TheoremId::STR_H ? 1.0 : -1.0);
            PowerSeries chi = struve_chi_series(cplx(nu + 1.5), cc, r_ref);
            out.push_back({"chi(nu+3/2,c)", normalized_map(chi),
                           FunctionClass::exp_convex});
            out.push_back({"z chi'(nu+3/2,c)",
                           normalized_map(series_shift_up(chi.derivative())),
                           FunctionClass::exp_starlike});
            break;
        }
        case TheoremId::STR_CONV: {
            double kappa = need_real(p.kappa, "STR_CONV", "kappa");
            cplx c = need(p.cparam, "STR_CONV", "c");
            AnalyticMap chi =
                normalized_map(struve_chi_series(cplx(kappa), c, r_ref));
            std::size_t deg = chi.series.degree();
            out.push_back({"chi * z/(1-z)", hadamard(chi, geometric_kernel(deg)),
                           FunctionClass::exp_convex});
            out.push_back({"chi * (-log(1-z))", hadamard(chi, alexander_kernel(deg)),
                           FunctionClass::exp_convex});
            out.push_back({"chi * (-2(z+log(1-z))/z)",
                           hadamard(chi, libera_kernel(deg)),
                           FunctionClass::exp_convex});
            break;
        }
    }
    return out;
}

InstanceReport verify_instance(TheoremId t, const TheoremParams& p,
                               const SamplingPlan& plan) {
    InstanceReport rep;
    rep.hypothesis = check_hypothesis(t, p);
    double r_ref = 0.0;
    for (double r : plan.radii) r_ref = std::max(r_ref, r);
    if (!(r_ref > 0.0)) throw InputError("verify_instance: empty sampling plan");
    bool ok = rep.hypothesis.all_satisfied;
    for (ClaimedMember& m : claimed_members(t, p, r_ref)) {
        SubordinationCertificate cert = class_membership(m.map, m.member_of, plan);
        ok = ok && cert.status == CertificateStatus::verified_on_grid;
        rep.certificates.emplace_back(
            m.label + " in " + to_string(m.member_of), cert);
    }
    rep.all_verified = ok;
    return rep;
}

SubordinationCertificate convolution_closure_check(double kappa, cplx c,
                                                   const AnalyticMap& f,
                                                   const SamplingPlan& plan) {
    TheoremParams p;
    p.kappa = cplx(kappa);
    p.cparam = c;
    HypothesisReport hyp = check_hypothesis(TheoremId::STR_CONV, p);
    if (!hyp.all_satisfied)
        throw InputError(
            "convolution_closure_check: STR_CONV hypothesis does not hold for "
            "these parameters");
    if (f.kind != MapKind::normalized)
        throw InputError("convolution_closure_check: f must be normalized");
    PowerSeries chi = struve_chi_series(cplx(kappa), c, f.series.r_ref);
    AnalyticMap conv = hadamard(AnalyticMap{chi, MapKind::normalized}, f);
    return class_membership(conv, FunctionClass::exp_convex, plan);
}

}  // namespace expdisk
