#include "expdisk/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "expdisk/theorems.hpp"

namespace expdisk {

namespace {

double urand(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;  // [0, 1)
}

double urange(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * urand(g);
}

cplx disk_point(std::mt19937_64& g, double rmax) {
    double r = rmax * std::sqrt(urand(g));
    double th = 2.0 * std::numbers::pi * urand(g);
    return std::polar(r, th);
}

std::string fnum(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.6g", v);
    return b;
}

bool verified(const SubordinationCertificate& c) {
    return c.status == CertificateStatus::verified_on_grid;
}

// --- 1. Kummer identity suite -------------------------------------------

bool crit_kummer_identities(std::string& detail) {
    std::mt19937_64 gen(11);
    double worst_exp = 0.0;
    for (cplx a : {cplx(1.0), cplx(2.0), cplx(3.5), cplx(2.0, 1.0)}) {
        PowerSeries s = kummer_series(a, a, 0.999);
        for (int i = 0; i < 200; ++i) {
            cplx z = disk_point(gen, 0.999);
            worst_exp = std::max(worst_exp, std::abs(s.eval(z) - std::exp(z)));
        }
    }
    double worst_ctg = 0.0;
    for (int i = 0; i < 1000; ++i) {
        cplx a(urange(gen, -5.0, 5.0), urange(gen, -2.0, 2.0));
        cplx c(urange(gen, 0.5, 6.0), urange(gen, -2.0, 2.0));
        cplx z = disk_point(gen, 0.9);
        worst_ctg = std::max(worst_ctg, kummer_contiguous_check(a, c, z));
    }
    detail = "max |Phi(a;a;z) - e^z| = " + fnum(worst_exp) +
             ", max contiguous defect = " + fnum(worst_ctg) +
             " (tol 1e-12 / 1e-11)";
    return worst_exp <= 1e-12 && worst_ctg <= 1e-11;
}

// --- 2. ODE residuals -----------------------------------------------------

double lommel_dist_to_nonpos_int(double x) {
    if (x > 0.0) return x;
    return std::fabs(x - std::round(x));
}

bool crit_ode_residuals(std::string& detail) {
    std::mt19937_64 gen(22);
    double wk = 0.0, wl = 0.0, ws = 0.0;
    for (int i = 0; i < 50; ++i) {
        cplx a(urange(gen, -4.0, 4.0), urange(gen, -2.0, 2.0));
        cplx c(urange(gen, 0.5, 6.0), urange(gen, -2.0, 2.0));
        wk = std::max(wk, kummer_residual(a, c, 0.99).max_abs_residual);
    }
    for (int i = 0; i < 50; ++i) {
        double mu, nu;
        do {
            mu = urange(gen, -1.0, 6.0);
            nu = urange(gen, 0.0, 4.0);
        } while (lommel_dist_to_nonpos_int((mu - nu + 3.0) / 2.0) < 0.3 ||
                 lommel_dist_to_nonpos_int((mu + nu + 3.0) / 2.0) < 0.3);
        wl = std::max(wl, lommel_residual(mu, nu, 0.99).max_abs_residual);
    }
    for (int i = 0; i < 50; ++i) {
        cplx kappa(urange(gen, 0.5, 8.0), urange(gen, -2.0, 2.0));
        cplx c(urange(gen, -4.0, 4.0), urange(gen, -4.0, 4.0));
        ws = std::max(ws, struve_u_residual(kappa, c, 0.99).max_abs_residual);
    }
    detail = "max residuals: kummer " + fnum(wk) + ", lommel " + fnum(wl) +
             ", struve " + fnum(ws) + " (tol 1e-9)";
    return wk <= 1e-9 && wl <= 1e-9 && ws <= 1e-9;
}

// --- 3. Closed-form anchors ------------------------------------------------

bool crit_closed_form_anchors(std::string& detail) {
    std::mt19937_64 gen(33);
    PowerSeries h = lommel_series(1.0, 0.0, 0.999);
    PowerSeries u = struve_u_series(cplx(2.0), cplx(1.0), 0.999);
    double wh = 0.0, wu = 0.0;
    for (int i = 0; i < 500; ++i) {
        cplx z = disk_point(gen, 0.99);
        cplx sq = std::sqrt(z);
        for (cplx s : {sq, -sq}) {
            wh = std::max(wh,
                          std::abs(h.eval(z) - (4.0 - 4.0 * bessel_j_eval(0.0, s))));
            wu = std::max(wu, std::abs(u.eval(z) * z - (2.0 - 2.0 * std::cos(s))));
        }
    }
    double wr = 0.0;
    const cplx i1(0.0, 1.0);
    for (double nu : {0.5, 1.0, 2.0}) {
        for (int i = 0; i < 100; ++i) {
            cplx z(urange(gen, 0.05, 0.95), urange(gen, -0.7, 0.7));
            cplx lhs = mod_struve_L_eval(nu, z);
            cplx rhs = -i1 * std::exp(-i1 * nu * std::numbers::pi / 2.0) *
                       struve_H_eval(nu, i1 * z);
            wr = std::max(wr, std::abs(lhs - rhs));
        }
    }
    detail = "lommel-bessel anchor " + fnum(wh) + " (tol 1e-10), struve-cos anchor " +
             fnum(wu) + " (tol 1e-11), modified-struve relation " + fnum(wr) +
             " (tol 1e-10)";
    return wh <= 1e-10 && wu <= 1e-11 && wr <= 1e-10;
}

// --- 4. Caratheodory-class Kummer examples ---------------------------------

bool crit_kummer_pe_examples(std::string& detail) {
    const double pairs[5][2] = {
        {-1.0, 3.0}, {-2.0, 4.0}, {-3.0, 5.0}, {-25.0, 27.0}, {-100.0, 102.0}};
    SamplingPlan plan = default_plan();
    bool ok = true;
    std::ostringstream os;
    for (auto& pr : pairs) {
        TheoremParams tp;
        tp.a = cplx(pr[0]);
        tp.c = cplx(pr[1]);
        HypothesisReport hyp = check_hypothesis(TheoremId::CH_P, tp);
        ClaimedMember m = claimed_members(TheoremId::CH_P, tp, 0.999).front();
        SubordinationCertificate cert =
            class_membership(m.map, m.member_of, plan);
        bool this_ok =
            hyp.all_satisfied && verified(cert) && cert.margin > 0.1;
        os << "(" << pr[0] << "," << pr[1] << "): " << to_string(cert.status)
           << " max " << fnum(cert.max_log_mod) << " margin "
           << fnum(cert.margin) << (this_ok ? "" : " [margin <= 0.1]") << "; ";
        if (pr[0] == -1.0) {
            // brute-force boundary oracle for Phi(-1;3;z) = 1 - z/3
            double mx = 0.0;
            const int n = 200000;
            for (int k = 0; k < n; ++k) {
                double th = 2.0 * std::numbers::pi * k / n;
                cplx p = 1.0 - std::polar(0.999, th) / 3.0;
                mx = std::max(mx, std::abs(std::log(p)));
            }
            bool anchor = std::fabs(cert.max_log_mod - 0.405) <= 0.01 &&
                          std::fabs(mx - 0.405) <= 0.01 &&
                          std::fabs(cert.max_log_mod - mx) <= 1e-6;
            os << "oracle max " << fnum(mx) << "; ";
            this_ok = this_ok && anchor;
        }
        ok = ok && this_ok;
    }
    detail = os.str() + "(requires verified, margin > 0.1, (-1,3) max 0.405 +/- 0.01)";
    return ok;
}

// --- 5. Convex/starlike pair sharing one quantity ---------------------------

bool crit_figure3_pair(std::string& detail) {
    SamplingPlan plan = default_plan();
    AnalyticMap lam{kummer_lambda_series(cplx(1.0), cplx(2.0), 0.999),
                    MapKind::normalized};
    AnalyticMap zphi{series_shift_up(kummer_series(cplx(2.0), cplx(3.0), 0.999)),
                     MapKind::normalized};
    SubordinationCertificate ck =
        class_membership(lam, FunctionClass::exp_convex, plan);
    SubordinationCertificate cs =
        class_membership(zphi, FunctionClass::exp_starlike, plan);
    AnalyticMap qk = convex_quantity(lam);
    AnalyticMap qs = starlike_quantity(zphi);
    std::mt19937_64 gen(55);
    double wq = 0.0;
    for (int i = 0; i < 100; ++i) {
        cplx z = disk_point(gen, 0.999);
        if (std::abs(z) < 0.05) z += 0.1;
        cplx ez = std::exp(z);
        cplx q = (ez * (1.0 - z + z * z) - 1.0) / (ez * (z - 1.0) + 1.0);
        wq = std::max(wq, std::abs(qk.series.eval(z) - q));
        wq = std::max(wq, std::abs(qs.series.eval(z) - q));
    }
    detail = "Lambda(1;2) convex: " + to_string(ck.status) + " max " +
             fnum(ck.max_log_mod) + "; z Phi(2;3) starlike: " +
             to_string(cs.status) + " max " + fnum(cs.max_log_mod) +
             "; quantity vs closed form " + fnum(wq) + " (tol 1e-9)";
    return verified(ck) && verified(cs) && wq <= 1e-9;
}

// --- 6. Lommel Caratheodory example -----------------------------------------

bool crit_lommel_pe_example(std::string& detail) {
    TheoremParams tp;
    tp.mu = cplx(1.0);
    tp.nu = cplx(0.0);
    HypothesisReport hyp = check_hypothesis(TheoremId::LOM_P, tp);
    const double e = std::exp(1.0);
    double slack = hyp.conditions.front().slack;
    double expected = 4.0 - (4.0 * (e - 1.0) - 3.0);
    ClaimedMember m = claimed_members(TheoremId::LOM_P, tp, 0.999).front();
    SubordinationCertificate cert =
        class_membership(m.map, m.member_of, default_plan());
    detail = "slack = " + fnum(slack) + " (expected " + fnum(expected) +
             "), h(1,0)/z in Pe: " + to_string(cert.status) + " max " +
             fnum(cert.max_log_mod);
    return hyp.all_satisfied && slack > 0.0 &&
           std::fabs(slack - expected) <= 1e-12 && verified(cert);
}

// --- 7. Struve examples ------------------------------------------------------

bool crit_struve_examples(std::string& detail) {
    SamplingPlan plan = default_plan();
    std::ostringstream os;
    bool ok = true;

    TheoremParams p1;
    p1.kappa = cplx(2.0);
    p1.cparam = cplx(1.0);
    HypothesisReport h1 = check_hypothesis(TheoremId::STR_P, p1);
    SubordinationCertificate c1 = class_membership(
        claimed_members(TheoremId::STR_P, p1, 0.999).front().map,
        FunctionClass::exp_caratheodory, plan);
    ok = ok && h1.all_satisfied && verified(c1);
    os << "STR_P(2,1): slack " << fnum(h1.conditions.front().slack) << ", "
       << to_string(c1.status) << " max " << fnum(c1.max_log_mod) << "; ";

    TheoremParams p2;
    p2.kappa = cplx(16.0);
    p2.cparam = cplx(1.0);
    HypothesisReport h2 = check_hypothesis(TheoremId::STR_K, p2);
    SubordinationCertificate c2 = class_membership(
        claimed_members(TheoremId::STR_K, p2, 0.999).front().map,
        FunctionClass::exp_convex, plan);
    ok = ok && h2.all_satisfied && verified(c2);
    os << "STR_K(16,1): slack " << fnum(h2.conditions.front().slack) << ", "
       << to_string(c2.status) << " max " << fnum(c2.max_log_mod) << "; ";

    std::mt19937_64 gen(77);
    double wrec = 0.0;
    for (int i = 0; i < 50; ++i) {
        cplx kappa(urange(gen, 0.7, 6.0), urange(gen, -1.0, 1.0));
        cplx c(urange(gen, -2.0, 2.0), urange(gen, -2.0, 2.0));
        if (std::abs(c) < 0.1) c += 0.5;
        TheoremParams tp;
        tp.kappa = kappa;
        tp.cparam = c;
        PowerSeries mem =
            claimed_members(TheoremId::STR_P_REC, tp, 0.999).front().map.series;
        PowerSeries ref = struve_u_series(kappa + 1.0, c, 0.999);
        std::size_t n = std::min(mem.coeffs.size(), ref.coeffs.size());
        for (std::size_t k = 0; k < n; ++k)
            wrec = std::max(wrec, std::abs(mem.coeffs[k] - ref.coeffs[k]));
    }
    os << "recursion member vs u(kappa+1,c): " << fnum(wrec) << " (tol 1e-13)";
    ok = ok && wrec <= 1e-13;
    detail = os.str();
    return ok;
}

// --- 8. delta-family extremes -------------------------------------------------

bool crit_delta_family(std::string& detail) {
    // independently evaluated decimals (50-digit arithmetic, frozen here)
    const double tg_frozen = 0.28268800989406088;
    const double th_frozen = 0.86466471676338731;
    double tg = thresholds::gdelta_radius();
    double th = thresholds::hdelta_radius();
    bool ok = std::fabs(tg - tg_frozen) <= 1e-14 &&
              std::fabs(th - th_frozen) <= 1e-14;
    std::ostringstream os;
    os << "thresholds: g " << fnum(tg) << ", h " << fnum(th)
       << " (match frozen to 1e-14); ";
    SamplingPlan plan = default_plan();
    struct Case {
        TheoremId t;
        double delta;
        const char* label;
    };
    const Case cases[] = {
        {TheoremId::CH_GDELTA, 1.0 - tg, "g lower"},
        {TheoremId::CH_GDELTA, 1.0 + tg, "g upper"},
        {TheoremId::CH_HDELTA, 2.0 - th, "h lower"},
        {TheoremId::CH_HDELTA, 2.0 + th, "h upper"},
    };
    for (const Case& cs : cases) {
        TheoremParams tp;
        tp.delta = cs.delta;
        InstanceReport rep = verify_instance(cs.t, tp, plan);
        const SubordinationCertificate& cert = rep.certificates.front().second;
        bool this_ok = rep.hypothesis.all_satisfied && verified(cert);
        os << cs.label << " (delta " << fnum(cs.delta)
           << "): " << to_string(cert.status) << " max " << fnum(cert.max_log_mod)
           << (this_ok ? "" : " [not verified]") << "; ";
        ok = ok && this_ok;
    }
    detail = os.str() + "(requires all four extremes verified)";
    return ok;
}

// --- 9. Operator laws ----------------------------------------------------------

bool crit_operator_laws(std::string& detail) {
    std::mt19937_64 gen(99);
    double wd = 0.0;
    bool exact_identity = true;
    for (int i = 0; i < 100; ++i) {
        std::vector<cplx> cs(21, cplx(0.0));
        cs[1] = 1.0;
        for (int n = 2; n <= 20; ++n)
            cs[n] = cplx(urange(gen, -1.0, 1.0), urange(gen, -1.0, 1.0)) *
                    std::pow(0.3, n - 1);
        AnalyticMap f{PowerSeries(cs, 0.0, 0.999), MapKind::normalized};
        AnalyticMap lhs = convex_quantity(alexander(f));
        AnalyticMap rhs = starlike_quantity(f);
        std::size_t n = std::min(lhs.series.coeffs.size(), rhs.series.coeffs.size());
        for (std::size_t k = 0; k < n; ++k)
            wd = std::max(wd, std::abs(lhs.series.coeffs[k] - rhs.series.coeffs[k]));
        AnalyticMap idc = hadamard(f, geometric_kernel(f.series.degree()));
        exact_identity = exact_identity && idc.series.coeffs == f.series.coeffs;
    }
    TheoremParams tp;
    tp.kappa = cplx(16.0);
    tp.cparam = cplx(1.0);
    InstanceReport rep = verify_instance(TheoremId::STR_CONV, tp, default_plan());
    bool conv_ok = rep.hypothesis.all_satisfied;
    std::ostringstream os;
    os << "duality defect " << fnum(wd) << " (tol 1e-12); identity kernel "
       << (exact_identity ? "bitwise exact" : "NOT exact") << "; STR_CONV(16,1): ";
    for (const auto& [label, cert] : rep.certificates) {
        conv_ok = conv_ok && verified(cert);
        os << label << " " << to_string(cert.status) << " max "
           << fnum(cert.max_log_mod) << "; ";
    }
    detail = os.str();
    return wd <= 1e-12 && exact_identity && conv_ok;
}

// --- 10. Negative controls -------------------------------------------------------

bool crit_negative_controls(std::string& detail) {
    std::ostringstream os;
    AnalyticMap p{PowerSeries({cplx(1.0), cplx(2.0)}, 0.0, 1.0), MapKind::raw};
    SubordinationCertificate cert =
        certify_subordination_to_exp(p, default_plan());
    bool ok1 = cert.status == CertificateStatus::refuted && cert.max_log_mod > 1.09;
    os << "1+2z: " << to_string(cert.status) << " max " << fnum(cert.max_log_mod)
       << " (needs refuted, > 1.09); ";

    TheoremParams tp;
    tp.a = cplx(5.0);
    tp.c = cplx(3.0);
    HypothesisReport hyp = check_hypothesis(TheoremId::CH_P, tp);
    double slack = hyp.conditions.front().slack;
    bool ok2 = !hyp.all_satisfied && slack == -4.0;
    os << "CH_P(5,3) slack = " << fnum(slack) << " (needs exactly -4); ";

    PowerSeries base = kummer_series(cplx(-3.0), cplx(5.0), 0.99);
    bool ok3 = true;
    os << "mutation residuals:";
    for (std::size_t k = 0; k < base.coeffs.size(); ++k) {
        PowerSeries mut = base;
        mut.coeffs[k] = -mut.coeffs[k];
        double r = kummer_residual_on(mut, cplx(-3.0), cplx(5.0), 0.99)
                       .max_abs_residual;
        os << " c" << k << " -> " << fnum(r);
        ok3 = ok3 && r > 1e-9;
    }
    os << " (all must exceed 1e-9)";
    detail = os.str();
    return ok1 && ok2 && ok3;
}

struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
    double time_limit;
};

const Criterion kCriteria[] = {
    {"01-kummer-identities", crit_kummer_identities, 5.0},
    {"02-ode-residuals", crit_ode_residuals, 30.0},
    {"03-lommel-struve-anchors", crit_closed_form_anchors, 10.0},
    {"04-kummer-pe-examples", crit_kummer_pe_examples, 20.0},
    {"05-kummer-figure3-pair", crit_figure3_pair, 10.0},
    {"06-lommel-pe-example", crit_lommel_pe_example, 5.0},
    {"07-struve-examples", crit_struve_examples, 20.0},
    {"08-delta-family-extremes", crit_delta_family, 10.0},
    {"09-operator-laws", crit_operator_laws, 15.0},
    {"10-negative-controls", crit_negative_controls, 5.0},
};

}  // namespace

std::vector<CheckResult> run_acceptance(const std::string& filter) {
    std::vector<CheckResult> out;
    for (const Criterion& c : kCriteria) {
        if (!filter.empty() && std::string(c.name).find(filter) == std::string::npos)
            continue;
        CheckResult r;
        r.name = c.name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.passed = c.fn(r.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (r.seconds >= c.time_limit) {
            r.passed = false;
            r.detail += " [exceeded time limit]";
        }
        out.push_back(std::move(r));
    }
    if (out.empty())
        throw InputError("suite filter matched no checks: " + filter);
    return out;
}

}  // namespace expdisk
