#include "expdisk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "expdisk/acceptance.hpp"
#include "expdisk/theorems.hpp"

namespace expdisk {

namespace {

using ordered_json = nlohmann::ordered_json;

cplx parse_complex(const std::string& s) {
    auto one = [&](const std::string& part) {
        try {
            std::size_t pos = 0;
            double v = std::stod(part, &pos);
            if (pos != part.size())
                throw InputError("trailing characters in number: " + s);
            return v;
        } catch (const std::invalid_argument&) {
            throw InputError("cannot parse number: " + s);
        } catch (const std::out_of_range&) {
            throw InputError("number out of range: " + s);
        }
    };
    auto comma = s.find(',');
    if (comma == std::string::npos) return cplx(one(s), 0.0);
    return cplx(one(s.substr(0, comma)), one(s.substr(comma + 1)));
}

double parse_real(const std::string& s, const char* what) {
    cplx v = parse_complex(s);
    if (v.imag() != 0.0)
        throw InputError(std::string(what) + " must be real, got " + s);
    return v.real();
}

struct FamilyOpts {
    std::string a, c, mu, nu, kappa, cparam;
};

void add_family_options(CLI::App* cmd, FamilyOpts& o) {
    cmd->add_option("--a", o.a, "parameter a (re or re,im)");
    cmd->add_option("--c", o.c, "parameter c (re or re,im)");
    cmd->add_option("--mu", o.mu, "parameter mu");
    cmd->add_option("--nu", o.nu, "parameter nu");
    cmd->add_option("--kappa", o.kappa, "parameter kappa");
    cmd->add_option("--cparam", o.cparam, "Struve parameter c");
}

const std::string& need_opt(const std::string& v, const char* family,
                            const char* flag) {
    if (v.empty())
        throw InputError(std::string(family) + " requires " + flag);
    return v;
}

SpecialFunctionId build_id(const std::string& family, const FamilyOpts& o) {
    if (family == "kummer")
        return KummerId{parse_complex(need_opt(o.a, "kummer", "--a")),
                        parse_complex(need_opt(o.c, "kummer", "--c"))};
    if (family == "kummer-lambda")
        return KummerLambdaId{
            parse_real(need_opt(o.a, "kummer-lambda", "--a"), "--a"),
            parse_real(need_opt(o.c, "kummer-lambda", "--c"), "--c")};
    if (family == "lommel")
        return NormalizedLommelId{
            parse_real(need_opt(o.mu, "lommel", "--mu"), "--mu"),
            parse_real(need_opt(o.nu, "lommel", "--nu"), "--nu")};
    if (family == "lommel-alexander")
        return LommelAlexanderId{
            parse_real(need_opt(o.mu, "lommel-alexander", "--mu"), "--mu"),
            parse_real(need_opt(o.nu, "lommel-alexander", "--nu"), "--nu")};
    if (family == "struve-u")
        return GeneralizedStruveId{
            parse_complex(need_opt(o.kappa, "struve-u", "--kappa")),
            parse_complex(need_opt(o.cparam, "struve-u", "--cparam"))};
    if (family == "struve-chi")
        return StruveChiId{
            parse_real(need_opt(o.kappa, "struve-chi", "--kappa"), "--kappa"),
            parse_complex(need_opt(o.cparam, "struve-chi", "--cparam"))};
    if (family == "struve-h")
        return StruveHId{parse_real(need_opt(o.nu, "struve-h", "--nu"), "--nu")};
    if (family == "mod-struve-l")
        return ModStruveLId{
            parse_real(need_opt(o.nu, "mod-struve-l", "--nu"), "--nu")};
    if (family == "bessel-j")
        return BesselJId{parse_real(need_opt(o.nu, "bessel-j", "--nu"), "--nu")};
    throw InputError("unknown family: " + family);
}

ordered_json cplx_json(cplx v) {
    return ordered_json::array({v.real(), v.imag()});
}

ordered_json params_json(const SpecialFunctionId& id) {
    ordered_json j = ordered_json::object();
    if (const auto* f = std::get_if<KummerId>(&id)) {
        j["a"] = cplx_json(f->a);
        j["c"] = cplx_json(f->c);
    } else if (const auto* f = std::get_if<KummerLambdaId>(&id)) {
        j["a"] = f->a;
        j["c"] = f->c;
    } else if (const auto* f = std::get_if<NormalizedLommelId>(&id)) {
        j["mu"] = f->mu;
        j["nu"] = f->nu;
    } else if (const auto* f = std::get_if<LommelAlexanderId>(&id)) {
        j["mu"] = f->mu;
        j["nu"] = f->nu;
    } else if (const auto* f = std::get_if<GeneralizedStruveId>(&id)) {
        j["kappa"] = cplx_json(f->kappa);
        j["c"] = cplx_json(f->c);
    } else if (const auto* f = std::get_if<StruveChiId>(&id)) {
        j["kappa"] = f->kappa;
        j["c"] = cplx_json(f->c);
    } else if (const auto* f = std::get_if<StruveHId>(&id)) {
        j["nu"] = f->nu;
    } else if (const auto* f = std::get_if<ModStruveLId>(&id)) {
        j["nu"] = f->nu;
    } else if (const auto* f = std::get_if<BesselJId>(&id)) {
        j["nu"] = f->nu;
    }
    return j;
}

ordered_json plan_json(const SamplingPlan& p) {
    ordered_json j;
    j["radii"] = p.radii;
    j["angles"] = p.angles;
    j["refine_factor"] = p.refine_factor;
    return j;
}

ordered_json cert_json(const SubordinationCertificate& c) {
    ordered_json j;
    j["status"] = to_string(c.status);
    j["max_log_mod"] = c.max_log_mod;
    j["margin"] = c.margin;
    j["witness"] = cplx_json(c.witness);
    j["zero_encountered"] = c.zero_encountered;
    j["plan"] = plan_json(c.plan_used);
    return j;
}

ordered_json hyp_json(const HypothesisReport& h) {
    ordered_json j;
    j["theorem"] = to_string(h.theorem);
    ordered_json pj = ordered_json::object();
    auto put = [&](const char* k, const std::optional<cplx>& v) {
        if (v) pj[k] = cplx_json(*v);
    };
    put("a", h.params.a);
    put("c", h.params.c);
    put("mu", h.params.mu);
    put("nu", h.params.nu);
    put("kappa", h.params.kappa);
    put("cparam", h.params.cparam);
    if (h.params.delta) pj["delta"] = *h.params.delta;
    j["params"] = pj;
    ordered_json cj = ordered_json::array();
    for (const Condition& c : h.conditions) {
        ordered_json e;
        e["label"] = c.label;
        e["satisfied"] = c.satisfied;
        e["slack"] = c.slack;
        e["strict"] = c.strict;
        e["informational"] = c.informational;
        cj.push_back(e);
    }
    j["conditions"] = cj;
    j["all_satisfied"] = h.all_satisfied;
    return j;
}

void emit(const ordered_json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot open output file: " + path);
    f << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& path,
               std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot open output file: " + path);
    f << text;
}

int status_code(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::verified_on_grid: return 0;
        case CertificateStatus::refuted: return 2;
        case CertificateStatus::inconclusive: return 3;
    }
    return 1;
}

void apply_plan_overrides(SamplingPlan& plan, std::vector<double> radii,
                          std::size_t angles, std::size_t refine) {
    if (!radii.empty()) {
        std::sort(radii.begin(), radii.end());
        plan.radii = std::move(radii);
    }
    if (angles != 0) plan.angles = angles;
    if (refine != 0) plan.refine_factor = refine;
}

int do_eval(const std::string& family, const FamilyOpts& opts,
            const std::vector<std::string>& zs, std::ostream& out) {
    SpecialFunctionId id = build_id(family, opts);
    validate(id);
    ordered_json j;
    j["family"] = family_name(id);
    j["params"] = params_json(id);
    ordered_json vals = ordered_json::array();
    for (const std::string& zstr : zs) {
        cplx z = parse_complex(zstr);
        cplx v = eval_of(id, z);
        auto [inside, m] = in_exp_disk(v);
        ordered_json e;
        e["z"] = cplx_json(z);
        e["value"] = cplx_json(v);
        e["in_exp_disk"] = inside;
        if (std::isfinite(m))
            e["log_mod"] = m;
        else
            e["log_mod"] = nullptr;
        vals.push_back(e);
    }
    j["values"] = vals;
    emit(j, "", out);
    return 0;
}

int do_certify(const std::string& fn, const FamilyOpts& opts,
               const std::vector<std::string>& coeffs,
               const std::string& cls_name, std::vector<double> radii,
               std::size_t angles, std::size_t refine, const std::string& path,
               std::ostream& out) {
    SamplingPlan plan = default_plan();
    apply_plan_overrides(plan, std::move(radii), angles, refine);
    auto cls = class_from_string(cls_name);
    if (!cls)
        throw InputError("unknown class: " + cls_name +
                         " (expected Pe, Se_star or Ke)");
    ordered_json j;
    AnalyticMap map;
    if (fn == "poly") {
        if (coeffs.empty()) throw InputError("poly requires --coeffs");
        std::vector<cplx> cs;
        for (const std::string& s : coeffs) cs.push_back(parse_complex(s));
        MapKind kind = cs[0] == cplx(0.0) ? MapKind::normalized : MapKind::raw;
        map = AnalyticMap{PowerSeries(std::move(cs), 0.0, 1.0), kind};
        j["function"] = "poly";
        ordered_json cj = ordered_json::array();
        for (const cplx& v : map.series.coeffs) cj.push_back(cplx_json(v));
        j["coeffs"] = cj;
    } else {
        SpecialFunctionId id = build_id(fn, opts);
        validate(id);
        if (!has_disk_series(id))
            throw InputError(family_name(id) +
                             ": no unit-disk series; cannot certify");
        double rmax = *std::max_element(plan.radii.begin(), plan.radii.end());
        map = AnalyticMap{series_of(id, rmax), is_normalized_family(id)
                                                   ? MapKind::normalized
                                                   : MapKind::raw};
        j["function"] = family_name(id);
        j["params"] = params_json(id);
    }
    SubordinationCertificate cert = class_membership(map, *cls, plan);
    j["class"] = to_string(*cls);
    j["certificate"] = cert_json(cert);
    emit(j, path, out);
    return status_code(cert.status);
}

int do_check(const std::string& name, const TheoremParams& tp, bool verify,
             std::vector<double> radii, std::size_t angles, std::size_t refine,
             const std::string& path, std::ostream& out) {
    auto t = theorem_from_string(name);
    if (!t) throw InputError("unknown theorem id: " + name);
    ordered_json j;
    int code = 0;
    if (verify) {
        SamplingPlan plan = default_plan();
        apply_plan_overrides(plan, std::move(radii), angles, refine);
        InstanceReport rep = verify_instance(*t, tp, plan);
        j["hypothesis"] = hyp_json(rep.hypothesis);
        ordered_json certs = ordered_json::array();
        bool any_refuted = false, any_inconclusive = false;
        for (const auto& [label, cert] : rep.certificates) {
            ordered_json e;
            e["member"] = label;
            e["certificate"] = cert_json(cert);
            certs.push_back(e);
            any_refuted = any_refuted || cert.status == CertificateStatus::refuted;
            any_inconclusive =
                any_inconclusive || cert.status == CertificateStatus::inconclusive;
        }
        j["certificates"] = certs;
        j["all_verified"] = rep.all_verified;
        if (any_refuted)
            code = 2;
        else if (any_inconclusive)
            code = 3;
        else
            code = rep.hypothesis.all_satisfied ? 0 : 2;
    } else {
        HypothesisReport rep = check_hypothesis(*t, tp);
        j["hypothesis"] = hyp_json(rep);
        code = rep.all_satisfied ? 0 : 2;
    }
    emit(j, path, out);
    return code;
}

int do_figure(const std::string& fn, const FamilyOpts& opts,
              const std::string& quantity, double r, std::size_t angles,
              const std::string& path, std::ostream& out) {
    SpecialFunctionId id = build_id(fn, opts);
    validate(id);
    if (!has_disk_series(id))
        throw InputError(family_name(id) + ": no unit-disk series; cannot plot");
    if (!(r > 0.0 && r < 1.0))
        throw InputError("figure: --r must lie in (0, 1)");
    std::size_t m = angles != 0 ? angles : default_plan().angles;
    if (m < 256) throw InputError("figure: at least 256 angles required");
    PowerSeries s = series_of(id, r);
    PowerSeries curve;
    if (quantity == "self") {
        curve = s;
    } else {
        AnalyticMap map{s, is_normalized_family(id) ? MapKind::normalized
                                                    : MapKind::raw};
        if (quantity == "starlike")
            curve = starlike_quantity(map).series;
        else if (quantity == "convex")
            curve = convex_quantity(map).series;
        else
            throw InputError("unknown quantity: " + quantity +
                             " (expected self, starlike or convex)");
    }
    const double two_pi = 2.0 * std::numbers::pi;
    std::ostringstream csv;
    csv << "theta,curve,re,im\n";
    auto row = [&](double th, const char* name, cplx v) {
        char b[160];
        std::snprintf(b, sizeof b, "%.17g,%s,%.17g,%.17g\n", th, name, v.real(),
                      v.imag());
        csv << b;
    };
    cplx first_image = curve.eval(cplx(r, 0.0));
    for (std::size_t k = 0; k < m; ++k) {
        double th = two_pi * static_cast<double>(k) / static_cast<double>(m);
        row(th, "image", k == 0 ? first_image : curve.eval(std::polar(r, th)));
    }
    row(two_pi, "image", first_image);
    cplx first_bdy = std::exp(cplx(1.0, 0.0));
    for (std::size_t k = 0; k < m; ++k) {
        double th = two_pi * static_cast<double>(k) / static_cast<double>(m);
        row(th, "exp_boundary",
            k == 0 ? first_bdy : std::exp(std::polar(1.0, th)));
    }
    row(two_pi, "exp_boundary", first_bdy);
    emit_text(csv.str(), path, out);
    return 0;
}

int do_suite(const std::string& filter, const std::string& path,
             std::ostream& out) {
    std::vector<CheckResult> res = run_acceptance(filter);
    ordered_json j;
    ordered_json checks = ordered_json::array();
    bool all = true;
    for (const CheckResult& r : res) {
        ordered_json e;
        e["name"] = r.name;
        e["passed"] = r.passed;
        e["detail"] = r.detail;
        checks.push_back(e);
        all = all && r.passed;
    }
    j["checks"] = checks;
    j["all_passed"] = all;
    emit(j, path, out);
    return all ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "expdisk: special-function disk maps and exponential-disk "
        "subordination certificates"};
    app.require_subcommand(1);

    std::string ev_family;
    FamilyOpts ev_opts;
    std::vector<std::string> ev_z;
    CLI::App* ev = app.add_subcommand("eval", "evaluate a function at points");
    ev->add_option("family", ev_family, "function family")->required();
    add_family_options(ev, ev_opts);
    ev->add_option("--z", ev_z, "evaluation point re,im (repeatable)")
        ->required();

    std::string ct_fn, ct_class, ct_out;
    FamilyOpts ct_opts;
    std::vector<std::string> ct_coeffs;
    std::vector<double> ct_radii;
    std::size_t ct_angles = 0, ct_refine = 0;
    CLI::App* ct =
        app.add_subcommand("certify", "grid-certify subordination to e^z");
    ct->add_option("--fn", ct_fn, "family name or 'poly'")->required();
    add_family_options(ct, ct_opts);
    ct->add_option("--coeffs", ct_coeffs, "polynomial coefficients");
    ct->add_option("--class", ct_class, "Pe, Se_star or Ke")->required();
    ct->add_option("--radii", ct_radii, "sampling radii in (0,1)");
    ct->add_option("--angles", ct_angles, "angles per circle (>= 256)");
    ct->add_option("--refine", ct_refine, "local refinement factor");
    ct->add_option("--out", ct_out, "write JSON to file");

    std::string ck_name, ck_out, ck_a, ck_c, ck_mu, ck_nu, ck_kappa, ck_cparam,
        ck_delta;
    bool ck_verify = false;
    std::vector<double> ck_radii;
    std::size_t ck_angles = 0, ck_refine = 0;
    CLI::App* ck =
        app.add_subcommand("check", "evaluate a sufficient-condition hypothesis");
    ck->add_option("theorem", ck_name, "theorem identifier")->required();
    ck->add_option("--a", ck_a, "parameter a");
    ck->add_option("--c", ck_c, "parameter c");
    ck->add_option("--mu", ck_mu, "parameter mu");
    ck->add_option("--nu", ck_nu, "parameter nu");
    ck->add_option("--kappa", ck_kappa, "parameter kappa");
    ck->add_option("--cparam", ck_cparam, "Struve parameter c");
    ck->add_option("--delta", ck_delta, "parameter delta");
    ck->add_flag("--verify", ck_verify, "also certify the claimed members");
    ck->add_option("--radii", ck_radii, "sampling radii in (0,1)");
    ck->add_option("--angles", ck_angles, "angles per circle (>= 256)");
    ck->add_option("--refine", ck_refine, "local refinement factor");
    ck->add_option("--out", ck_out, "write JSON to file");

    std::string fg_fn, fg_quantity = "self", fg_out;
    FamilyOpts fg_opts;
    double fg_r = 0.999;
    std::size_t fg_angles = 0;
    CLI::App* fg = app.add_subcommand(
        "figure", "CSV of an image curve against the exp boundary");
    fg->add_option("--fn", fg_fn, "family name")->required();
    add_family_options(fg, fg_opts);
    fg->add_option("--quantity", fg_quantity, "self, starlike or convex");
    fg->add_option("--r", fg_r, "circle radius (default 0.999)");
    fg->add_option("--angles", fg_angles, "sample count");
    fg->add_option("--out", fg_out, "write CSV to file");

    std::string su_filter, su_out;
    CLI::App* su = app.add_subcommand("suite", "run the acceptance checks");
    su->add_option("--filter", su_filter, "only checks whose name contains this");
    su->add_option("--out", su_out, "write JSON to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ev->parsed()) return do_eval(ev_family, ev_opts, ev_z, out);
        if (ct->parsed())
            return do_certify(ct_fn, ct_opts, ct_coeffs, ct_class, ct_radii,
                              ct_angles, ct_refine, ct_out, out);
        if (ck->parsed()) {
            TheoremParams tp;
            if (!ck_a.empty()) tp.a = parse_complex(ck_a);
            if (!ck_c.empty()) tp.c = parse_complex(ck_c);
            if (!ck_mu.empty()) tp.mu = parse_complex(ck_mu);
            if (!ck_nu.empty()) tp.nu = parse_complex(ck_nu);
            if (!ck_kappa.empty()) tp.kappa = parse_complex(ck_kappa);
            if (!ck_cparam.empty()) tp.cparam = parse_complex(ck_cparam);
            if (!ck_delta.empty()) tp.delta = parse_real(ck_delta, "--delta");
            return do_check(ck_name, tp, ck_verify, ck_radii, ck_angles,
                            ck_refine, ck_out, out);
        }
        if (fg->parsed())
            return do_figure(fg_fn, fg_opts, fg_quantity, fg_r, fg_angles, fg_out,
                             out);
        if (su->parsed()) return do_suite(su_filter, su_out, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace expdisk
