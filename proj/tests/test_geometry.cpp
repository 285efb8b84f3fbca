#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "expdisk/geometry.hpp"
#include "expdisk/special_functions.hpp"

using namespace expdisk;

namespace {

double urand(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

double urange(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * urand(g);
}

AnalyticMap random_normalized(std::mt19937_64& g, std::size_t degree,
                              double decay) {
    std::vector<cplx> cs(degree + 1, cplx(0.0));
    cs[1] = 1.0;
    for (std::size_t n = 2; n <= degree; ++n)
        cs[n] = cplx(urange(g, -1.0, 1.0), urange(g, -1.0, 1.0)) *
                std::pow(decay, static_cast<double>(n - 1));
    return AnalyticMap{PowerSeries(std::move(cs), 0.0, 0.999),
                       MapKind::normalized};
}

SamplingPlan single_radius(double r) {
    SamplingPlan plan;
    plan.radii = {r};
    return plan;
}

}  // namespace

TEST_CASE("in_exp_disk agrees with the principal logarithm") {
    std::mt19937_64 gen(301);
    for (int i = 0; i < 10000; ++i) {
        cplx w = std::polar(std::pow(10.0, urange(gen, -2.0, 2.0)),
                            urange(gen, -std::numbers::pi, std::numbers::pi));
        auto [inside, mod] = in_exp_disk(w);
        double direct = std::abs(principal_log(w));
        CHECK(mod == direct);
        CHECK(inside == (direct < 1.0));
    }
    auto [inside0, mod0] = in_exp_disk(cplx(0.0));
    CHECK(!inside0);
    CHECK(std::isinf(mod0));
    CHECK(in_exp_disk(cplx(1.0)).first);
    CHECK(!in_exp_disk(cplx(std::exp(1.0), 0.0)).first);  // boundary point
}

TEST_CASE("certify: the constant map and exact replays") {
    AnalyticMap one{PowerSeries({cplx(1.0)}, 0.0, 1.0), MapKind::raw};
    SubordinationCertificate cert =
        certify_subordination_to_exp(one, default_plan());
    CHECK(cert.status == CertificateStatus::verified_on_grid);
    CHECK(cert.max_log_mod == 0.0);
    CHECK(cert.margin == 1.0);

    // determinism: identical inputs give identical certificates
    AnalyticMap p{PowerSeries({cplx(1.0), cplx(0.4, 0.2)}, 0.0, 0.999),
                  MapKind::raw};
    SubordinationCertificate c1 = certify_subordination_to_exp(p, default_plan());
    SubordinationCertificate c2 = certify_subordination_to_exp(p, default_plan());
    CHECK(c1.max_log_mod == c2.max_log_mod);
    CHECK(c1.witness == c2.witness);
}

TEST_CASE("certify: affine map with a known circle maximum") {
    AnalyticMap p{PowerSeries({cplx(1.0), cplx(0.5)}, 0.0, 0.999), MapKind::raw};
    SubordinationCertificate cert =
        certify_subordination_to_exp(p, single_radius(0.999));
    CHECK(cert.status == CertificateStatus::verified_on_grid);
    // |Log(1 + 0.5 z)| on |z| = r peaks at z = -r
    double expected = std::fabs(std::log(1.0 - 0.5 * 0.999));
    CHECK(cert.max_log_mod == doctest::Approx(expected).epsilon(1e-7));
    CHECK(std::abs(cert.witness - cplx(-0.999, 0.0)) <= 1e-2);
    CHECK(cert.margin == 1.0 - cert.max_log_mod);
}

TEST_CASE("certify: per-circle maxima grow with the radius") {
    PowerSeries lam = kummer_lambda_series(cplx(1.0), cplx(2.0), 0.999);
    AnalyticMap f{lam, MapKind::normalized};
    AnalyticMap q = convex_quantity(f);
    double prev = -1.0;
    for (double r : {0.5, 0.9, 0.99, 0.999}) {
        SubordinationCertificate cert =
            certify_subordination_to_exp(q, single_radius(r));
        CHECK(cert.max_log_mod > prev);
        prev = cert.max_log_mod;
    }
}

TEST_CASE("certify: doubling the angle count barely moves the maximum") {
    PowerSeries lam = kummer_lambda_series(cplx(1.0), cplx(2.0), 0.999);
    AnalyticMap q = convex_quantity(AnalyticMap{lam, MapKind::normalized});
    SamplingPlan coarse = default_plan();
    SamplingPlan fine = coarse;
    fine.angles = 2 * coarse.angles;
    double m1 = certify_subordination_to_exp(q, coarse).max_log_mod;
    double m2 = certify_subordination_to_exp(q, fine).max_log_mod;
    CHECK(std::fabs(m1 - m2) <= 1e-6);
}

TEST_CASE("certify: refutation reports a witness outside the region") {
    AnalyticMap p{PowerSeries({cplx(1.0), cplx(2.0)}, 0.0, 1.0), MapKind::raw};
    SubordinationCertificate cert =
        certify_subordination_to_exp(p, default_plan());
    CHECK(cert.status == CertificateStatus::refuted);
    CHECK(cert.max_log_mod > 1.0 + 1e-12);
    auto [inside, mod] = in_exp_disk(p.series.eval(cert.witness));
    CHECK(!inside);
    CHECK(mod == doctest::Approx(cert.max_log_mod).epsilon(1e-12));

    // a sampled zero of p refutes outright
    AnalyticMap z0{PowerSeries({cplx(1.0), cplx(-1.0 / 0.9)}, 0.0, 1.0),
                   MapKind::raw};
    SubordinationCertificate zc = certify_subordination_to_exp(z0, default_plan());
    CHECK(zc.status == CertificateStatus::refuted);
    CHECK(zc.zero_encountered);
}

TEST_CASE("certify: input validation") {
    AnalyticMap norm{PowerSeries({cplx(0.0), cplx(1.0)}, 0.0, 0.999),
                     MapKind::normalized};
    CHECK_THROWS_AS(certify_subordination_to_exp(norm, default_plan()),
                    InputError);

    AnalyticMap off{PowerSeries({cplx(1.5), cplx(0.1)}, 0.0, 0.999),
                    MapKind::raw};
    CHECK_THROWS_AS(certify_subordination_to_exp(off, default_plan()),
                    InputError);

    AnalyticMap ok{PowerSeries({cplx(1.0), cplx(0.1)}, 0.0, 0.9), MapKind::raw};
    SamplingPlan outside = single_radius(0.999);  // beyond r_ref = 0.9
    CHECK_THROWS_AS(certify_subordination_to_exp(ok, outside), InputError);
    SamplingPlan few = default_plan();
    few.angles = 100;
    CHECK_THROWS_AS(certify_subordination_to_exp(ok, few), InputError);
    SamplingPlan norefine = default_plan();
    norefine.radii = {0.5};
    norefine.refine_factor = 1;
    CHECK_THROWS_AS(certify_subordination_to_exp(ok, norefine), InputError);
}

TEST_CASE("quantities: identity map and the half-plane map") {
    AnalyticMap id{PowerSeries({cplx(0.0), cplx(1.0)}, 0.0, 0.999),
                   MapKind::normalized};
    AnalyticMap s = starlike_quantity(id);
    AnalyticMap k = convex_quantity(id);
    CHECK(s.kind == MapKind::raw);
    CHECK(k.kind == MapKind::raw);
    CHECK(s.series.coeffs[0] == cplx(1.0));
    CHECK(k.series.coeffs[0] == cplx(1.0));
    for (std::size_t n = 1; n < s.series.coeffs.size(); ++n)
        CHECK(std::abs(s.series.coeffs[n]) == 0.0);

    // f = z/(1-z): z f'/f = 1/(1-z), 1 + z f''/f' = (1+z)/(1-z)
    std::size_t deg = 60;
    std::vector<cplx> cs(deg + 1, cplx(1.0));
    cs[0] = 0.0;
    AnalyticMap koebe{PowerSeries(std::move(cs), 0.0, 0.9), MapKind::normalized};
    AnalyticMap sq = starlike_quantity(koebe);
    AnalyticMap kq = convex_quantity(koebe);
    std::mt19937_64 gen(302);
    double worst_s = 0.0, worst_k = 0.0;
    for (int i = 0; i < 200; ++i) {
        cplx z = std::polar(0.6 * std::sqrt(urand(gen)),
                            2.0 * std::numbers::pi * urand(gen));
        worst_s = std::max(worst_s,
                           std::abs(sq.series.eval(z) - 1.0 / (1.0 - z)));
        worst_k = std::max(worst_k, std::abs(kq.series.eval(z) -
                                             (1.0 + z) / (1.0 - z)));
    }
    CHECK(worst_s <= 1e-9);
    CHECK(worst_k <= 1e-9);

    AnalyticMap raw{PowerSeries({cplx(1.0)}, 0.0, 0.999), MapKind::raw};
    CHECK_THROWS_AS(starlike_quantity(raw), InputError);
    CHECK_THROWS_AS(convex_quantity(raw), InputError);
}

TEST_CASE("alexander duality: convex of transform = starlike of map") {
    std::mt19937_64 gen(303);
    for (int i = 0; i < 40; ++i) {
        AnalyticMap f = random_normalized(gen, 24, 0.35);
        AnalyticMap lhs = convex_quantity(alexander(f));
        AnalyticMap rhs = starlike_quantity(f);
        std::size_t n_common =
            std::min(lhs.series.coeffs.size(), rhs.series.coeffs.size());
        double worst = 0.0;
        for (std::size_t n = 0; n < n_common; ++n)
            worst = std::max(worst,
                             std::abs(lhs.series.coeffs[n] - rhs.series.coeffs[n]));
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("hadamard product: kernels act as advertised") {
    std::mt19937_64 gen(304);
    AnalyticMap f = random_normalized(gen, 30, 0.5);

    AnalyticMap geo = geometric_kernel(30);
    AnalyticMap idp = hadamard(f, geo);
    CHECK(idp.series.coeffs == f.series.coeffs);  // identity, bitwise

    AnalyticMap alex = hadamard(f, alexander_kernel(30));
    AnalyticMap alex_direct = alexander(f);
    AnalyticMap lib = hadamard(f, libera_kernel(30));
    AnalyticMap lib_direct = libera(f);
    double worst = 0.0;
    for (std::size_t n = 1; n <= 30; ++n) {
        worst = std::max(worst, std::abs(alex.series.coeffs[n] -
                                         alex_direct.series.coeffs[n]));
        worst = std::max(worst, std::abs(lib.series.coeffs[n] -
                                         lib_direct.series.coeffs[n]));
    }
    CHECK(worst <= 1e-15);

    for (auto kfn : {geometric_kernel, alexander_kernel, libera_kernel}) {
        AnalyticMap ker = kfn(12);
        CHECK(ker.kind == MapKind::normalized);
        CHECK(ker.series.coeffs[0] == cplx(0.0));
        CHECK(ker.series.coeffs[1] == cplx(1.0));
        CHECK(ker.series.degree() == 12);
    }
    CHECK(geometric_kernel(5).series.coeffs[5] == cplx(1.0));
    CHECK(alexander_kernel(5).series.coeffs[5] == cplx(0.2));
    CHECK(libera_kernel(5).series.coeffs[5] == cplx(2.0 / 6.0));

    AnalyticMap raw{PowerSeries({cplx(1.0), cplx(0.3)}, 0.0, 0.999),
                    MapKind::raw};
    CHECK_THROWS_AS(hadamard(raw, geo), InputError);
}

TEST_CASE("transforms preserve normalization and reject raw maps") {
    std::mt19937_64 gen(305);
    AnalyticMap f = random_normalized(gen, 15, 0.4);
    AnalyticMap a = alexander(f);
    AnalyticMap l = libera(f);
    CHECK(a.series.coeffs[1] == cplx(1.0));
    CHECK(l.series.coeffs[1] == cplx(1.0));
    for (std::size_t n = 2; n <= 15; ++n) {
        CHECK(a.series.coeffs[n] ==
              f.series.coeffs[n] / static_cast<double>(n));
        CHECK(l.series.coeffs[n] ==
              2.0 * f.series.coeffs[n] / static_cast<double>(n + 1));
    }
    AnalyticMap raw{PowerSeries({cplx(1.0)}, 0.0, 0.999), MapKind::raw};
    CHECK_THROWS_AS(alexander(raw), InputError);
    CHECK_THROWS_AS(libera(raw), InputError);
}

TEST_CASE("class membership dispatch") {
    PowerSeries lam = kummer_lambda_series(cplx(1.0), cplx(2.0), 0.999);
    AnalyticMap f{lam, MapKind::normalized};
    SamplingPlan plan = default_plan();
    SubordinationCertificate viaclass =
        class_membership(f, FunctionClass::exp_convex, plan);
    SubordinationCertificate direct =
        certify_subordination_to_exp(convex_quantity(f), plan);
    CHECK(viaclass.max_log_mod == direct.max_log_mod);
    CHECK(viaclass.status == CertificateStatus::verified_on_grid);

    AnalyticMap p{PowerSeries({cplx(1.0), cplx(0.5)}, 0.0, 0.999), MapKind::raw};
    SubordinationCertificate pc =
        class_membership(p, FunctionClass::exp_caratheodory, plan);
    CHECK(pc.status == CertificateStatus::verified_on_grid);
    CHECK_THROWS_AS(class_membership(p, FunctionClass::exp_starlike, plan),
                    InputError);
}

TEST_CASE("default plan and the angle-count override") {
    unsetenv("EXPDISK_ANGLES");
    SamplingPlan base = default_plan();
    CHECK(base.angles == 4096);
    CHECK(base.radii == std::vector<double>{0.9, 0.99, 0.999});
    CHECK(base.refine_factor == 8);

    setenv("EXPDISK_ANGLES", "512", 1);
    CHECK(default_plan().angles == 512);
    setenv("EXPDISK_ANGLES", "100", 1);
    CHECK_THROWS_AS(default_plan(), InputError);
    setenv("EXPDISK_ANGLES", "4096junk", 1);
    CHECK_THROWS_AS(default_plan(), InputError);
    unsetenv("EXPDISK_ANGLES");
    CHECK(default_plan().angles == 4096);
}

TEST_CASE("string round trips") {
    CHECK(to_string(CertificateStatus::verified_on_grid) == "verified_on_grid");
    CHECK(to_string(CertificateStatus::refuted) == "refuted");
    CHECK(to_string(CertificateStatus::inconclusive) == "inconclusive");
    CHECK(to_string(FunctionClass::exp_caratheodory) == "Pe");
    CHECK(to_string(FunctionClass::exp_starlike) == "Se_star");
    CHECK(to_string(FunctionClass::exp_convex) == "Ke");
    for (auto cls : {FunctionClass::exp_caratheodory, FunctionClass::exp_starlike,
                     FunctionClass::exp_convex})
        CHECK(class_from_string(to_string(cls)) == cls);
    CHECK(!class_from_string("nonsense").has_value());
}
