#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "expdisk/theorems.hpp"

using namespace expdisk;

namespace {

TheoremParams kummer_params(cplx a, cplx c) {
    TheoremParams p;
    p.a = a;
    p.c = c;
    return p;
}

TheoremParams lommel_params(double mu, double nu) {
    TheoremParams p;
    p.mu = cplx(mu);
    p.nu = cplx(nu);
    return p;
}

TheoremParams struve_params(cplx kappa, cplx c) {
    TheoremParams p;
    p.kappa = kappa;
    p.cparam = c;
    return p;
}

TheoremParams delta_params(double d) {
    TheoremParams p;
    p.delta = d;
    return p;
}

double min_slack(const HypothesisReport& h) {
    double m = std::numeric_limits<double>::infinity();
    for (const Condition& c : h.conditions)
        if (!c.informational) m = std::min(m, c.slack);
    return m;
}

bool has_informational(const HypothesisReport& h) {
    for (const Condition& c : h.conditions)
        if (c.informational) return true;
    return false;
}

const SubordinationCertificate& cert_of(const InstanceReport& rep,
                                        std::size_t i = 0) {
    REQUIRE(rep.certificates.size() > i);
    return rep.certificates[i].second;
}

}  // namespace

TEST_CASE("threshold constants") {
    CHECK(thresholds::kummer_disk_bound() ==
          doctest::Approx(1.4857376705242156).epsilon(1e-15));
    CHECK(thresholds::gdelta_radius() ==
          doctest::Approx(0.28268800989406088).epsilon(1e-14));
    CHECK(thresholds::hdelta_radius() ==
          doctest::Approx(0.86466471676338731).epsilon(1e-14));
    CHECK(thresholds::lommel_convex_rhs() ==
          doctest::Approx(15.530679920631445).epsilon(1e-13));
    CHECK(thresholds::lommel_alex_rhs() ==
          doctest::Approx(17.530896766748915).epsilon(1e-13));
    CHECK(thresholds::struve_convex_rhs(1.0) ==
          doctest::Approx(42.309346175815116).epsilon(1e-13));
    CHECK(thresholds::struve_h_nu_bound() ==
          doctest::Approx(14.264977016550642).epsilon(1e-13));
}

TEST_CASE("theorem ids: string round trips") {
    for (TheoremId t : all_theorems()) {
        auto back = theorem_from_string(to_string(t));
        REQUIRE(back.has_value());
        CHECK(*back == t);
    }
    CHECK(!theorem_from_string("NOT_A_THEOREM").has_value());
    CHECK(all_theorems().size() == 14);
}

TEST_CASE("CH_P: membership certificates for the classic pairs") {
    // expected grid maxima at radius 0.999 (frozen from an independent
    // dense-sampling run)
    const struct {
        double a, c, expected_max;
    } cases[] = {
        {-1.0, 3.0, 0.404965},  {-2.0, 4.0, 0.597110},   {-3.0, 5.0, 0.701880},
        {-25.0, 27.0, 0.959065}, {-100.0, 102.0, 0.989001},
    };
    for (const auto& cs : cases) {
        TheoremParams p = kummer_params(cplx(cs.a), cplx(cs.c));
        HypothesisReport hyp = check_hypothesis(TheoremId::CH_P, p);
        CHECK(hyp.all_satisfied);
        CHECK(min_slack(hyp) == doctest::Approx(0.0).epsilon(1e-14));

        InstanceReport rep =
            verify_instance(TheoremId::CH_P, p, default_plan());
        CHECK(cert_of(rep).status == CertificateStatus::verified_on_grid);
        CHECK(std::fabs(cert_of(rep).max_log_mod - cs.expected_max) <= 2e-3);
    }

    HypothesisReport bad =
        check_hypothesis(TheoremId::CH_P, kummer_params(cplx(5.0), cplx(3.0)));
    CHECK(!bad.all_satisfied);
    CHECK(min_slack(bad) == -4.0);
}

TEST_CASE("CH_K / CH_S: convexity and starlikeness of the small instance") {
    InstanceReport k = verify_instance(TheoremId::CH_K,
                                       kummer_params(cplx(1.0), cplx(2.0)),
                                       default_plan());
    CHECK(k.all_verified);
    CHECK(k.certificates[0].first == "Lambda(a;c) in Ke");
    CHECK(std::fabs(cert_of(k).max_log_mod - 0.934563) <= 2e-3);

    InstanceReport s = verify_instance(TheoremId::CH_S,
                                       kummer_params(cplx(2.0), cplx(3.0)),
                                       default_plan());
    CHECK(s.all_verified);
    // Alexander duality: z Phi(2;3) is the derivative-normalized partner of
    // Lambda(1;2), so the two quantities have identical maxima.
    CHECK(std::fabs(cert_of(s).max_log_mod - cert_of(k).max_log_mod) <= 1e-9);
}

TEST_CASE("delta families: frozen thresholds and the four extremes") {
    double tg = thresholds::gdelta_radius();
    double th = thresholds::hdelta_radius();

    // interior points of both intervals verify comfortably
    InstanceReport gmid = verify_instance(TheoremId::CH_GDELTA,
                                          delta_params(1.0), default_plan());
    CHECK(gmid.all_verified);
    InstanceReport hmid = verify_instance(TheoremId::CH_HDELTA,
                                          delta_params(2.0), default_plan());
    CHECK(hmid.all_verified);

    // extremes of the stated parameter intervals
    InstanceReport glo = verify_instance(
        TheoremId::CH_GDELTA, delta_params(1.0 - tg), default_plan());
    InstanceReport ghi = verify_instance(
        TheoremId::CH_GDELTA, delta_params(1.0 + tg), default_plan());
    InstanceReport hlo = verify_instance(
        TheoremId::CH_HDELTA, delta_params(2.0 - th), default_plan());
    InstanceReport hhi = verify_instance(
        TheoremId::CH_HDELTA, delta_params(2.0 + th), default_plan());

    CHECK(glo.hypothesis.all_satisfied);
    CHECK(ghi.hypothesis.all_satisfied);
    CHECK(hlo.hypothesis.all_satisfied);
    CHECK(hhi.hypothesis.all_satisfied);

    // Regression pin: the lower gdelta extreme is REFUTED on the grid (the
    // convex quantity of Lambda(1; 2 - tg) leaves the region near z = -r for
    // r >= 0.926).  The other three extremes verify.
    CHECK(cert_of(glo).status == CertificateStatus::refuted);
    CHECK(std::fabs(cert_of(glo).max_log_mod - 1.133345) <= 2e-3);
    CHECK(cert_of(ghi).status == CertificateStatus::verified_on_grid);
    CHECK(std::fabs(cert_of(ghi).max_log_mod - 0.801472) <= 2e-3);
    CHECK(cert_of(hlo).status == CertificateStatus::verified_on_grid);
    CHECK(std::fabs(cert_of(hlo).max_log_mod - 0.495836) <= 2e-3);
    CHECK(cert_of(hhi).status == CertificateStatus::verified_on_grid);
    CHECK(std::fabs(cert_of(hhi).max_log_mod - 0.263168) <= 2e-3);

    // outside either interval the hypothesis fails
    CHECK(!check_hypothesis(TheoremId::CH_GDELTA, delta_params(1.0 + tg + 1e-6))
               .all_satisfied);
    CHECK(!check_hypothesis(TheoremId::CH_HDELTA, delta_params(2.0 - th - 1e-6))
               .all_satisfied);
}

TEST_CASE("delta families: members agree with the integral oracle") {
    std::mt19937_64 gen(401);
    auto urand = [&gen] {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    };
    for (double delta : {0.75, 1.0, 1.8, 2.5}) {
        cplx c(1.0 + delta);
        auto gmem = claimed_members(TheoremId::CH_GDELTA, delta_params(delta),
                                    0.999);
        auto hmem = claimed_members(TheoremId::CH_HDELTA, delta_params(delta),
                                    0.999);
        REQUIRE(gmem.size() == 1);
        REQUIRE(hmem.size() == 1);
        double worst = 0.0;
        for (int i = 0; i < 40; ++i) {
            cplx z = std::polar(0.95 * std::sqrt(urand()),
                                2.0 * std::numbers::pi * urand());
            cplx phi = kummer_quadrature_oracle(cplx(1.0), c, z);
            worst = std::max(worst, std::abs(gmem[0].map.series.eval(z) -
                                             (phi - 1.0) * c));
            worst = std::max(worst,
                             std::abs(hmem[0].map.series.eval(z) - z * phi));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("LOM_K: hypothesis slacks and convexity certificate") {
    TheoremParams p = lommel_params(8.0, 3.0);
    HypothesisReport hyp = check_hypothesis(TheoremId::LOM_K, p);
    CHECK(hyp.all_satisfied);
    CHECK(min_slack(hyp) == doctest::Approx(5.93285583629).epsilon(1e-9));

    InstanceReport rep = verify_instance(TheoremId::LOM_K, p, default_plan());
    CHECK(rep.all_verified);
    CHECK(rep.certificates.size() == 1);
    CHECK(rep.certificates[0].first == "h(mu,nu) in Ke");
    CHECK(std::fabs(cert_of(rep).max_log_mod - 0.017984) <= 2e-3);

    CHECK(!check_hypothesis(TheoremId::LOM_K, lommel_params(1.0, 0.0))
               .all_satisfied);
}

TEST_CASE("LOM_ALEX: transform and map certified with equal maxima") {
    TheoremParams p = lommel_params(4.0, 3.0);
    HypothesisReport hyp = check_hypothesis(TheoremId::LOM_ALEX, p);
    CHECK(hyp.all_satisfied);
    CHECK(min_slack(hyp) == doctest::Approx(0.215357860923).epsilon(1e-9));

    InstanceReport rep = verify_instance(TheoremId::LOM_ALEX, p, default_plan());
    CHECK(rep.all_verified);
    REQUIRE(rep.certificates.size() == 2);
    CHECK(rep.certificates[0].first == "A[h(mu,nu)] in Ke");
    CHECK(rep.certificates[1].first == "h(mu,nu) in Se_star");
    // duality: convexity of the transform and starlikeness of the map are
    // certificates of the same quantity
    CHECK(std::fabs(cert_of(rep, 0).max_log_mod - cert_of(rep, 1).max_log_mod) <=
          1e-9);
    CHECK(std::fabs(cert_of(rep, 0).max_log_mod - 0.025220) <= 2e-3);
}

TEST_CASE("LOM_P: exact slack and the Caratheodory certificate") {
    TheoremParams p = lommel_params(1.0, 0.0);
    HypothesisReport hyp = check_hypothesis(TheoremId::LOM_P, p);
    CHECK(hyp.all_satisfied);
    double expected = 7.0 - 4.0 * (std::exp(1.0) - 1.0);
    CHECK(min_slack(hyp) == doctest::Approx(expected).epsilon(1e-14));

    InstanceReport rep = verify_instance(TheoremId::LOM_P, p, default_plan());
    CHECK(rep.all_verified);
    CHECK(rep.certificates[0].first == "h(mu,nu)/z in Pe");
    CHECK(std::fabs(cert_of(rep).max_log_mod - 0.062654) <= 2e-3);

    TheoremParams cp;
    cp.mu = cplx(1.0, 0.5);  // complex mu: the quotient map is undefined here
    cp.nu = cplx(0.0);
    CHECK_THROWS_AS(claimed_members(TheoremId::LOM_P, cp, 0.999), InputError);
    CHECK_NOTHROW(check_hypothesis(TheoremId::LOM_P, cp));
}

TEST_CASE("STR_P and STR_P_REC: certificates and the recursion member") {
    TheoremParams p = struve_params(cplx(2.0), cplx(1.0));
    HypothesisReport hyp = check_hypothesis(TheoremId::STR_P, p);
    CHECK(hyp.all_satisfied);
    double e = std::exp(1.0);
    CHECK(min_slack(hyp) ==
          doctest::Approx(2.0 - (e - 1.0) / 2.0 - 0.25 - 0.5).epsilon(1e-14));

    InstanceReport rep = verify_instance(TheoremId::STR_P, p, default_plan());
    CHECK(rep.all_verified);
    CHECK(std::fabs(cert_of(rep).max_log_mod - 0.083954) <= 2e-3);

    // the recursion member is exactly the next-parameter Struve map
    cplx kappa(2.5, 0.5), c(1.0, 2.0);
    auto mem = claimed_members(TheoremId::STR_P_REC, struve_params(kappa, c),
                               0.999);
    REQUIRE(mem.size() == 1);
    PowerSeries up = struve_u_series(kappa + 1.0, c, 0.999);
    std::size_t n_common =
        std::min(mem[0].map.series.coeffs.size(), up.coeffs.size());
    double worst = 0.0;
    for (std::size_t n = 0; n < n_common; ++n)
        worst = std::max(worst, std::abs(mem[0].map.series.coeffs[n] -
                                         up.coeffs[n]));
    CHECK(worst <= 1e-13);
}

TEST_CASE("STR_K: hypothesis slack and convexity of chi") {
    TheoremParams p = struve_params(cplx(16.0), cplx(1.0));
    HypothesisReport hyp = check_hypothesis(TheoremId::STR_K, p);
    CHECK(hyp.all_satisfied);
    CHECK(min_slack(hyp) == doctest::Approx(0.6307442602).epsilon(1e-6));
    CHECK(has_informational(hyp));  // kappa = 16 is a positive integer

    InstanceReport rep = verify_instance(TheoremId::STR_K, p, default_plan());
    CHECK(rep.all_verified);
    CHECK(std::fabs(cert_of(rep).max_log_mod - 0.011821) <= 2e-3);

    CHECK(!check_hypothesis(TheoremId::STR_K,
                            struve_params(cplx(15.0), cplx(1.0)))
               .all_satisfied);
    CHECK(!has_informational(check_hypothesis(
        TheoremId::STR_K, struve_params(cplx(16.5), cplx(1.0)))));
}

TEST_CASE("STR_H / STR_L: power-normalized Struve certificates") {
    TheoremParams p;
    p.nu = cplx(15.0);
    HypothesisReport hyp = check_hypothesis(TheoremId::STR_H, p);
    CHECK(hyp.all_satisfied);
    CHECK(min_slack(hyp) ==
          doctest::Approx(15.0 - thresholds::struve_h_nu_bound()).epsilon(1e-12));

    InstanceReport reph = verify_instance(TheoremId::STR_H, p, default_plan());
    InstanceReport repl = verify_instance(TheoremId::STR_L, p, default_plan());
    CHECK(reph.all_verified);
    CHECK(repl.all_verified);
    REQUIRE(reph.certificates.size() == 2);
    REQUIRE(repl.certificates.size() == 2);
    CHECK(std::fabs(cert_of(reph, 0).max_log_mod - 0.011481) <= 2e-3);
    // z chi' has starlike quantity identical to the convex quantity of chi,
    // so the companion starlike certificate pins the same maximum
    CHECK(std::fabs(cert_of(reph, 1).max_log_mod -
                    cert_of(reph, 0).max_log_mod) <= 1e-9);
    // c = 1 and c = -1 give reflections of the same maps, so the maxima agree
    CHECK(std::fabs(cert_of(reph, 0).max_log_mod -
                    cert_of(repl, 0).max_log_mod) <= 1e-12);
    CHECK(std::fabs(cert_of(reph, 1).max_log_mod -
                    cert_of(repl, 1).max_log_mod) <= 1e-12);

    TheoremParams low;
    low.nu = cplx(14.0);
    CHECK(!check_hypothesis(TheoremId::STR_H, low).all_satisfied);
}

TEST_CASE("STR_CONV: convolution closure with the three kernels") {
    TheoremParams p = struve_params(cplx(16.0), cplx(1.0));
    InstanceReport rep = verify_instance(TheoremId::STR_CONV, p, default_plan());
    CHECK(rep.all_verified);
    REQUIRE(rep.certificates.size() == 3);
    CHECK(std::fabs(cert_of(rep, 0).max_log_mod - 0.011821) <= 2e-3);
    CHECK(std::fabs(cert_of(rep, 1).max_log_mod - 0.005882) <= 2e-3);
    CHECK(std::fabs(cert_of(rep, 2).max_log_mod - 0.007858) <= 2e-3);

    // convolving with the identity kernel reproduces the STR_K certificate
    AnalyticMap geo = geometric_kernel(400);
    SubordinationCertificate conv =
        convolution_closure_check(16.0, cplx(1.0), geo, default_plan());
    InstanceReport strk = verify_instance(TheoremId::STR_K, p, default_plan());
    CHECK(conv.max_log_mod == doctest::Approx(cert_of(strk).max_log_mod)
                                  .epsilon(1e-12));

    // hypothesis failure for the pair is an error, not a certificate
    CHECK_THROWS_AS(
        convolution_closure_check(1.0, cplx(1.0), geo, default_plan()),
        InputError);
    AnalyticMap raw{PowerSeries({cplx(1.0)}, 0.0, 0.999), MapKind::raw};
    CHECK_THROWS_AS(
        convolution_closure_check(16.0, cplx(1.0), raw, default_plan()),
        InputError);
}

TEST_CASE("parameter plumbing: missing entries and integer flags") {
    TheoremParams empty;
    CHECK_THROWS_AS(check_hypothesis(TheoremId::CH_P, empty), InputError);
    CHECK_THROWS_AS(check_hypothesis(TheoremId::LOM_K, empty), InputError);
    CHECK_THROWS_AS(check_hypothesis(TheoremId::STR_P, empty), InputError);
    CHECK_THROWS_AS(check_hypothesis(TheoremId::CH_GDELTA, empty), InputError);

    TheoremParams half;
    half.a = cplx(1.0);
    CHECK_THROWS_AS(check_hypothesis(TheoremId::CH_P, half), InputError);

    TheoremParams cmu;
    cmu.mu = cplx(8.0, 0.1);
    cmu.nu = cplx(3.0);
    CHECK_THROWS_AS(check_hypothesis(TheoremId::LOM_K, cmu), InputError);

    // positive-integer denominators are admitted but flagged
    CHECK(has_informational(check_hypothesis(
        TheoremId::CH_P, kummer_params(cplx(-1.0), cplx(3.0)))));
    CHECK(!has_informational(check_hypothesis(
        TheoremId::CH_P, kummer_params(cplx(-1.0), cplx(3.5)))));
    CHECK(has_informational(
        check_hypothesis(TheoremId::CH_GDELTA, delta_params(1.0))));

    // parameter exclusions throw rather than report a failed hypothesis
    CHECK_THROWS_AS(
        check_hypothesis(TheoremId::CH_P, kummer_params(cplx(1.0), cplx(-2.0))),
        InputError);
    CHECK_THROWS_AS(
        check_hypothesis(TheoremId::STR_K, struve_params(cplx(-3.0), cplx(1.0))),
        InputError);
}
