#include "expdisk/power_series.hpp"

#include <algorithm>
#include <cmath>

namespace expdisk {

PowerSeries::PowerSeries(std::vector<cplx> cs, double tail, double r)
    : coeffs(std::move(cs)), tail_bound(tail), r_ref(r) {
    if (coeffs.empty()) throw InputError("PowerSeries: empty coefficient list");
    for (const cplx& c : coeffs) require_finite(c, "PowerSeries coefficient");
    require_finite(tail_bound, "PowerSeries tail_bound");
    if (tail_bound < 0.0) throw InputError("PowerSeries: negative tail_bound");
    if (!(r_ref > 0.0 && r_ref <= 1.0))
        throw InputError("PowerSeries: r_ref must lie in (0, 1]");
}

cplx PowerSeries::eval(cplx z) const {
    require_finite(z, "series eval point");
    if (std::abs(z) > r_ref * (1.0 + 1e-12))
        throw InputError("series eval: point outside |z| <= r_ref");
    cplx sum = 0.0, comp = 0.0, zp = 1.0;
    for (const cplx& c : coeffs) {
        cplx y = c * zp - comp;
        cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        zp *= z;
    }
    return sum;
}

PowerSeries PowerSeries::derivative() const {
    std::vector<cplx> d;
    if (coeffs.size() <= 1) {
        d.assign(1, cplx(0.0));
    } else {
        d.resize(coeffs.size() - 1);
        for (std::size_t n = 1; n < coeffs.size(); ++n)
            d[n - 1] = coeffs[n] * static_cast<double>(n);
    }
    double tail = tail_bound * static_cast<double>(coeffs.size()) /
                  std::max(1.0 - r_ref, 1e-12);
    return PowerSeries(std::move(d), tail, r_ref);
}

namespace {

PowerSeries combine(const PowerSeries& a, const PowerSeries& b, double sb) {
    std::vector<cplx> c(std::max(a.coeffs.size(), b.coeffs.size()), cplx(0.0));
    for (std::size_t n = 0; n < a.coeffs.size(); ++n) c[n] = a.coeffs[n];
    for (std::size_t n = 0; n < b.coeffs.size(); ++n) c[n] += sb * b.coeffs[n];
    return PowerSeries(std::move(c), a.tail_bound + b.tail_bound,
                       std::min(a.r_ref, b.r_ref));
}

}  // namespace

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
    return combine(a, b, 1.0);
}

PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b) {
    return combine(a, b, -1.0);
}

PowerSeries series_scale(const PowerSeries& a, cplx s) {
    require_finite(s, "series scale factor");
    std::vector<cplx> c(a.coeffs);
    for (cplx& v : c) v *= s;
    return PowerSeries(std::move(c), a.tail_bound * std::abs(s), a.r_ref);
}

PowerSeries series_add_const(const PowerSeries& a, cplx s) {
    require_finite(s, "series constant");
    std::vector<cplx> c(a.coeffs);
    c[0] += s;
    return PowerSeries(std::move(c), a.tail_bound, a.r_ref);
}

PowerSeries series_shift_up(const PowerSeries& a) {
    std::vector<cplx> c(a.coeffs.size() + 1, cplx(0.0));
    for (std::size_t n = 0; n < a.coeffs.size(); ++n) c[n + 1] = a.coeffs[n];
    return PowerSeries(std::move(c), a.tail_bound * a.r_ref, a.r_ref);
}

PowerSeries series_shift_down(const PowerSeries& a) {
    if (a.coeffs[0] != cplx(0.0))
        throw InputError("series shift down: constant term is nonzero");
    std::vector<cplx> c;
    if (a.coeffs.size() == 1) {
        c.assign(1, cplx(0.0));
    } else {
        c.assign(a.coeffs.begin() + 1, a.coeffs.end());
    }
    return PowerSeries(std::move(c), a.tail_bound / a.r_ref, a.r_ref);
}

PowerSeries series_divide(const PowerSeries& num, const PowerSeries& den,
                          std::size_t degree) {
    if (den.coeffs[0] == cplx(0.0))
        throw InputError("series divide: denominator has zero constant term");
    auto at = [](const PowerSeries& s, std::size_t n) {
        return n < s.coeffs.size() ? s.coeffs[n] : cplx(0.0);
    };
    std::vector<cplx> q(degree + 1);
    q[0] = at(num, 0) / den.coeffs[0];
    for (std::size_t n = 1; n <= degree; ++n) {
        cplx s = at(num, n);
        for (std::size_t k = 1; k <= n && k < den.coeffs.size(); ++k)
            s -= den.coeffs[k] * q[n - k];
        q[n] = s / den.coeffs[0];
    }
    double r = std::min(num.r_ref, den.r_ref);
    double tail = ratio_majorant_tail(q, r);
    return PowerSeries(std::move(q), tail, r);
}

double ratio_majorant_tail(const std::vector<cplx>& coeffs, double r) {
    const std::size_t window = 6;
    std::vector<double> t(coeffs.size());
    double rp = 1.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        t[n] = std::abs(coeffs[n]) * rp;
        rp *= r;
    }
    if (t.size() < window) {
        double m = 0.0;
        for (double v : t) m = std::max(m, v);
        return 10.0 * m;
    }
    bool trailing_zero = true;
    for (std::size_t i = t.size() - window; i < t.size(); ++i)
        if (t[i] != 0.0) trailing_zero = false;
    if (trailing_zero) return 0.0;
    bool settled = true;
    for (std::size_t i = t.size() - window + 1; i < t.size(); ++i) {
        if (t[i - 1] == 0.0 || t[i] > 0.5 * t[i - 1]) settled = false;
    }
    if (settled) return 2.0 * t.back();
    double m = 0.0;
    for (std::size_t i = t.size() - window; i < t.size(); ++i) m = std::max(m, t[i]);
    return 10.0 * m;
}

namespace detail {

double extend_by_ratio(std::vector<cplx>& cs,
                       const std::function<cplx(std::size_t)>& ratio,
                       double r_ref, double tail_target,
                       std::size_t min_degree) {
    const std::size_t n_max = 10000;
    if (cs.empty()) throw InputError("extend_by_ratio: seed coefficient required");
    std::size_t settled = 0;
    double rp = std::pow(r_ref, static_cast<double>(cs.size() - 1));
    for (;;) {
        std::size_t n = cs.size() - 1;
        cplx rho = ratio(n);
        require_finite(rho, "series coefficient ratio");
        if (rho == cplx(0.0)) return 0.0;
        cs.push_back(cs.back() * rho);
        rp *= r_ref;
        double q = std::abs(rho) * r_ref;
        settled = (q <= 0.5) ? settled + 1 : 0;
        double t = std::abs(cs.back()) * rp;
        if (cs.size() - 1 >= min_degree && settled >= 4 && t <= tail_target)
            return 2.0 * t;
        if (cs.size() > n_max)
            throw InputError(
                "series truncation: ratio test did not settle within 10000 terms");
    }
}

}  // namespace detail

}  // namespace expdisk
