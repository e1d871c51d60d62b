#include "isst/stats.hpp"

#include <cmath>
#include <limits>

namespace isst {

double sample_mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("sample_mean: empty sample");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("sample_variance: need at least 2 points");
    const double m = sample_mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

// Regularized incomplete beta I_x(a, b).
double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

}  // namespace

double student_t_cdf(double x, double df) {
    if (!(df > 0.0)) throw std::invalid_argument("student_t_cdf: df must be positive");
    if (std::isinf(x)) return x > 0.0 ? 1.0 : 0.0;
    const double ib = regularized_incomplete_beta(df / 2.0, 0.5, df / (df + x * x));
    const double cdf = x >= 0.0 ? 1.0 - ib / 2.0 : ib / 2.0;
    return std::min(1.0, std::max(0.0, cdf));
}

double student_t_two_sided_quantile(double coverage, double df) {
    if (!(coverage > 0.0 && coverage < 1.0))
        throw std::invalid_argument("student_t_two_sided_quantile: coverage must be in (0, 1)");
    const double target = 1.0 - (1.0 - coverage) / 2.0;
    double lo = 0.0, hi = 1.0;
    while (student_t_cdf(hi, df) < target) {
        hi *= 2.0;
        if (hi > 1e12) break;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (student_t_cdf(mid, df) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-13 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

TTestResult welch_t_test(std::span<const double> a, std::span<const double> b, double alpha,
                         bool pooled) {
    if (a.size() < 2 || b.size() < 2)
        throw std::invalid_argument("welch_t_test: both samples need at least 2 points");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double ma = sample_mean(a);
    const double mb = sample_mean(b);
    const double va = sample_variance(a);
    const double vb = sample_variance(b);

    TTestResult r;
    r.alpha = alpha;
    if (va == 0.0 && vb == 0.0) {
        // No spread at all: the test is vacuous.
        r.degenerate = true;
        if (ma == mb) {
            r.t = 0.0;
            r.p = 1.0;
        } else {
            r.t = ma > mb ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
            r.p = 0.0;
        }
        r.df = pooled ? na + nb - 2.0 : std::max(na, nb) - 1.0;
        r.reject = r.p < alpha;
        return r;
    }

    if (pooled) {
        const double sp2 = ((na - 1.0) * va + (nb - 1.0) * vb) / (na + nb - 2.0);
        r.df = na + nb - 2.0;
        r.t = (ma - mb) / std::sqrt(sp2 * (1.0 / na + 1.0 / nb));
    } else {
        const double sea = va / na;
        const double seb = vb / nb;
        r.df = (sea + seb) * (sea + seb) /
               (sea * sea / (na - 1.0) + seb * seb / (nb - 1.0));
        r.t = (ma - mb) / std::sqrt(sea + seb);
    }
    // Two-sided p straight from the incomplete beta, which keeps precision in
    // the far tails where 2*(1-cdf) would cancel.
    r.p = regularized_incomplete_beta(r.df / 2.0, 0.5, r.df / (r.df + r.t * r.t));
    r.reject = r.p < alpha;
    return r;
}

}  // namespace isst
