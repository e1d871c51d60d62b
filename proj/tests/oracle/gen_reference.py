#!/usr/bin/env python3
"""Generates frozen reference values for the statistics tests.

Uses mpmath at 50 significant digits, independent of the C++ code paths:
  - Welch two-sample t-test cases (t statistic, Welch-Satterthwaite df,
    two-sided p via the regularized incomplete beta function)
  - Student t CDF reference points
  - two-sided t quantiles used for confidence intervals

Run from the repository root:
    python3 tests/oracle/gen_reference.py > tests/reference_stats.hpp
"""

import mpmath as mp

mp.mp.dps = 50


def mean(xs):
    return mp.fsum(xs) / len(xs)


def svar(xs):
    m = mean(xs)
    return mp.fsum((x - m) ** 2 for x in xs) / (len(xs) - 1)


def t_cdf(x, df):
    # P(T <= x) = 1 - I_{df/(df+x^2)}(df/2, 1/2) / 2 for x >= 0
    x = mp.mpf(x)
    df = mp.mpf(df)
    ib = mp.betainc(df / 2, mp.mpf(1) / 2, 0, df / (df + x * x), regularized=True)
    if x >= 0:
        return 1 - ib / 2
    return ib / 2


def welch(a, b):
    a = [mp.mpf(x) for x in a]
    b = [mp.mpf(x) for x in b]
    na, nb = len(a), len(b)
    va, vb = svar(a), svar(b)
    se2 = va / na + vb / nb
    t = (mean(a) - mean(b)) / mp.sqrt(se2)
    df = se2 ** 2 / ((va / na) ** 2 / (na - 1) + (vb / nb) ** 2 / (nb - 1))
    p = 2 * (1 - t_cdf(abs(t), df))
    return t, df, p


WELCH_CASES = [
    # (name, sample a, sample b)
    ("spec_example", [2.1, 2.5, 2.3], [3.0, 3.2, 3.1]),
    ("close_means", [5.0, 5.1, 4.9, 5.05, 4.95], [5.02, 5.08, 4.98, 5.01]),
    ("tiny_n", [1.0, 2.0], [4.0, 5.0]),
    ("n2_vs_n10", [0.5, 0.7], [0.6, 0.61, 0.59, 0.62, 0.6, 0.58, 0.63, 0.6, 0.6, 0.61]),
    ("unequal_var", [10.0, 10.2, 9.8, 10.1, 9.9, 10.0], [8.0, 12.0, 6.0, 14.0, 10.0]),
    ("big_gap", [1.0, 1.1, 0.9, 1.05], [9.0, 9.2, 8.8, 9.1]),
    ("identical_spread", [3.0, 4.0, 5.0], [4.0, 5.0, 6.0]),
    ("wide_vs_narrow", [100.0, 90.0, 110.0, 95.0, 105.0], [99.0, 99.5, 100.5, 101.0, 100.0]),
    ("negatives", [-2.0, -1.5, -2.5, -1.8], [-1.0, -0.5, -1.2, -0.8]),
    ("mixed_sign", [-1.0, 0.0, 1.0, 2.0], [0.5, 1.5, 2.5, 3.5]),
    ("near_zero_var_a", [7.0, 7.0000001, 6.9999999], [7.5, 7.6, 7.4]),
    ("counts_like", [6.0, 5.0, 8.0, 4.0, 7.0, 6.0, 5.0, 7.0], [0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]),
    ("waits_like",
     [1.43, 1.52, 1.38, 1.47, 1.41, 1.49, 1.44, 1.40, 1.46, 1.39],
     [1.29, 1.33, 1.25, 1.31, 1.27, 1.30, 1.28, 1.26, 1.32, 1.24]),
    ("skewed", [0.1, 0.2, 0.15, 3.0, 0.12, 0.18], [0.5, 0.55, 0.45, 0.52, 0.48]),
    ("large_n",
     [float(50 + (i * 37 % 11) - 5) for i in range(40)],
     [float(52 + (i * 53 % 13) - 6) for i in range(35)]),
    ("scale_1000", [2100.0, 2500.0, 2300.0], [3000.0, 3200.0, 3100.0]),
    ("fractional", [0.001, 0.002, 0.0015, 0.0012], [0.0011, 0.0019, 0.0014, 0.0013]),
    ("one_wide_one_tight", [5.0, 15.0, 10.0], [10.1, 10.2, 10.0, 9.9, 9.8]),
    ("b_bigger", [4.0, 4.2, 3.8], [6.5, 6.4, 6.6, 6.55]),
    ("long_tail_counts", [12.0, 0.0, 3.0, 7.0, 1.0, 9.0, 2.0, 4.0, 6.0, 0.0],
     [1.0, 0.0, 2.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0]),
]

TCDF_POINTS = [
    (2.0, 10.0),
    (0.5, 1.0),
    (-0.5, 1.0),
    (1.0, 2.0),
    (-3.0, 5.0),
    (4.5, 3.0),
    (0.1, 30.0),
    (-2.2281388519862735, 10.0),
    (1.959963984540054, 1e6),
    (6.0, 2.5),
    (-8.0, 12.0),
    (0.0, 7.3),
    (2.7764451051977987, 4.0),
    (-1.6448536269514722, 1e5),
    (12.0, 1.5),
    (3.1824463052842953, 3.0),
    (25.0, 40.0),
    (-30.0, 8.0),
]

QUANTILES = [
    # (two-sided coverage, df) -> upper critical value
    (0.95, 99.0),
    (0.95, 9.0),
    (0.99, 19.0),
    (0.95, 1.0),
    (0.90, 49.5),
]


def fmt(x):
    return mp.nstr(x, 17, strip_zeros=False)


def main():
    print("// Auto-generated by tests/oracle/gen_reference.py (mpmath, 50 digits).")
    print("// Do not edit by hand; regenerate with the script instead.")
    print("#pragma once")
    print()
    print("#include <vector>")
    print()
    print("namespace isst_test {")
    print()
    print("struct WelchCase {")
    print("    const char* name;")
    print("    std::vector<double> a;")
    print("    std::vector<double> b;")
    print("    double t;")
    print("    double df;")
    print("    double p;")
    print("};")
    print()
    print("inline const std::vector<WelchCase>& welch_reference_cases() {")
    print("    static const std::vector<WelchCase> cases = {")
    for name, a, b in WELCH_CASES:
        t, df, p = welch(a, b)
        alist = ", ".join(repr(x) for x in a)
        blist = ", ".join(repr(x) for x in b)
        print(f'        {{"{name}",')
        print(f"         {{{alist}}},")
        print(f"         {{{blist}}},")
        print(f"         {fmt(t)}, {fmt(df)}, {fmt(p)}}},")
    print("    };")
    print("    return cases;")
    print("}")
    print()
    print("struct TCdfPoint { double x; double df; double cdf; };")
    print()
    print("inline const std::vector<TCdfPoint>& t_cdf_reference_points() {")
    print("    static const std::vector<TCdfPoint> pts = {")
    for x, df in TCDF_POINTS:
        c = t_cdf(x, df)
        print(f"        {{{x!r}, {df!r}, {fmt(c)}}},")
    print("    };")
    print("    return pts;")
    print("}")
    print()
    print("struct TQuantilePoint { double coverage; double df; double upper; };")
    print()
    print("inline const std::vector<TQuantilePoint>& t_quantile_reference_points() {")
    print("    static const std::vector<TQuantilePoint> pts = {")
    for cov, df in QUANTILES:
        # upper critical value q with CDF(q) = 1 - (1-cov)/2
        target = 1 - (1 - mp.mpf(cov)) / 2
        q = mp.findroot(lambda q: t_cdf(q, df) - target, mp.mpf(2))
        print(f"        {{{cov!r}, {df!r}, {fmt(q)}}},")
    print("    };")
    print("    return pts;")
    print("}")
    print()
    print("}  // namespace isst_test")


if __name__ == "__main__":
    main()
