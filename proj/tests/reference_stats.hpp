// Auto-generated by tests/oracle/gen_reference.py (mpmath, 50 digits).
// Do not edit by hand; regenerate with the script instead.
#pragma once

#include <vector>

namespace isst_test {

struct WelchCase {
    const char* name;
    std::vector<double> a;
    std::vector<double> b;
    double t;
    double df;
    double p;
};

inline const std::vector<WelchCase>& welch_reference_cases() {
    static const std::vector<WelchCase> cases = {
        {"spec_example",
         {2.1, 2.5, 2.3},
         {3.0, 3.2, 3.1},
         -6.1967733539318679, 2.9411764705882371, 0.0089706865015230072},
        {"close_means",
         {5.0, 5.1, 4.9, 5.05, 4.95},
         {5.02, 5.08, 4.98, 5.01},
         -0.54738476989517577, 6.2735493019544053, 0.60302963313426528},
        {"tiny_n",
         {1.0, 2.0},
         {4.0, 5.0},
         -4.2426406871192851, 2.0000000000000000, 0.051316701949486200},
        {"n2_vs_n10",
         {0.5, 0.7},
         {0.6, 0.61, 0.59, 0.62, 0.6, 0.58, 0.63, 0.6, 0.6, 0.61},
         -0.039959173700782270, 1.0040926023242916, 0.97455466161332830},
        {"unequal_var",
         {10.0, 10.2, 9.8, 10.1, 9.9, 10.0},
         {8.0, 12.0, 6.0, 14.0, 10.0},
         0.0, 4.0133355259210534, 1.0000000000000000},
        {"big_gap",
         {1.0, 1.1, 0.9, 1.05},
         {9.0, 9.2, 8.8, 9.1},
         -83.926600584762902, 4.4117647058823626, 3.0822184174206296e-8},
        {"identical_spread",
         {3.0, 4.0, 5.0},
         {4.0, 5.0, 6.0},
         -1.2247448713915890, 4.0000000000000000, 0.28786413472669066},
        {"wide_vs_narrow",
         {100.0, 90.0, 110.0, 95.0, 105.0},
         {99.0, 99.5, 100.5, 101.0, 100.0},
         0.0, 4.0799920007999200, 1.0000000000000000},
        {"negatives",
         {-2.0, -1.5, -2.5, -1.8},
         {-1.0, -0.5, -1.2, -0.8},
         -4.1699777857372719, 5.4134910361215043, 0.0073583490101214988},
        {"mixed_sign",
         {-1.0, 0.0, 1.0, 2.0},
         {0.5, 1.5, 2.5, 3.5},
         -1.6431676725154983, 6.0000000000000000, 0.15145400164755017},
        {"near_zero_var_a",
         {7.0, 7.0000001, 6.9999999},
         {7.5, 7.6, 7.4},
         -8.6602540378400871, 2.0000000000040000, 0.013072457560279418},
        {"counts_like",
         {6.0, 5.0, 8.0, 4.0, 7.0, 6.0, 5.0, 7.0},
         {0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0},
         11.711026775998258, 8.7230769230769231, 1.2432540518565678e-6},
        {"waits_like",
         {1.43, 1.52, 1.38, 1.47, 1.41, 1.49, 1.44, 1.4, 1.46, 1.39},
         {1.29, 1.33, 1.25, 1.31, 1.27, 1.3, 1.28, 1.26, 1.32, 1.24},
         8.8682321595660459, 15.602025537627449, 1.7363132747507479e-7},
        {"skewed",
         {0.1, 0.2, 0.15, 3.0, 0.12, 0.18},
         {0.5, 0.55, 0.45, 0.52, 0.48},
         0.26285710394714176, 5.0128381986582290, 0.80312226111681177},
        {"large_n",
         {45.0, 49.0, 53.0, 46.0, 50.0, 54.0, 47.0, 51.0, 55.0, 48.0, 52.0, 45.0, 49.0, 53.0, 46.0, 50.0, 54.0, 47.0, 51.0, 55.0, 48.0, 52.0, 45.0, 49.0, 53.0, 46.0, 50.0, 54.0, 47.0, 51.0, 55.0, 48.0, 52.0, 45.0, 49.0, 53.0, 46.0, 50.0, 54.0, 47.0},
         {46.0, 47.0, 48.0, 49.0, 50.0, 51.0, 52.0, 53.0, 54.0, 55.0, 56.0, 57.0, 58.0, 46.0, 47.0, 48.0, 49.0, 50.0, 51.0, 52.0, 53.0, 54.0, 55.0, 56.0, 57.0, 58.0, 46.0, 47.0, 48.0, 49.0, 50.0, 51.0, 52.0, 53.0, 54.0},
         -2.0471152865044078, 68.522250678448095, 0.044483718186165881},
        {"scale_1000",
         {2100.0, 2500.0, 2300.0},
         {3000.0, 3200.0, 3100.0},
         -6.1967733539318670, 2.9411764705882353, 0.0089706865015230273},
        {"fractional",
         {0.001, 0.002, 0.0015, 0.0012},
         {0.0011, 0.0019, 0.0014, 0.0013},
         0.0, 5.6720959774170781, 1.0000000000000000},
        {"one_wide_one_tight",
         {5.0, 15.0, 10.0},
         {10.1, 10.2, 10.0, 9.9, 9.8},
         0.0, 2.0024003595679353, 1.0000000000000000},
        {"b_bigger",
         {4.0, 4.2, 3.8},
         {6.5, 6.4, 6.6, 6.55},
         -20.408457919185735, 2.5524520491514987, 0.00067665333889794728},
        {"long_tail_counts",
         {12.0, 0.0, 3.0, 7.0, 1.0, 9.0, 2.0, 4.0, 6.0, 0.0},
         {1.0, 0.0, 2.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0},
         3.0119048086785139, 9.5527564406445469, 0.013738318248094482},
    };
    return cases;
}

struct TCdfPoint { double x; double df; double cdf; };

inline const std::vector<TCdfPoint>& t_cdf_reference_points() {
    static const std::vector<TCdfPoint> pts = {
        {2.0, 10.0, 0.96330598261462982},
        {0.5, 1.0, 0.64758361765043327},
        {-0.5, 1.0, 0.35241638234956673},
        {1.0, 2.0, 0.78867513459481288},
        {-3.0, 5.0, 0.015049623948731287},
        {4.5, 3.0, 0.98975479382777330},
        {0.1, 30.0, 0.53949519410486442},
        {-2.2281388519862735, 10.0, 0.025000000000000054},
        {1.959963984540054, 1000000.0, 0.97499986135238917},
        {6.0, 2.5, 0.99235913505723855},
        {-8.0, 12.0, 1.8799491123751286e-6},
        {0.0, 7.3, 0.50000000000000000},
        {2.7764451051977987, 4.0, 0.97500000000000011},
        {-1.6448536269514722, 100000.0, 0.050001571547591930},
        {12.0, 1.5, 0.99097898536298607},
        {3.1824463052842953, 3.0, 0.97500000000001124},
        {25.0, 40.0, 1.0000000000000000},
        {-30.0, 8.0, 8.2676283758948736e-10},
    };
    return pts;
}

struct TQuantilePoint { double coverage; double df; double upper; };

inline const std::vector<TQuantilePoint>& t_quantile_reference_points() {
    static const std::vector<TQuantilePoint> pts = {
        {0.95, 99.0, 1.9842169515864171},
        {0.95, 9.0, 2.2621571627982050},
        {0.99, 19.0, 2.8609346064649788},
        {0.95, 1.0, 12.706204736174693},
        {0.9, 49.5, 1.6762246352625445},
    };
    return pts;
}

}  // namespace isst_test
