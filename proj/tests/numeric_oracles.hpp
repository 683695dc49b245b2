// Independent numeric checks used by the test suites: an m-fold
// self-convolution of the uniform density and a direct Fourier integral.
// Both avoid the closed forms they are meant to verify.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace testutil {

// Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr double kG3Nodes[3] = {-0.774596669241483377, 0.0, 0.774596669241483377};
inline constexpr double kG3Weights[3] = {0.555555555555555556, 0.888888888888888889, 0.555555555555555556};

inline constexpr double kG7Nodes[7] = {-0.949107912342758525, -0.741531185599394440, -0.405845151377397167, 0.0,
                                       0.405845151377397167,  0.741531185599394440,  0.949107912342758525};
inline constexpr double kG7Weights[7] = {0.129484966168869693, 0.279705391489276668, 0.381830050505118945,
                                         0.417959183673469388, 0.381830050505118945, 0.279705391489276668,
                                         0.129484966168869693};

// Density of the m-fold sum of Uniform(0,1), evaluated by recursive
// quadrature of N_m(s) = integral of N_{m-1} over [s-1, s].  Panels are split
// at the integer kinks, where the integrand is a polynomial of degree m-2;
// 3-point Gauss is exact there for m <= 6, so the only error is rounding.
inline double conv_density(int m, double s) {
    if (s < 0.0 || s > m) return 0.0;
    if (m == 1) return 1.0;
    std::vector<double> cuts{s - 1.0, s};
    for (long long k = static_cast<long long>(std::ceil(s - 1.0)); k < s; ++k) {
        const double kk = static_cast<double>(k);
        if (kk > s - 1.0 && kk < s) cuts.push_back(kk);
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int j = 0; j < 3; ++j) total += half * kG3Weights[j] * conv_density(m - 1, mid + half * kG3Nodes[j]);
    }
    return total;
}

// integral of e^{2 pi i t s} * density(s) ds over [0, m], composite 7-point
// Gauss on panels an eighth of a unit wide.
template <typename Density>
std::complex<double> fourier_integral(int m, double t, Density&& density) {
    const int panels = 8 * m;
    const double width = static_cast<double>(m) / panels;
    std::complex<double> total{0.0, 0.0};
    for (int p = 0; p < panels; ++p) {
        const double a = p * width;
        const double mid = a + 0.5 * width, half = 0.5 * width;
        for (int j = 0; j < 7; ++j) {
            const double s = mid + half * kG7Nodes[j];
            total += half * kG7Weights[j] * std::polar(1.0, 2.0 * std::numbers::pi * t * s) * density(s);
        }
    }
    return total;
}

}  // namespace testutil
