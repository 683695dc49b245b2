#include "spectre/dist.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>

#include "spectre/error.hpp"

namespace spectre {

namespace {

constexpr double kPi = std::numbers::pi;

// Alternating binomial sum shared by the density (power m-1, weight (m-1)!)
// and the distribution function (power m, weight m!).
Rat uniform_sum_poly(int m, const Rat& x, int power, const char* what) {
    if (m < 1)
        fail(errc::out_of_domain, "fold count m must be at least 1");
    if (x < 0 || x > m)
        fail(errc::out_of_domain, what);
    Rat acc = 0;
    Int binom = 1;
    const long long top = to_ll(rat_floor(x));
    for (long long k = 0; k <= top; ++k) {
        if (k > 0) {
            binom *= (m - k + 1);
            binom /= k;
        }
        Rat term = Rat(binom) * rat_pow(x - k, power);
        acc += (k % 2 == 0) ? term : -term;
    }
    Int fact = 1;
    for (int i = 2; i <= power; ++i) fact *= i;
    return acc / Rat(fact);
}

}  // namespace

Rat ih_pdf(int m, const Rat& s) {
    return uniform_sum_poly(m, s, m - 1, "density argument lies outside [0, m]");
}

Rat ih_cdf(int m, const Rat& r) {
    return uniform_sum_poly(m, r, m, "distribution argument lies outside [0, m]");
}

Rat phi_f(const SpectrumStats& st, const Rat& r) {
    if (st.mu < 1)
        fail(errc::out_of_domain, "spectrum is empty");
    if (r < 0 || r > st.vars)
        fail(errc::out_of_domain, "argument lies outside [0, vars]");
    return ih_cdf(st.vars, r) - Rat(st.count_leq(r), st.mu);
}

std::complex<double> fourier_indicator(double t) {
    if (t == 0.0) return {1.0, 0.0};
    const double pt = kPi * t;
    return std::polar(1.0, pt) * (std::sin(pt) / pt);
}

std::complex<double> fourier_n(int m, double t) {
    if (m < 1)
        fail(errc::out_of_domain, "fold count m must be at least 1");
    const std::complex<double> base = fourier_indicator(t);
    std::complex<double> acc{1.0, 0.0};
    for (int i = 0; i < m; ++i) acc *= base;
    return acc;
}

std::complex<double> chi(const SpectrumStats& st, double t) {
    if (st.mu < 1)
        fail(errc::out_of_domain, "spectrum is empty");
    std::complex<double> acc{0.0, 0.0};
    for (const Rat& a : st.alphas)
        acc += std::polar(1.0, 2.0 * kPi * t * to_double(a));
    return acc / static_cast<double>(st.mu);
}

std::complex<double> lemma9_kernel(double w, double t) {
    if (!(w > 0.0) || w > 1.0)
        fail(errc::out_of_domain, "weight w must lie in (0, 1]");
    const double tw = t * w;
    if (tw == std::floor(tw))
        fail(errc::pole_at_argument, "t*w is an integer, so the kernel denominator vanishes");
    if (w == 1.0) return {1.0, 0.0};
    const std::complex<double> one{1.0, 0.0};
    const std::complex<double> num = one - std::polar(1.0, 2.0 * kPi * t);
    const std::complex<double> den = one - std::polar(1.0, 2.0 * kPi * tw);
    return w * num / den;
}

Rat ks_distance_exact(const SpectrumStats& st, int m) {
    if (st.mu < 1)
        fail(errc::out_of_domain, "spectrum is empty");
    if (m < 1)
        fail(errc::out_of_domain, "fold count m must be at least 1");
    Rat best = 0;
    const Rat mu = st.mu;
    std::size_t i = 0;
    long long seen = 0;
    while (i < st.alphas.size()) {
        const Rat& a = st.alphas[i];
        std::size_t j = i;
        while (j < st.alphas.size() && st.alphas[j] == a) ++j;
        const Rat limit = ih_cdf(m, a);
        const Rat before = rat_abs(Rat(seen) / mu - limit);
        seen += static_cast<long long>(j - i);
        const Rat after = rat_abs(Rat(seen) / mu - limit);
        best = std::max(best, std::max(before, after));
        i = j;
    }
    return best;
}

double ks_distance(const SpectrumStats& st, int m) {
    return to_double(ks_distance_exact(st, m));
}

double fourier_distance(const SpectrumStats& st, int m, const std::vector<double>& grid) {
    if (grid.empty())
        fail(errc::out_of_domain, "evaluation grid is empty");
    double best = 0.0;
    for (double t : grid)
        best = std::max(best, std::abs(chi(st, t) - fourier_n(m, t)));
    return best;
}

std::vector<double> default_fourier_grid() {
    std::vector<double> grid;
    grid.reserve(201);
    for (int i = 0; i <= 200; ++i)
        grid.push_back(static_cast<double>(i - 100) / 20.0);
    return grid;
}

std::vector<ConvergenceRow> convergence_sweep(const Support& base,
                                              const std::vector<long long>& scales,
                                              const std::string& metric) {
    if (metric != "ks" && metric != "fourier")
        fail(errc::out_of_domain, "metric must be \"ks\" or \"fourier\"");
    const NewtonPolyhedron base_poly = NewtonPolyhedron::build(base);
    const std::vector<Rat> base_vols = base_poly.volumes();
    std::vector<ConvergenceRow> rows;
    rows.reserve(scales.size());
    for (long long scale : scales) {
        const long long expected = milnor_scaling_polynomial(base_vols, base.vars, scale);
        const Support scaled = scale_support(base, scale);
        const FracPoly spectrum = steenbrink_spectrum(scaled);
        const SpectrumStats st = spectrum_stats(spectrum, base.vars);
        if (st.mu != expected)
            fail(errc::internal_cancellation,
                 "scaled spectrum has " + std::to_string(st.mu) + " terms but the volume polynomial predicts " +
                     std::to_string(expected));
        ConvergenceRow row;
        row.scale = scale;
        row.mu = st.mu;
        row.distance = (metric == "ks") ? ks_distance(st, base.vars)
                                        : fourier_distance(st, base.vars, default_fourier_grid());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace spectre
