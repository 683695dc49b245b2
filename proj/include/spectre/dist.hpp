#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spectre/lattice.hpp"
#include "spectre/rational.hpp"
#include "spectre/spectrum.hpp"

namespace spectre {

// Density of the sum of m independent Uniform(0,1) variables at s; exact.
// Domain: s in [0, m].
Rat ih_pdf(int m, const Rat& s);

// Distribution function of the same sum at r; exact.  Domain: r in [0, m].
Rat ih_cdf(int m, const Rat& r);

// Discrepancy between the limiting distribution and the normalized counting
// function of the spectrum: ih_cdf(vars, r) minus (1/mu) * #{alpha <= r}.
// Domain: r in [0, vars].
Rat phi_f(const SpectrumStats& st, const Rat& r);

// Fourier transform of the Uniform(0,1) density: exp(pi*i*t) * sinc(pi*t).
std::complex<double> fourier_indicator(double t);

// Fourier transform of the m-fold uniform sum density.
std::complex<double> fourier_n(int m, double t);

// Normalized exponential sum of the spectrum: (1/mu) * sum exp(2*pi*i*t*alpha).
std::complex<double> chi(const SpectrumStats& st, double t);

// Weight-w interpolation kernel w*(1 - e^{2*pi*i*t}) / (1 - e^{2*pi*i*t*w}).
// Equals 1 identically at w = 1.  Domain: w in (0, 1]; t*w must not be an
// integer (the denominator vanishes there).
std::complex<double> lemma9_kernel(double w, double t);

// Kolmogorov-Smirnov distance between the spectrum's empirical distribution
// and the m-fold uniform sum, as an exact rational (the supremum is attained
// at a jump of the empirical distribution, from one side or the other).
Rat ks_distance_exact(const SpectrumStats& st, int m);

// Same supremum rounded to double.
double ks_distance(const SpectrumStats& st, int m);

// Largest pointwise gap |chi(t) - fourier_n(m, t)| over the given grid.
double fourier_distance(const SpectrumStats& st, int m, const std::vector<double>& grid);

// 201 equally spaced points covering [-5, 5].
std::vector<double> default_fourier_grid();

struct ConvergenceRow {
    long long scale = 1;
    long long mu = 0;
    double distance = 0.0;
};

// Scale the diagram by each factor, recompute the spectrum, and measure its
// distance to the limiting distribution with the chosen metric ("ks" or
// "fourier").  Each row's Milnor number is cross-checked against the volume
// polynomial of the base diagram; a mismatch aborts the sweep.
std::vector<ConvergenceRow> convergence_sweep(const Support& base,
                                              const std::vector<long long>& scales,
                                              const std::string& metric);

}  // namespace spectre
