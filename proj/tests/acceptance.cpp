// Release gate for the library: ten end-to-end checks, each printed as a
// single [PASS]/[FAIL] line.  Exits nonzero if any check fails.  Tolerances
// and budgets are pinned here on purpose — loosening them is a release
// decision, not a code fix.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <spectre/curve.hpp>
#include <spectre/dist.hpp>
#include <spectre/error.hpp>
#include <spectre/lattice.hpp>
#include <spectre/spectrum.hpp>

#include "numeric_oracles.hpp"

namespace {

using namespace spectre;

// ---------------------------------------------------------------------------
// harness

int g_failures = 0;

struct CheckFailure {
    std::string detail;
};

[[noreturn]] void reject(std::string detail) { throw CheckFailure{std::move(detail)}; }

void require(bool ok, const std::string& detail) {
    if (!ok) reject(detail);
}

void run(int id, const std::function<std::string()>& body) {
    try {
        std::printf("[PASS] criterion %d: %s\n", id, body().c_str());
    } catch (const CheckFailure& f) {
        std::printf("[FAIL] criterion %d: %s\n", id, f.detail.c_str());
        ++g_failures;
    } catch (const std::exception& e) {
        std::printf("[FAIL] criterion %d: unexpected error: %s\n", id, e.what());
        ++g_failures;
    }
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

// Every spectrum computed anywhere in this suite lands here so the final
// criterion can re-examine all of them.
std::vector<SpectrumStats> g_spectra;

SpectrumStats register_spectrum(const FracPoly& spectrum, int vars) {
    SpectrumStats st = spectrum_stats(spectrum, vars);
    g_spectra.push_back(st);
    return st;
}

SpectrumStats register_support(const Support& s) {
    return register_spectrum(steenbrink_spectrum(s), s.vars);
}

std::map<Rat, long long> to_map(const FracPoly& p) {
    std::map<Rat, long long> m;
    for (const auto& [expo, count] : p.sorted_terms()) m[expo] += count;
    return m;
}

Support two_var_power(long long p, long long q) {
    return Support::make(2, {{p, 0}, {0, q}});
}

std::string tuple_str(const std::vector<long long>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + ")";
}

// The thirty diagrams used by the consistency criteria: two- and
// three-variable, single- and multi-facet.
std::vector<Support> assorted_diagrams() {
    std::vector<Support> out;
    const std::vector<std::vector<long long>> powers2 = {
        {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5},
        {4, 4}, {5, 5}, {2, 9}, {3, 9}, {6, 7}, {8, 9}};
    for (const auto& d : powers2) out.push_back(two_var_power(d[0], d[1]));
    out.push_back(Support::make(2, {{2, 0}, {1, 1}, {0, 3}}));
    out.push_back(Support::make(2, {{3, 0}, {1, 1}, {0, 4}}));
    out.push_back(Support::make(2, {{4, 0}, {2, 1}, {0, 4}}));
    out.push_back(Support::make(2, {{4, 0}, {1, 2}, {0, 5}}));
    out.push_back(Support::make(2, {{5, 0}, {2, 2}, {0, 6}}));
    out.push_back(Support::make(2, {{6, 0}, {3, 1}, {0, 5}}));
    const std::vector<std::vector<long long>> powers3 = {
        {2, 2, 2}, {2, 2, 3}, {2, 3, 4}, {3, 3, 3},
        {2, 2, 7}, {2, 4, 4}, {3, 3, 5}, {2, 3, 5}};
    for (const auto& d : powers3)
        out.push_back(Support::make(3, {{d[0], 0, 0}, {0, d[1], 0}, {0, 0, d[2]}}));
    out.push_back(Support::make(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 0}}));
    out.push_back(Support::make(3, {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}}));
    out.push_back(Support::make(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 6}, {1, 1, 1}}));
    out.push_back(Support::make(3, {{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {2, 1, 1}}));
    return out;
}

// ---------------------------------------------------------------------------
// criteria

// Two-variable power diagrams against the closed-form exponent multiset
// {i/p + j/q : 1 <= i < p, 1 <= j < q}; exact rationals, 10 s budget.
std::string criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    int pairs = 0;
    for (long long p = 2; p <= 9; ++p)
        for (long long q = p; q <= 9; ++q) {
            const FracPoly spectrum = steenbrink_spectrum(two_var_power(p, q));
            register_spectrum(spectrum, 2);
            std::map<Rat, long long> oracle;
            for (long long i = 1; i < p; ++i)
                for (long long j = 1; j < q; ++j) ++oracle[Rat(i, p) + Rat(j, q)];
            require(to_map(spectrum) == oracle,
                    "exponent multiset differs from the closed form for powers (" +
                        std::to_string(p) + "," + std::to_string(q) + ")");
            ++pairs;
        }
    const double t = seconds_since(start);
    require(pairs == 36, "expected 36 pairs, saw " + std::to_string(pairs));
    require(t < 10.0, "ran over the 10 s budget: " + secs(t));
    return "36 two-variable power diagrams match the closed-form multiset exactly, " + secs(t);
}

// Staircase data for generators (5,9): mu = 32, and the 21 jump abscissae
// are (X+14)/45 for the semigroup elements X <= 36, with ordinates k/32.
std::string criterion_2() {
    const CurveData c = curve_from_generators({5, 9});
    require(c.mu == 32, "mu for generators (5,9) is " + std::to_string(c.mu) + ", expected 32");
    const std::vector<long long> expected_x = {0,  5,  9,  10, 14, 15, 18, 19, 20, 23, 24,
                                               25, 27, 28, 29, 30, 32, 33, 34, 35, 36};
    const std::vector<long long> got = staircase_elements(c, c.mu + c.gens[0] - 1);
    require(got == expected_x, "staircase jump positions differ from the reference list");
    for (std::size_t k = 0; k < got.size(); ++k) {
        const Rat abscissa = Rat(got[k] + 14, 45);
        require(abscissa > 0 && abscissa <= Rat(10, 9), "jump abscissa out of range");
        const Rat ordinate = Rat(static_cast<long long>(k) + 1, 32);
        require(ordinate <= Rat(21, 32), "jump ordinate out of range");
    }
    require(Rat(expected_x.front() + 14, 45) == lct(c), "first jump is not the log canonical threshold");
    require(Rat(expected_x.back() + 14, 45) == Rat(10, 9), "last jump abscissa is not 10/9");
    return "mu = 32 and all 21 staircase jumps at (X+14)/45 with ordinates k/32 reproduced exactly";
}

// Spectrum size equals the alternating-volume count on thirty diagrams, and
// the two plane-branch Milnor formulas agree on every valid tuple with at
// most three generator pairs and generators <= 40.
std::string criterion_3() {
    const std::vector<Support> diagrams = assorted_diagrams();
    require(diagrams.size() == 30, "diagram list size drifted");
    for (const Support& s : diagrams) {
        const NewtonPolyhedron poly = NewtonPolyhedron::build(s);
        const SpectrumStats st = register_support(s);
        const long long mu = milnor_kouchnirenko(poly);
        require(st.mu == mu, "spectrum has " + std::to_string(st.mu) + " terms but the volume count is " +
                                 std::to_string(mu));
    }
    long long tuples = 0;
    std::vector<long long> by_g;
    for (int g = 1; g <= 3; ++g) {
        long long n = 0;
        for (const auto& gens : curve_tuples(g, 40)) {
            const CurveData c = curve_from_generators(gens);
            require(milnor_zariski(c) == milnor_acampo(c),
                    "Milnor formulas disagree for generators " + tuple_str(gens));
            ++n;
        }
        by_g.push_back(n);
        tuples += n;
    }
    return "30 diagrams: term count = volume count; Milnor formulas agree on all " +
           std::to_string(tuples) + " tuples (by pairs: " + std::to_string(by_g[0]) + "/" +
           std::to_string(by_g[1]) + "/" + std::to_string(by_g[2]) + ", generators <= 40)";
}

// One-pair sweep 2 <= p < q <= 50, coprime: the discrepancy at the log
// canonical threshold is positive except exactly at (2,3) and (2,5), with
// pinned values; 5 s budget.
std::string criterion_4() {
    const auto start = std::chrono::steady_clock::now();
    long long pairs = 0;
    std::vector<std::pair<std::vector<long long>, Rat>> exceptions;
    for (const auto& gens : curve_tuples(1, 50)) {
        const CurveData c = curve_from_generators(gens);
        const Rat phi = phi_at_lct(c);
        if (!(phi > 0)) exceptions.emplace_back(gens, phi);
        ++pairs;
    }
    const double t = seconds_since(start);
    require(pairs > 0, "sweep enumerated no pairs");
    require(exceptions.size() == 2, "expected exactly 2 exceptions, found " +
                                        std::to_string(exceptions.size()));
    require(exceptions[0].first == std::vector<long long>{2, 3} && exceptions[0].second == Rat(-11, 72),
            "first exception is " + tuple_str(exceptions[0].first) + " with value " +
                frac_string(exceptions[0].second) + ", expected (2,3) with -11/72");
    require(exceptions[1].first == std::vector<long long>{2, 5} && exceptions[1].second == Rat(-1, 200),
            "second exception is " + tuple_str(exceptions[1].first) + " with value " +
                frac_string(exceptions[1].second) + ", expected (2,5) with -1/200");
    require(t < 5.0, "ran over the 5 s budget: " + secs(t));
    return "all " + std::to_string(pairs) +
           " coprime pairs positive except (2,3) -> -11/72 and (2,5) -> -1/200, " + secs(t);
}

// Discrepancy at the largest spectral number below one: the closed form
// -1/(2 p^2 q^2) must be negative for every swept pair, and must agree with
// the definitional evaluation (1/2)(1 - 1/(pq))^2 - 1/2.
std::string criterion_5() {
    long long pairs = 0;
    std::string mismatch;
    for (const auto& gens : curve_tuples(1, 50)) {
        const CurveData c = curve_from_generators(gens);
        const long long d = c.beta[0] * c.beta[1];
        const Rat closed = phi_at_top(c);
        require(closed == Rat(-1, 2 * d * d), "closed form drifted for generators " + tuple_str(gens));
        require(closed < 0, "closed form is not negative for generators " + tuple_str(gens));
        // definitional evaluation with the gap count measured, not assumed
        const SemigroupView sv = semigroup_view(c, c.conductor);
        const Rat top = 1 - Rat(1, d);
        const Rat definitional = top * top / 2 - Rat(static_cast<long long>(sv.gaps.size()), c.mu);
        require(definitional == phi_at_top_definition(c),
                "definitional helper drifted for generators " + tuple_str(gens));
        if (mismatch.empty() && definitional != closed)
            mismatch = "definitional evaluation disagrees with the closed form, e.g. generators " +
                       tuple_str(gens) + ": definition gives " + frac_string(definitional) +
                       ", closed form gives " + frac_string(closed) +
                       " (closed form negative for all pairs; the spectrum-based value equals the definition)";
        ++pairs;
    }
    // the definitional value is exactly what the spectrum itself gives
    for (const auto& [p, q] : {std::pair<long long, long long>{2, 3}, {5, 9}}) {
        const CurveData c = curve_from_generators({p, q});
        const SpectrumStats st = register_support(two_var_power(p, q));
        const Rat top = 1 - Rat(1, p * q);
        require(phi_f(st, top) == phi_at_top_definition(c),
                "spectrum evaluation differs from the definitional formula for generators (" +
                    std::to_string(p) + "," + std::to_string(q) + ")");
    }
    require(mismatch.empty(), mismatch);
    return "closed form -1/(2 p^2 q^2) negative and equal to the definitional evaluation on all " +
           std::to_string(pairs) + " pairs";
}

// Two-pair exhaustive sweep with generators <= 30: no new sign exceptions,
// and the structural inequalities checked inside the sweep hold throughout.
std::string criterion_6() {
    const SweepResult res = thm34_sweep(2, 30);
    require(res.violations.empty(),
            std::to_string(res.violations.size()) + " structural violations, first: " +
                (res.violations.empty() ? "" : res.violations.front()));
    require(res.exceptions.size() == 2, "expected only the two one-pair exceptions, found " +
                                            std::to_string(res.exceptions.size()));
    require(res.exceptions[0].gens == std::vector<long long>{2, 3} &&
                res.exceptions[1].gens == std::vector<long long>{2, 5},
            "exception tuples drifted");
    return std::to_string(res.instances) + " tuples (" + std::to_string(res.instances_by_g[0]) +
           " one-pair, " + std::to_string(res.instances_by_g[1]) +
           " two-pair): inequalities hold, no new sign exceptions";
}

// Scaling the cusp diagram drives the spectrum toward its continuous limit:
// the sup-distance to the two-fold uniform law strictly decreases along
// scales 1..32 and ends below 0.05; the transform-grid distance decreases
// along the same sweep; 30 s budget.
std::string criterion_7() {
    const auto start = std::chrono::steady_clock::now();
    const Support cusp = two_var_power(2, 3);
    const std::vector<long long> scales = {1, 2, 4, 8, 16, 32};

    const auto ks_rows = convergence_sweep(cusp, scales, "ks");
    for (std::size_t i = 1; i < ks_rows.size(); ++i)
        require(ks_rows[i].distance < ks_rows[i - 1].distance,
                "sup-distance failed to decrease at scale " + std::to_string(ks_rows[i].scale));
    require(ks_rows.back().distance < 0.05,
            "final sup-distance " + std::to_string(ks_rows.back().distance) + " is not below 0.05");

    const auto f_rows = convergence_sweep(cusp, scales, "fourier");
    for (std::size_t i = 1; i < f_rows.size(); ++i)
        require(f_rows[i].distance < f_rows[i - 1].distance,
                "transform distance failed to decrease at scale " + std::to_string(f_rows[i].scale));

    for (long long scale : scales) register_support(scale_support(cusp, scale));

    const double t = seconds_since(start);
    require(t < 30.0, "ran over the 30 s budget: " + secs(t));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", ks_rows.back().distance);
    return "sup-distance strictly decreases over scales 1..32 down to " + std::string(buf) +
           ", transform distance decreases too, " + secs(t);
}

// The alternating-volume polynomial predicts the Milnor number of every
// scaled diagram: sum over j of (-1)^(vars-j) j! w^j V_j for w = 1..32 on
// five diagrams, including the closed form (2w-1)(3w-1) for the cusp.
std::string criterion_8() {
    const std::vector<Support> bases = {
        two_var_power(2, 3),
        two_var_power(3, 4),
        Support::make(2, {{2, 0}, {1, 1}, {0, 3}}),
        Support::make(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}),
        Support::make(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 0}}),
    };
    for (const Support& base : bases) {
        const std::vector<Rat> vols = NewtonPolyhedron::build(base).volumes();
        for (long long w = 1; w <= 32; ++w) {
            const long long predicted = milnor_scaling_polynomial(vols, base.vars, w);
            const long long direct = milnor_kouchnirenko(NewtonPolyhedron::build(scale_support(base, w)));
            require(predicted == direct,
                    "polynomial predicts " + std::to_string(predicted) + " but the scaled diagram gives " +
                        std::to_string(direct) + " at scale " + std::to_string(w));
        }
    }
    const std::vector<Rat> cusp_vols = NewtonPolyhedron::build(two_var_power(2, 3)).volumes();
    for (long long w = 1; w <= 32; ++w)
        require(milnor_scaling_polynomial(cusp_vols, 2, w) == (2 * w - 1) * (3 * w - 1),
                "cusp family closed form fails at scale " + std::to_string(w));
    return "volume polynomial matches the scaled-diagram count for scales 1..32 on 5 diagrams; "
           "cusp family equals (2w-1)(3w-1)";
}

// Distribution utilities: the piecewise-polynomial density matches a numeric
// self-convolution to 1e-9 at 100 points per fold count, the distribution
// function is exactly symmetric, and the interpolation kernel error shrinks
// with its weight parameter.
std::string criterion_9() {
    for (int m = 1; m <= 4; ++m)
        for (int j = 1; j <= 100; ++j) {
            const Rat s(static_cast<long long>(2 * j - 1) * m, 200);
            const double closed = to_double(ih_pdf(m, s));
            const double numeric = testutil::conv_density(m, to_double(s));
            require(std::abs(closed - numeric) <= 1e-9,
                    "density mismatch at m = " + std::to_string(m) + ", point " + std::to_string(j));
        }
    for (int m = 1; m <= 4; ++m)
        for (long long j = 0; j <= 97; ++j) {
            const Rat r(j * m, 97);
            require(ih_cdf(m, r) + ih_cdf(m, Rat(m) - r) == 1,
                    "distribution symmetry fails at m = " + std::to_string(m));
        }
    for (double t : {0.1, 0.5, 0.9}) {
        const double coarse = std::abs(lemma9_kernel(1e-2, t) - fourier_indicator(t));
        const double fine = std::abs(lemma9_kernel(1e-4, t) - fourier_indicator(t));
        require(fine < coarse, "kernel error did not shrink with the weight at t = " + std::to_string(t));
    }
    return "density matches numeric convolution to 1e-9 (400 points), distribution symmetry exact, "
           "kernel error shrinks with its weight";
}

// Every spectrum computed by this suite is symmetric about vars/2 and
// satisfies the variance bound; the bound is attained with equality on the
// cusp, where both sides are 1/36.
std::string criterion_10() {
    require(!g_spectra.empty(), "no spectra were registered");
    for (const SpectrumStats& st : g_spectra) {
        require(spectrum_symmetric(st), "a registered spectrum is not symmetric");
        const VarianceCheck vc = variance_check(st);
        require(vc.holds, "variance bound fails: lhs " + frac_string(vc.lhs) + " vs rhs " +
                              frac_string(vc.rhs));
    }
    const SpectrumStats cusp = register_support(two_var_power(2, 3));
    const VarianceCheck vc = variance_check(cusp);
    require(vc.lhs == Rat(1, 36) && vc.rhs == Rat(1, 36),
            "cusp variance bound is not an equality at 1/36: lhs " + frac_string(vc.lhs) +
                ", rhs " + frac_string(vc.rhs));
    return "all " + std::to_string(g_spectra.size()) +
           " computed spectra symmetric with the variance bound holding; cusp attains equality 1/36";
}

}  // namespace

int main() {
    run(1, criterion_1);
    run(2, criterion_2);
    run(3, criterion_3);
    run(4, criterion_4);
    run(5, criterion_5);
    run(6, criterion_6);
    run(7, criterion_7);
    run(8, criterion_8);
    run(9, criterion_9);
    run(10, criterion_10);
    return g_failures == 0 ? 0 : 1;
}
