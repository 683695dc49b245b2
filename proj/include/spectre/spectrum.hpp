// Singularity spectrum of a convenient nondegenerate germ from its Newton
// polyhedron: graded cone series per compact face, the alternating-sum
// spectrum formula (in both its cone form and its face-quotient form), the
// alternating-volume Milnor number, and summary statistics.
#pragma once

#include <vector>

#include "spectre/fracpoly.hpp"
#include "spectre/lattice.hpp"

namespace spectre {

// Lattice-point series of the closed cone over face `face_idx`: every
// nonnegative point whose carrier face is contained in it, graded by weight.
// The empty face contributes the origin alone, i.e. the series 1.
FracPoly poincare_cone(const NewtonPolyhedron& poly, int face_idx, const Rat& cutoff);

// Series of the relatively open cone: points whose carrier is exactly the
// given face.  Summing q_sigma over all subfaces recovers poincare_cone.
FracPoly q_sigma(const NewtonPolyhedron& poly, int face_idx, const Rat& cutoff);

// The spectrum as a fractional-exponent polynomial with nonnegative
// multiplicities supported in (0, vars).  Computed as the alternating sum
// over compact faces (plus the empty face) of (1-t)^k(sigma) times the
// closed-cone series; everything outside (0, vars) must cancel exactly and
// a failure to do so raises InternalCancellationFailure.
FracPoly steenbrink_spectrum(const Support& s);

// Same value, computed through the inclusion-exclusion of face quotient
// series ((1-t)^d * cone series, alternating over subfaces) instead of raw
// cone series.  Agreement with steenbrink_spectrum is exercised by tests.
FracPoly steenbrink_spectrum_q(const Support& s);

// Milnor number as the alternating sum of scaled coordinate-subspace
// volumes; raises NonIntegerResult if the sum is not a nonnegative integer.
long long milnor_kouchnirenko(const NewtonPolyhedron& poly);

// Milnor number of the diagram scaled by `scale`, predicted from the base
// diagram's volume vector: sum over j of (-1)^(vars-j) j! scale^j V_j with
// V_0 = 1.  Must agree with milnor_kouchnirenko on the scaled support.
long long milnor_scaling_polynomial(const std::vector<Rat>& volumes, int vars, long long scale);

// Expanded view of a spectrum: exponents with multiplicity, ascending.
struct SpectrumStats {
    int vars = 0;             // number of variables; exponents lie in (0, vars)
    long long mu = 0;         // total multiplicity
    std::vector<Rat> alphas;  // ascending, one entry per multiplicity unit

    // #{ i : alphas[i] <= r }
    long long count_leq(const Rat& r) const;
};

SpectrumStats spectrum_stats(const FracPoly& spectrum, int vars);

// Exponent multiset invariant under a -> vars - a.
bool spectrum_symmetric(const SpectrumStats& st);

// Variance bound around the midpoint vars/2: lhs = mean squared deviation,
// rhs = (spread)/12; `holds` when lhs <= rhs.
struct VarianceCheck {
    Rat lhs, rhs;
    bool holds = false;
};
VarianceCheck variance_check(const SpectrumStats& st);

}  // namespace spectre
