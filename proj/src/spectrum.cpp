#include "spectre/spectrum.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

namespace spectre {
namespace {

// One enumeration pass shared by every per-face series: the open-cone
// series of each face, indexed like poly.faces().
std::vector<FracPoly> interior_series_by_face(const NewtonPolyhedron& poly, const Rat& cutoff) {
    std::unordered_map<std::uint32_t, int> by_mask;
    const auto& faces = poly.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].d == 0) continue;  // empty face shares mask 0 with nothing else
        by_mask.emplace(faces[i].vertex_mask, static_cast<int>(i));
    }
    std::vector<FracPoly> out(faces.size(), FracPoly(poly.weight_scale(), cutoff));
    for (const WeightedPoint& p : poly.weighted_points(cutoff)) {
        int idx;
        if (p.carrier == 0) {
            idx = 0;  // the origin sits in the cone of the empty face
        } else {
            auto it = by_mask.find(p.carrier);
            if (it == by_mask.end())
                fail(errc::internal_cancellation, "lattice point carrier does not correspond to a compact face");
            idx = it->second;
        }
        out[static_cast<std::size_t>(idx)].add_term(p.weight_num, 1);
    }
    return out;
}

FracPoly sum_over_subfaces(const NewtonPolyhedron& poly, const std::vector<FracPoly>& interior, int face_idx) {
    FracPoly acc(interior[static_cast<std::size_t>(face_idx)].den(), interior[static_cast<std::size_t>(face_idx)].cutoff());
    for (std::size_t t = 0; t < poly.faces().size(); ++t)
        if (poly.face_le(static_cast<int>(t), face_idx)) acc += interior[t];
    return acc;
}

void check_spectrum_window(const FracPoly& spec, int vars) {
    for (const auto& [e, c] : spec.raw_terms()) {
        Rat expo = spec.exponent(e);
        if (expo <= 0)
            fail(errc::internal_cancellation, "spectrum term at exponent " + frac_string(expo) + " failed to cancel");
        if (expo >= vars)
            fail(errc::internal_cancellation, "spectrum term at exponent " + frac_string(expo) + " survived past the upper end");
        if (c < 0)
            fail(errc::internal_cancellation, "negative multiplicity " + std::to_string(c) + " at exponent " + frac_string(expo));
    }
}

FracPoly clamp_to_spectrum_window(const FracPoly& raw, int vars) {
    FracPoly out(raw.den(), Rat(vars));
    for (const auto& [e, c] : raw.raw_terms()) out.add_term(e, c);
    return out;
}

}  // namespace

FracPoly poincare_cone(const NewtonPolyhedron& poly, int face_idx, const Rat& cutoff) {
    if (cutoff <= 0) fail(errc::out_of_domain, "cutoff must be positive");
    if (face_idx < 0 || face_idx >= static_cast<int>(poly.faces().size()))
        fail(errc::out_of_domain, "face index out of range");
    auto interior = interior_series_by_face(poly, cutoff);
    return sum_over_subfaces(poly, interior, face_idx);
}

FracPoly q_sigma(const NewtonPolyhedron& poly, int face_idx, const Rat& cutoff) {
    if (cutoff <= 0) fail(errc::out_of_domain, "cutoff must be positive");
    if (face_idx < 0 || face_idx >= static_cast<int>(poly.faces().size()))
        fail(errc::out_of_domain, "face index out of range");
    return interior_series_by_face(poly, cutoff)[static_cast<std::size_t>(face_idx)];
}

FracPoly steenbrink_spectrum(const Support& s) {
    const NewtonPolyhedron poly = NewtonPolyhedron::build(s);
    const int n = poly.vars();
    // Work one unit past the spectrum window so the cancellation of the
    // boundary terms is verified rather than assumed.
    const Rat window(n + 1);
    const auto interior = interior_series_by_face(poly, window);

    FracPoly acc(poly.weight_scale(), window);
    for (std::size_t fi = 0; fi < poly.faces().size(); ++fi) {
        const Face& f = poly.faces()[fi];
        FracPoly term = sum_over_subfaces(poly, interior, static_cast<int>(fi)).times_one_minus_t_pow(f.k);
        if ((n - f.d) % 2 != 0) term.scale(-1);
        acc += term;
    }
    check_spectrum_window(acc, n);
    return clamp_to_spectrum_window(acc, n).normalized();
}

FracPoly steenbrink_spectrum_q(const Support& s) {
    const NewtonPolyhedron poly = NewtonPolyhedron::build(s);
    const int n = poly.vars();
    const Rat window(n + 1);
    const auto interior = interior_series_by_face(poly, window);

    // Artinian quotient series of each closed cone: (1-t)^d * cone series.
    std::vector<FracPoly> artin;
    artin.reserve(poly.faces().size());
    for (std::size_t fi = 0; fi < poly.faces().size(); ++fi)
        artin.push_back(
            sum_over_subfaces(poly, interior, static_cast<int>(fi)).times_one_minus_t_pow(poly.faces()[fi].d));

    // Interior part of each quotient series, by inclusion-exclusion over
    // subfaces (the sign is the face poset's Moebius function).
    std::vector<FracPoly> qt;
    qt.reserve(poly.faces().size());
    for (std::size_t fi = 0; fi < poly.faces().size(); ++fi) {
        FracPoly inner(poly.weight_scale(), window);
        for (std::size_t ti = 0; ti < poly.faces().size(); ++ti) {
            if (!poly.face_le(static_cast<int>(ti), static_cast<int>(fi))) continue;
            FracPoly term = artin[ti];
            if ((poly.faces()[fi].d - poly.faces()[ti].d) % 2 != 0) term.scale(-1);
            inner += term;
        }
        qt.push_back(std::move(inner));
    }

    // Double sum over pairs tau <= sigma; summing the interior parts over
    // the subfaces of sigma undoes the inversion above, which is what makes
    // this route agree with the plain cone-series form.
    FracPoly acc(poly.weight_scale(), window);
    for (std::size_t fi = 0; fi < poly.faces().size(); ++fi) {
        const Face& f = poly.faces()[fi];
        if (f.k < f.d) fail(errc::internal_cancellation, "face spans fewer coordinates than its dimension");
        FracPoly pair_sum(poly.weight_scale(), window);
        for (std::size_t ti = 0; ti < poly.faces().size(); ++ti)
            if (poly.face_le(static_cast<int>(ti), static_cast<int>(fi))) pair_sum += qt[ti];
        FracPoly term = pair_sum.times_one_minus_t_pow(f.k - f.d);
        if ((n - f.d) % 2 != 0) term.scale(-1);
        acc += term;
    }
    check_spectrum_window(acc, n);
    return clamp_to_spectrum_window(acc, n).normalized();
}

long long milnor_kouchnirenko(const NewtonPolyhedron& poly) {
    const int n = poly.vars();
    const std::vector<Rat> vols = poly.volumes();
    Rat acc = (n % 2 == 0) ? 1 : -1;  // the k = 0 term
    Int fact = 1;
    for (int k = 1; k <= n; ++k) {
        fact *= k;
        Rat term = Rat(fact) * vols[static_cast<std::size_t>(k - 1)];
        acc += ((n - k) % 2 == 0) ? term : -term;
    }
    if (rat_den(acc) != 1 || acc < 0)
        fail(errc::non_integer_result, "alternating volume sum is " + frac_string(acc) + ", not a nonnegative integer");
    return to_ll(rat_num(acc));
}

long long milnor_scaling_polynomial(const std::vector<Rat>& volumes, int vars, long long scale) {
    if (vars < 1 || static_cast<int>(volumes.size()) != vars)
        fail(errc::out_of_domain, "volume vector must have one entry per variable");
    if (scale < 1)
        fail(errc::out_of_domain, "scale factor must be a positive integer");
    Rat acc = (vars % 2 == 0) ? 1 : -1;  // j = 0 with V_0 = 1
    Int fact = 1;
    Int pw = 1;
    for (int j = 1; j <= vars; ++j) {
        fact *= j;
        pw *= scale;
        Rat term = Rat(fact * pw) * volumes[static_cast<std::size_t>(j - 1)];
        acc += ((vars - j) % 2 == 0) ? term : -term;
    }
    if (rat_den(acc) != 1 || acc < 0)
        fail(errc::non_integer_result, "scaled volume polynomial is " + frac_string(acc) + ", not a nonnegative integer");
    return to_ll(rat_num(acc));
}

long long SpectrumStats::count_leq(const Rat& r) const {
    return static_cast<long long>(std::upper_bound(alphas.begin(), alphas.end(), r) - alphas.begin());
}

SpectrumStats spectrum_stats(const FracPoly& spectrum, int vars) {
    SpectrumStats st;
    st.vars = vars;
    for (const auto& [e, c] : spectrum.raw_terms()) {
        Rat expo = spectrum.exponent(e);
        if (c <= 0 || expo <= 0 || expo >= vars)
            fail(errc::internal_cancellation, "spectrum has an invalid term at exponent " + frac_string(expo));
        for (long long i = 0; i < c; ++i) st.alphas.push_back(expo);
    }
    // map iteration is already exponent-ascending
    st.mu = static_cast<long long>(st.alphas.size());
    return st;
}

bool spectrum_symmetric(const SpectrumStats& st) {
    const Rat total(st.vars);
    for (std::size_t i = 0, j = st.alphas.size(); i < j; ++i)
        if (st.alphas[i] + st.alphas[j - 1 - i] != total) return false;
    return true;
}

VarianceCheck variance_check(const SpectrumStats& st) {
    VarianceCheck vc;
    if (st.mu <= 0) fail(errc::out_of_domain, "variance bound needs a nonempty spectrum");
    const Rat center(st.vars, 2);
    Rat acc = 0;
    for (const Rat& a : st.alphas) acc += (a - center) * (a - center);
    vc.lhs = acc / st.mu;
    vc.rhs = (st.alphas.back() - st.alphas.front()) / 12;
    vc.holds = vc.lhs <= vc.rhs;
    return vc;
}

}  // namespace spectre
