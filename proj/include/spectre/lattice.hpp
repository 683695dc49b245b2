// Newton polyhedra of convenient exponent supports: exact facet
// computation, the compact face poset, the piecewise-linear weight
// function, lattice-point enumeration with carrier faces, and the
// coordinate-subspace volume vector.
#pragma once

#include <cstdint>
#include <vector>

#include "spectre/error.hpp"
#include "spectre/rational.hpp"

namespace spectre {

// Validated exponent support of a germ in `vars` variables (1..4).
// A support is *convenient* when every coordinate axis carries a point,
// which guarantees the weight function vanishes only at the origin.
struct Support {
    int vars = 0;
    std::vector<std::vector<long long>> points;  // lex-sorted, distinct, componentwise >= 0

    // Validates and canonicalizes; throws EmptySupport / NegativeCoordinate /
    // DuplicatePoint / NotConvenient / DimensionUnsupported / OutOfDomain.
    static Support make(int vars, std::vector<std::vector<long long>> points);
};

// Componentwise scaling of all exponent vectors by a positive integer.
Support scale_support(const Support& s, long long factor);

// A compact face of the Newton polyhedron.  The face with d == 0 is the
// adjoined empty face; every other face is spanned by its vertex set.
struct Face {
    std::uint32_t vertex_mask = 0;  // bit i set <=> hull vertex i lies on the face
    std::vector<int> vertex_ids;    // ascending indices into vertices()
    int dim = -1;                   // affine dimension (-1 for the empty face)
    int d = 0;                      // dim + 1; the grading used by the spectrum sums
    int k = 0;                      // dimension of the smallest coordinate subspace containing the face
};

// A nonnegative lattice point classified by the enumeration: its weight
// (as weight_num / NewtonPolyhedron::weight_scale()) and the face whose
// relatively open cone contains it (by vertex mask; 0 = the origin).
struct WeightedPoint {
    long long weight_num = 0;
    std::uint32_t carrier = 0;
};

class NewtonPolyhedron {
public:
    // Computes the hull data for a validated support.  For convenient
    // supports the polyhedron is cut out exactly by the coordinate
    // half-spaces together with facets whose normals are strictly
    // positive; both families are recovered here by exact rational
    // elimination over vertex subsets.
    static NewtonPolyhedron build(const Support& s);

    int vars() const { return support_.vars; }
    const Support& support() const { return support_; }

    // Strictly positive facet functionals a_F, normalized to value 1 on
    // the facet; every support point satisfies <a_F, p> >= 1.
    const std::vector<std::vector<Rat>>& facet_functionals() const { return facets_; }

    // Hull vertices of the diagram (a subset of the support), lex-sorted.
    const std::vector<std::vector<long long>>& vertices() const { return vertices_; }

    // Compact faces plus the empty face, sorted by (d, vertex ids); the
    // empty face is always faces()[0].  Partial order = vertex-set inclusion.
    const std::vector<Face>& faces() const { return faces_; }
    bool face_le(int tau, int sigma) const {
        std::uint32_t t = faces_[static_cast<std::size_t>(tau)].vertex_mask;
        return (t & faces_[static_cast<std::size_t>(sigma)].vertex_mask) == t;
    }
    // Index of the compact face with the given vertex mask, or -1.
    int face_index_of_mask(std::uint32_t mask) const;

    // Common denominator of all facet functional entries.
    long long weight_scale() const { return weight_scale_; }
    // weight_scale() * facet_functionals(), exact integer rows.
    const std::vector<std::vector<long long>>& facet_weights() const { return facet_weights_; }

    // min over facets of <a_F, x>; zero exactly at the origin.
    Rat newton_weight(const std::vector<long long>& x) const;

    // All lattice points with weight < cutoff, in lexicographic order,
    // each tagged with its carrier face.  Runs chunked across threads
    // (deterministic output, capped by SPECTRE_THREADS).
    std::vector<WeightedPoint> weighted_points(const Rat& cutoff) const;

    // Volume under the diagram (between the origin and the compact faces),
    // via a pulling triangulation of each facet; exact.
    Rat top_volume() const;

    // V_1..V_vars where V_k sums the top volumes of the diagram restricted
    // to every k-dimensional coordinate subspace.
    std::vector<Rat> volumes() const;

private:
    NewtonPolyhedron() = default;

    std::vector<std::vector<int>> pulling_triangulation(int face_idx,
                                                        std::vector<std::vector<std::vector<int>>>& memo) const;

    Support support_;
    std::vector<std::vector<Rat>> facets_;
    std::vector<std::vector<long long>> facet_weights_;
    long long weight_scale_ = 1;
    std::vector<std::vector<long long>> vertices_;
    std::vector<Face> faces_;
    std::vector<std::uint32_t> facet_masks_;  // vertex mask per facet
    std::vector<std::uint32_t> wall_masks_;   // vertex mask per coordinate wall
};

}  // namespace spectre
