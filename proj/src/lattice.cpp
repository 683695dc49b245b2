#include "spectre/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "spectre/parallel.hpp"

namespace spectre {
namespace {

// ---- small exact linear algebra -------------------------------------------

// Row rank by rational Gaussian elimination.
int rank_rat(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        const Rat inv = m[static_cast<std::size_t>(rank)][c];
        for (std::size_t r = pivot == static_cast<std::size_t>(rank) ? pivot + 1 : static_cast<std::size_t>(rank); r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
            const Rat f = m[r][c] / inv;
            for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[static_cast<std::size_t>(rank)][cc];
        }
        ++rank;
    }
    return rank;
}

int affine_rank(const std::vector<std::vector<long long>>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<std::vector<Rat>> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rat> row;
        row.reserve(pts[0].size());
        for (std::size_t j = 0; j < pts[0].size(); ++j) row.emplace_back(pts[i][j] - pts[0][j]);
        diffs.push_back(std::move(row));
    }
    return rank_rat(std::move(diffs));
}

// Solves <b, rows[i]> = 1 for all i; returns false when singular.
bool solve_unit_rhs(const std::vector<std::vector<long long>>& rows, std::vector<Rat>& out) {
    const std::size_t n = rows.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = rows[r][c];
        m[r][n] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t r = c; r < n; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == n) return false;
        std::swap(m[c], m[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rat f = m[r][c] / m[c][c];
            for (std::size_t cc = c; cc <= n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    out.assign(n, Rat(0));
    for (std::size_t r = 0; r < n; ++r) out[r] = m[r][n] / m[r][r];
    return true;
}

// Determinant of a square integer matrix, exact.
Int int_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    // fraction-free (Bareiss) elimination keeps every intermediate integral
    Int denom = 1, sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t r = c; r < n; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            for (std::size_t cc = c + 1; cc < n; ++cc) m[r][cc] = (m[r][cc] * m[c][c] - m[r][c] * m[c][cc]) / denom;
            m[r][c] = 0;
        }
        denom = m[c][c];
    }
    return sign * m[n - 1][n - 1];
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
    }
}

long long ll_gcd(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace

// ---- Support ---------------------------------------------------------------

Support Support::make(int vars, std::vector<std::vector<long long>> points) {
    if (vars < 1 || vars > 4)
        fail(errc::dimension_unsupported, "number of variables must be between 1 and 4, got " + std::to_string(vars));
    if (points.empty()) fail(errc::empty_support, "support has no points");
    if (points.size() > 32)
        fail(errc::out_of_domain, "support has " + std::to_string(points.size()) + " points; at most 32 are supported");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (static_cast<int>(points[i].size()) != vars)
            fail(errc::out_of_domain, "support point " + std::to_string(i) + " has " +
                                          std::to_string(points[i].size()) + " coordinates, expected " + std::to_string(vars));
        bool all_zero = true;
        for (long long c : points[i]) {
            if (c < 0) fail(errc::negative_coordinate, "support point " + std::to_string(i) + " has a negative coordinate");
            if (c != 0) all_zero = false;
        }
        if (all_zero) fail(errc::out_of_domain, "support contains the origin; the germ would be a unit");
    }
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i] == points[i - 1]) fail(errc::duplicate_point, "support contains a repeated exponent vector");
    // convenient: every axis must carry a pure power
    for (int ax = 0; ax < vars; ++ax) {
        bool found = false;
        for (const auto& p : points) {
            bool axis_pt = p[static_cast<std::size_t>(ax)] > 0;
            for (int j = 0; axis_pt && j < vars; ++j)
                if (j != ax && p[static_cast<std::size_t>(j)] != 0) axis_pt = false;
            if (axis_pt) {
                found = true;
                break;
            }
        }
        if (!found)
            fail(errc::not_convenient,
                 "no pure power on axis " + std::to_string(ax) + "; the support is not convenient");
    }
    Support s;
    s.vars = vars;
    s.points = std::move(points);
    return s;
}

Support scale_support(const Support& s, long long factor) {
    if (factor < 1) fail(errc::out_of_domain, "scale factor must be a positive integer");
    std::vector<std::vector<long long>> pts = s.points;
    for (auto& p : pts)
        for (auto& c : p) c *= factor;
    return Support::make(s.vars, std::move(pts));
}

// ---- NewtonPolyhedron ------------------------------------------------------

NewtonPolyhedron NewtonPolyhedron::build(const Support& s) {
    // re-run validation so a hand-assembled Support cannot smuggle bad data in
    Support sup = Support::make(s.vars, s.points);
    const int n = sup.vars;
    const auto& pts = sup.points;
    const int m = static_cast<int>(pts.size());

    NewtonPolyhedron poly;
    poly.support_ = sup;

    // Candidate facet functionals: solve <a, p_i> = 1 on every n-subset of
    // support points.  A compact facet has n affinely independent support
    // points on it, so each one is found this way; convenience rules out
    // compact facets with any zero normal entry.
    std::set<std::vector<Rat>> seen;
    for_each_combination(m, n, [&](const std::vector<int>& idx) {
        std::vector<std::vector<long long>> rows;
        rows.reserve(idx.size());
        for (int i : idx) rows.push_back(pts[static_cast<std::size_t>(i)]);
        std::vector<Rat> a;
        if (!solve_unit_rhs(rows, a)) return;
        for (const Rat& c : a)
            if (c <= 0) return;
        std::vector<int> tight;
        for (int i = 0; i < m; ++i) {
            Rat v = 0;
            for (int j = 0; j < n; ++j) v += a[static_cast<std::size_t>(j)] * pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v < 1) return;  // not a supporting hyperplane
            if (v == 1) tight.push_back(i);
        }
        std::vector<std::vector<long long>> tight_pts;
        for (int i : tight) tight_pts.push_back(pts[static_cast<std::size_t>(i)]);
        if (affine_rank(tight_pts) != n - 1) return;  // supports a lower-dimensional face only
        seen.insert(std::move(a));
    });
    poly.facets_.assign(seen.begin(), seen.end());
    if (poly.facets_.empty()) fail(errc::internal_cancellation, "no compact facet found for a convenient support");

    // Hull vertices: support points where the tight facet normals, together
    // with the coordinate walls through the point, span the whole space.
    // Convenience makes walls + positive facets a complete description of
    // the polyhedron, so this rank test is exact.
    for (const auto& p : pts) {
        std::vector<std::vector<Rat>> normals;
        for (const auto& a : poly.facets_) {
            Rat v = 0;
            for (int j = 0; j < n; ++j) v += a[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
            if (v == 1) normals.push_back(a);
        }
        for (int j = 0; j < n; ++j)
            if (p[static_cast<std::size_t>(j)] == 0) {
                std::vector<Rat> e(static_cast<std::size_t>(n), Rat(0));
                e[static_cast<std::size_t>(j)] = 1;
                normals.push_back(std::move(e));
            }
        if (rank_rat(std::move(normals)) == n) poly.vertices_.push_back(p);
    }
    // pts is lex-sorted, so vertices_ already is as well

    // Tightness masks over the vertex list.
    const int nv = static_cast<int>(poly.vertices_.size());
    auto vertex_value = [&](const std::vector<Rat>& a, int vi) {
        Rat v = 0;
        for (int j = 0; j < n; ++j) v += a[static_cast<std::size_t>(j)] * poly.vertices_[static_cast<std::size_t>(vi)][static_cast<std::size_t>(j)];
        return v;
    };
    for (const auto& a : poly.facets_) {
        std::uint32_t mask = 0;
        for (int vi = 0; vi < nv; ++vi)
            if (vertex_value(a, vi) == 1) mask |= 1u << vi;
        poly.facet_masks_.push_back(mask);
    }
    for (int j = 0; j < n; ++j) {
        std::uint32_t mask = 0;
        for (int vi = 0; vi < nv; ++vi)
            if (poly.vertices_[static_cast<std::size_t>(vi)][static_cast<std::size_t>(j)] == 0) mask |= 1u << vi;
        poly.wall_masks_.push_back(mask);
    }

    // Compact faces: close the facet masks under intersection with every
    // facet and wall.  Any intersection containing a compact facet is
    // compact, and every compact proper face is such an intersection.
    std::set<std::uint32_t> masks(poly.facet_masks_.begin(), poly.facet_masks_.end());
    std::vector<std::uint32_t> work(masks.begin(), masks.end());
    std::vector<std::uint32_t> gens = poly.facet_masks_;
    gens.insert(gens.end(), poly.wall_masks_.begin(), poly.wall_masks_.end());
    while (!work.empty()) {
        std::uint32_t cur = work.back();
        work.pop_back();
        for (std::uint32_t g : gens) {
            std::uint32_t inter = cur & g;
            if (inter != 0 && masks.insert(inter).second) work.push_back(inter);
        }
    }

    poly.faces_.push_back(Face{});  // the adjoined empty face, d == 0
    for (std::uint32_t mask : masks) {
        Face f;
        f.vertex_mask = mask;
        for (int vi = 0; vi < nv; ++vi)
            if (mask & (1u << vi)) f.vertex_ids.push_back(vi);
        std::vector<std::vector<long long>> vpts;
        for (int vi : f.vertex_ids) vpts.push_back(poly.vertices_[static_cast<std::size_t>(vi)]);
        f.dim = affine_rank(vpts);
        f.d = f.dim + 1;
        for (int j = 0; j < n; ++j) {
            bool nonzero = false;
            for (const auto& v : vpts)
                if (v[static_cast<std::size_t>(j)] != 0) nonzero = true;
            if (nonzero) ++f.k;
        }
        poly.faces_.push_back(std::move(f));
    }
    std::sort(poly.faces_.begin(), poly.faces_.end(), [](const Face& a, const Face& b) {
        if (a.d != b.d) return a.d < b.d;
        return a.vertex_ids < b.vertex_ids;
    });

    // Integer form of the weight data: L * a_F with L the common denominator.
    long long lcm = 1;
    for (const auto& a : poly.facets_)
        for (const Rat& c : a) {
            long long d = to_ll(rat_den(c));
            lcm = lcm / ll_gcd(lcm, d) * d;
        }
    poly.weight_scale_ = lcm;
    for (const auto& a : poly.facets_) {
        std::vector<long long> row;
        row.reserve(static_cast<std::size_t>(n));
        for (const Rat& c : a) row.push_back(to_ll(rat_num(c) * (lcm / rat_den(c))));
        poly.facet_weights_.push_back(std::move(row));
    }
    return poly;
}

int NewtonPolyhedron::face_index_of_mask(std::uint32_t mask) const {
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].vertex_mask == mask && (mask != 0 || faces_[i].d == 0)) return static_cast<int>(i);
    return -1;
}

Rat NewtonPolyhedron::newton_weight(const std::vector<long long>& x) const {
    const int n = vars();
    if (static_cast<int>(x.size()) != n) fail(errc::out_of_domain, "point arity does not match the number of variables");
    for (long long c : x)
        if (c < 0) fail(errc::negative_coordinate, "weight is defined on nonnegative exponents only");
    long long best = 0;
    bool first = true;
    for (const auto& w : facet_weights_) {
        long long dot = 0;
        for (int j = 0; j < n; ++j) dot += w[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        if (first || dot < best) best = dot, first = false;
    }
    return Rat(best, weight_scale_);
}

std::vector<WeightedPoint> NewtonPolyhedron::weighted_points(const Rat& cutoff) const {
    std::vector<WeightedPoint> out;
    if (cutoff <= 0) return out;
    const int n = vars();
    const long long cut_num = to_ll(rat_num(cutoff) * weight_scale_);
    const long long cut_den = to_ll(rat_den(cutoff));
    // weight_num * cut_den < cut_num  <=>  weight < cutoff

    // Componentwise lower bound on the scaled weight gives both the search
    // box and a subtree-pruning bound: L*nu(x) >= sum_i min_F W_F[i] * x_i.
    std::vector<long long> axis_min(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        long long mn = facet_weights_[0][static_cast<std::size_t>(j)];
        for (const auto& w : facet_weights_) mn = std::min(mn, w[static_cast<std::size_t>(j)]);
        axis_min[static_cast<std::size_t>(j)] = mn;
    }
    std::vector<long long> box(static_cast<std::size_t>(n));
    double box_cells = 1;
    for (int j = 0; j < n; ++j) {
        // largest x_j with x_j * axis_min[j] * cut_den < cut_num
        long long b = (cut_num - 1) / (axis_min[static_cast<std::size_t>(j)] * cut_den);
        box[static_cast<std::size_t>(j)] = b;
        box_cells *= static_cast<double>(b + 1);
    }
    if (box_cells > 2e8) fail(errc::out_of_domain, "enumeration window exceeds the supported size");

    const int nv = static_cast<int>(vertices_.size());
    const std::uint32_t full_mask = nv >= 32 ? 0xffffffffu : ((1u << nv) - 1u);
    auto classify = [&](const std::vector<long long>& x, long long wnum) {
        std::uint32_t mask = full_mask;
        for (std::size_t f = 0; f < facet_weights_.size(); ++f) {
            long long dot = 0;
            for (int j = 0; j < n; ++j) dot += facet_weights_[f][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
            if (dot == wnum) mask &= facet_masks_[f];
        }
        for (int j = 0; j < n; ++j)
            if (x[static_cast<std::size_t>(j)] == 0) mask &= wall_masks_[static_cast<std::size_t>(j)];
        return mask;
    };

    auto run_slice = [&](long long lo, long long hi) {
        std::vector<WeightedPoint> local;
        std::vector<long long> x(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, int axis, long long partial_min) -> void {
            if (axis == n) {
                long long wnum = 0;
                bool first = true;
                for (const auto& w : facet_weights_) {
                    long long dot = 0;
                    for (int j = 0; j < n; ++j) dot += w[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
                    if (first || dot < wnum) wnum = dot, first = false;
                }
                if (wnum * cut_den < cut_num) local.push_back(WeightedPoint{wnum, classify(x, wnum)});
                return;
            }
            long long from = axis == 0 ? lo : 0;
            long long to = axis == 0 ? hi - 1 : box[static_cast<std::size_t>(axis)];
            for (long long v = from; v <= to; ++v) {
                long long pm = partial_min + v * axis_min[static_cast<std::size_t>(axis)];
                if (pm * cut_den >= cut_num) break;  // lower bound already past the window
                x[static_cast<std::size_t>(axis)] = v;
                self(self, axis + 1, pm);
            }
            x[static_cast<std::size_t>(axis)] = 0;
        };
        rec(rec, 0, 0);
        return local;
    };

    auto chunks = parallel_chunk_map<std::vector<WeightedPoint>>(box[0] + 1, run_slice);
    std::size_t total = 0;
    for (const auto& c : chunks) total += c.size();
    out.reserve(total);
    for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
    return out;
}

Rat NewtonPolyhedron::top_volume() const {
    const int n = vars();
    std::vector<std::vector<std::vector<int>>> memo(faces_.size());
    Rat total = 0;
    Int fact = 1;
    for (int j = 2; j <= n; ++j) fact *= j;
    for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
        if (faces_[fi].dim != n - 1) continue;  // cone over each facet
        for (const auto& cell : pulling_triangulation(static_cast<int>(fi), memo)) {
            std::vector<std::vector<Int>> mat;
            for (int vi : cell) {
                std::vector<Int> row;
                for (long long c : vertices_[static_cast<std::size_t>(vi)]) row.emplace_back(c);
                mat.push_back(std::move(row));
            }
            Int det = int_det(std::move(mat));
            if (det < 0) det = -det;
            total += Rat(det, fact);
        }
    }
    return total;
}

std::vector<Rat> NewtonPolyhedron::volumes() const {
    const int n = vars();
    std::vector<Rat> vols(static_cast<std::size_t>(n), Rat(0));
    for (int k = 1; k <= n; ++k) {
        for_each_combination(n, k, [&](const std::vector<int>& axes) {
            std::vector<std::vector<long long>> restricted;
            for (const auto& p : support_.points) {
                bool inside = true;
                for (int j = 0; j < n && inside; ++j)
                    if (p[static_cast<std::size_t>(j)] != 0 && !std::binary_search(axes.begin(), axes.end(), j)) inside = false;
                if (!inside) continue;
                std::vector<long long> q;
                q.reserve(axes.size());
                for (int j : axes) q.push_back(p[static_cast<std::size_t>(j)]);
                restricted.push_back(std::move(q));
            }
            Support sub = Support::make(k, std::move(restricted));
            if (k == n) {
                vols[static_cast<std::size_t>(k - 1)] += top_volume();
            } else {
                vols[static_cast<std::size_t>(k - 1)] += NewtonPolyhedron::build(sub).top_volume();
            }
        });
    }
    return vols;
}

std::vector<std::vector<int>> NewtonPolyhedron::pulling_triangulation(
    int face_idx, std::vector<std::vector<std::vector<int>>>& memo) const {
    auto& cached = memo[static_cast<std::size_t>(face_idx)];
    if (!cached.empty()) return cached;
    const Face& f = faces_[static_cast<std::size_t>(face_idx)];
    if (f.dim == 0) {
        cached = {{f.vertex_ids[0]}};
        return cached;
    }
    // Pull from the lexicographically first vertex: cone it over the
    // triangulations of the ridges that do not contain it.
    const int apex = f.vertex_ids[0];
    for (std::size_t gi = 0; gi < faces_.size(); ++gi) {
        const Face& g = faces_[gi];
        if (g.dim != f.dim - 1) continue;
        if ((g.vertex_mask & f.vertex_mask) != g.vertex_mask) continue;
        if (g.vertex_mask & (1u << apex)) continue;
        for (auto cell : pulling_triangulation(static_cast<int>(gi), memo)) {
            cell.push_back(apex);
            std::sort(cell.begin(), cell.end());
            cached.push_back(std::move(cell));
        }
    }
    if (cached.empty()) fail(errc::internal_cancellation, "pulling triangulation produced no cells");
    return cached;
}

}  // namespace spectre
