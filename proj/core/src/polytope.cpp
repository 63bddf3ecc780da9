#include "gn2/polytope.hpp"

#include <algorithm>
#include <set>

namespace gn2 {

namespace {

Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Positive-scale canonical form for oriented hyperplanes, for dedup.
void canonicalize(Hyperplane& h) {
    for (const Rat& v : h.normal) {
        if (v != 0) {
            Rat s = abs(v);
            for (auto& w : h.normal) w /= s;
            h.offset /= s;
            return;
        }
    }
}

bool hyperplane_eq(const Hyperplane& x, const Hyperplane& y) {
    return x.normal == y.normal && x.offset == y.offset;
}

bool hyperplane_less(const Hyperplane& x, const Hyperplane& y) {
    if (x.normal != y.normal) return x.normal < y.normal;
    return x.offset < y.offset;
}

// Is p a convex combination of pts? Exact LP feasibility.
bool in_convex_hull(const QVec& p, const std::vector<QVec>& pts) {
    if (pts.empty()) return false;
    const int m = static_cast<int>(pts.size());
    LinearSystem sys(m);  // weights
    for (std::size_t c = 0; c < p.size(); ++c) {
        QVec row(m);
        for (int k = 0; k < m; ++k) row[k] = pts[k][c];
        sys.add_eq(row, p[c]);
    }
    sys.add_eq(QVec(m, Rat(1)), Rat(1));
    for (int k = 0; k < m; ++k) {
        QVec row(m, Rat(0));
        row[k] = -1;
        sys.add_le(row, Rat(0));  // weight >= 0
    }
    return feasible(sys);
}

// All hyperplanes spanned by vertex subsets with every vertex on one side
// and a tight set of affine dimension dim-1: the facets. Brute force over
// dim-subsets, exact; every facet contains dim affinely independent
// vertices, so each is found.
std::vector<Hyperplane> facet_search(const std::vector<QVec>& verts, int dim) {
    std::vector<Hyperplane> out;
    if (dim <= 0) return out;
    const int nv = static_cast<int>(verts.size());
    const std::size_t n = verts[0].size();

    std::set<std::vector<int>> seen_tight;
    std::vector<int> comb(dim);
    for (int i = 0; i < dim; ++i) comb[i] = i;
    auto advance = [&]() {
        int i = dim - 1;
        while (i >= 0 && comb[i] == nv - dim + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };

    do {
        // Functionals (a, b) with a*v = b on the chosen subset.
        QMat rows;
        for (int i = 0; i < dim; ++i) {
            QVec r(verts[comb[i]]);
            r.push_back(Rat(-1));
            rows.push_back(std::move(r));
        }
        for (const auto& k : kernel_basis(rows)) {
            QVec normal(k.begin(), k.begin() + n);
            Rat offset = k[n];  // rows encode a*v - b = 0 with k = (a, b)
            int side = 0;
            bool valid = true;
            for (const auto& v : verts) {
                Rat s = dot(normal, v) - offset;
                if (s == 0) continue;
                int sg = s > 0 ? 1 : -1;
                if (side == 0) side = sg;
                else if (side != sg) { valid = false; break; }
            }
            if (!valid || side == 0) continue;
            if (side > 0) {
                for (auto& v : normal) v = -v;
                offset = -offset;
            }
            Hyperplane h{std::move(normal), std::move(offset)};
            std::vector<int> tight;
            std::vector<QVec> tight_pts;
            for (int t = 0; t < nv; ++t) {
                if (dot(h.normal, verts[t]) == h.offset) {
                    tight.push_back(t);
                    tight_pts.push_back(verts[t]);
                }
            }
            if (affine_dim(tight_pts) != dim - 1) continue;
            if (!seen_tight.insert(tight).second) continue;
            canonicalize(h);
            out.push_back(std::move(h));
        }
    } while (advance());

    std::sort(out.begin(), out.end(), hyperplane_less);
    out.erase(std::unique(out.begin(), out.end(), hyperplane_eq), out.end());
    return out;
}

// Simplices of a placing-style triangulation of conv(verts): cone the first
// vertex over recursively triangulated facets. `rows` must contain every
// facet-defining inequality of conv(verts); faces inherit the same rows.
void triangulate(const std::vector<QVec>& all, std::vector<int> vert_idx,
                 const std::vector<Hyperplane>& rows, int dim,
                 std::vector<std::vector<int>>& simplices) {
    if (static_cast<int>(vert_idx.size()) == dim + 1) {
        simplices.push_back(std::move(vert_idx));
        return;
    }
    const int apex = vert_idx[0];
    std::set<std::vector<int>> seen;
    for (const auto& r : rows) {
        if (dot(r.normal, all[apex]) == r.offset) continue;  // apex on it
        std::vector<int> tight;
        std::vector<QVec> tight_pts;
        for (int v : vert_idx) {
            if (dot(r.normal, all[v]) == r.offset) {
                tight.push_back(v);
                tight_pts.push_back(all[v]);
            }
        }
        if (affine_dim(tight_pts) != dim - 1) continue;
        if (!seen.insert(tight).second) continue;
        std::vector<std::vector<int>> sub;
        triangulate(all, tight, rows, dim - 1, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            simplices.push_back(std::move(s));
        }
    }
}

bool invert(QMat m, QMat& inv) {
    const std::size_t n = m.size();
    inv.assign(n, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return false;
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        const Rat d = 1 / m[c][c];
        for (std::size_t j = 0; j < n; ++j) { m[c][j] *= d; inv[c][j] *= d; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return true;
}

// Basis of the saturated lattice of the direction space of the points'
// affine hull.
std::vector<IVec> hull_lattice(const std::vector<QVec>& verts) {
    QMat dirs;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        QVec d(verts[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = verts[i][j] - verts[0][j];
        dirs.push_back(std::move(d));
    }
    QMat ann = kernel_basis(dirs);
    if (ann.empty()) {
        // Full-dimensional direction space: the lattice is Z^n.
        std::vector<IVec> std_basis(verts[0].size(), IVec(verts[0].size(), 0));
        for (std::size_t i = 0; i < std_basis.size(); ++i) std_basis[i][i] = 1;
        return std_basis;
    }
    return integer_kernel(ann);
}

Rat volume_from(const std::vector<QVec>& verts, const std::vector<Hyperplane>& rows) {
    const int dim = affine_dim(verts);
    if (dim <= 0) return Rat(0);
    std::vector<int> idx(verts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::vector<std::vector<int>> simplices;
    triangulate(verts, idx, rows, dim, simplices);

    const std::vector<IVec> lat = hull_lattice(verts);
    if (static_cast<int>(lat.size()) != dim)
        throw Error("lattice basis dimension mismatch in volume computation");

    // Pick dim coordinate positions where the lattice basis is invertible;
    // edge coordinates then come from one precomputed inverse.
    const std::size_t ambient = verts[0].size();
    std::vector<int> pos;
    QMat acc;
    for (std::size_t r = 0; r < ambient && static_cast<int>(pos.size()) < dim; ++r) {
        QVec row(dim);
        for (int j = 0; j < dim; ++j) row[j] = Rat(lat[j][r]);
        acc.push_back(row);
        if (matrix_rank(acc) == static_cast<int>(pos.size()) + 1) pos.push_back(static_cast<int>(r));
        else acc.pop_back();
    }
    QMat inv;
    if (!invert(acc, inv)) throw Error("lattice basis not invertible on chosen rows");

    Rat total = 0;
    for (const auto& s : simplices) {
        QMat edges(dim, QVec(dim));
        for (int e = 0; e < dim; ++e) {
            QVec rhs(dim);
            for (int r = 0; r < dim; ++r)
                rhs[r] = verts[s[e + 1]][pos[r]] - verts[s[0]][pos[r]];
            for (int c = 0; c < dim; ++c) {
                Rat v = 0;
                for (int r = 0; r < dim; ++r) v += inv[c][r] * rhs[r];
                edges[e][c] = v;
            }
        }
        Rat det = 1;
        for (int c = 0; c < dim && det != 0; ++c) {
            int p = c;
            while (p < dim && edges[p][c] == 0) ++p;
            if (p == dim) { det = 0; break; }
            if (p != c) { std::swap(edges[p], edges[c]); det = -det; }
            det *= edges[c][c];
            const Rat d = 1 / edges[c][c];
            for (int i = c + 1; i < dim; ++i) {
                if (edges[i][c] == 0) continue;
                const Rat f = edges[i][c] * d;
                for (int j = c; j < dim; ++j) edges[i][j] -= f * edges[c][j];
            }
        }
        total += abs(det);
    }
    return total;
}

}  // namespace

PolytopeV hull(const std::vector<QVec>& points) {
    if (points.empty()) throw Error("hull of empty point set");
    PolytopeV p;
    p.ambient = static_cast<int>(points[0].size());

    std::vector<QVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<QVec> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_convex_hull(pts[i], others)) p.vertices.push_back(pts[i]);
    }
    if (p.vertices.empty()) p.vertices.push_back(pts[0]);  // single repeated point

    p.dim = affine_dim(p.vertices);
    p.base = p.vertices[0];
    QMat acc;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        QVec d(p.ambient);
        for (int j = 0; j < p.ambient; ++j) d[j] = p.vertices[i][j] - p.base[j];
        acc.push_back(d);
        if (matrix_rank(acc) == static_cast<int>(p.affine_basis.size()) + 1)
            p.affine_basis.push_back(std::move(d));
        else
            acc.pop_back();
    }
    // Affine hull as equalities, anchored at the base point.
    QMat dir = p.affine_basis;
    if (dir.empty()) dir.push_back(QVec(p.ambient, Rat(0)));
    for (const auto& a : kernel_basis(dir)) {
        bool zero = true;
        for (const auto& v : a) if (v != 0) { zero = false; break; }
        if (zero) continue;
        Hyperplane h{a, dot(a, p.base)};
        canonicalize(h);
        p.aff_eqs.push_back(std::move(h));
    }
    std::sort(p.aff_eqs.begin(), p.aff_eqs.end(), hyperplane_less);

    p.facets = facet_search(p.vertices, p.dim);
    return p;
}

Rat normalized_volume(const PolytopeV& p) { return volume_from(p.vertices, p.facets); }

Rat normalized_volume(const std::vector<QVec>& vertices, const std::vector<Hyperplane>& rows) {
    return volume_from(vertices, rows);
}

bool interiors_intersect(const PolytopeV& p, const PolytopeV& q) {
    if (p.ambient != q.ambient)
        throw DimensionMismatch("interiors_intersect: ambient dimensions differ");
    if (p.dim != p.ambient - 1 || q.dim != q.ambient - 1)
        throw DimensionMismatch("interiors_intersect: inputs must be full-dimensional "
                                "in the hypersimplex hyperplane");
    LinearSystem sys(p.ambient);
    for (const auto& e : p.aff_eqs) sys.add_eq(e.normal, e.offset);
    for (const auto& e : q.aff_eqs) sys.add_eq(e.normal, e.offset);
    for (const auto& f : p.facets) sys.add_le(f.normal, f.offset, /*strict=*/true);
    for (const auto& f : q.facets) sys.add_le(f.normal, f.offset, /*strict=*/true);
    return find_strict_point(sys).has_value();
}

bool strictly_inside(const QVec& x, const std::vector<Hyperplane>& rows,
                     const std::vector<Hyperplane>& eqs) {
    for (const auto& e : eqs)
        if (dot(e.normal, x) != e.offset) return false;
    for (const auto& r : rows)
        if (dot(r.normal, x) >= r.offset) return false;
    return true;
}

bool inside(const QVec& x, const std::vector<Hyperplane>& rows,
            const std::vector<Hyperplane>& eqs) {
    for (const auto& e : eqs)
        if (dot(e.normal, x) != e.offset) return false;
    for (const auto& r : rows)
        if (dot(r.normal, x) > r.offset) return false;
    return true;
}

}  // namespace gn2
