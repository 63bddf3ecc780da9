#include "gn2/chamber.hpp"

#include "gn2/lp.hpp"

#include <algorithm>

namespace gn2 {

namespace {

Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<QVec> hypersimplex_vertices(int n) {
    std::vector<QVec> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            QVec v(n, Rat(0));
            v[i - 1] = 1;
            v[j - 1] = 1;
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Hyperplane> arrangement_hyperplanes(int n) {
    std::vector<Hyperplane> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size < 2 || size > n - 2) continue;
        const unsigned comp = (~mask) & ((1u << n) - 1);
        const int csize = n - size;
        // One representative per complementary pair {S, S^c}: the smaller
        // side, ties by lower mask.
        if (size > csize || (size == csize && mask > comp)) continue;
        QVec a(n, Rat(0));
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) a[i] = 1;
        out.push_back({std::move(a), Rat(1)});
    }
    std::sort(out.begin(), out.end(), [](const Hyperplane& x, const Hyperplane& y) {
        return x.normal < y.normal;
    });
    return out;
}

std::vector<QVec> sample_generic_points(int n, std::uint64_t seed, std::size_t count) {
    Rng rng(seed ^ 0x9058f00d0a1cull ^ static_cast<std::uint64_t>(n));
    std::vector<QVec> out;
    std::size_t guard = 0;
    while (out.size() < count && guard < count * 200 + 1000) {
        ++guard;
        IVec r(n);
        Int total = 0;
        for (int i = 0; i < n; ++i) {
            r[i] = Int(rng.range(1, 9973));
            total += r[i];
        }
        // x = 2r / total; generic iff 2 r(S) != total for all relevant S
        // and every coordinate is strictly inside (0,1).
        bool ok = true;
        for (unsigned mask = 1; ok && mask < (1u << n); ++mask) {
            Int s = 0;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1u) s += r[i];
            const int size = __builtin_popcount(mask);
            if (size == 1 && 2 * s >= total) ok = false;  // x_i < 1
            if (size >= 2 && size <= n - 2 && 2 * s == total) ok = false;
        }
        if (!ok) continue;
        QVec x(n);
        for (int i = 0; i < n; ++i) x[i] = Rat(2 * r[i]) / Rat(total);
        out.push_back(std::move(x));
    }
    return out;
}

std::set<int> omega_of(const QVec& x, const std::vector<PolytopeGeom>& geoms) {
    if (geoms.empty()) throw Error("omega_of: empty census");
    const int n = static_cast<int>(x.size());
    Rat sum = 0;
    for (const auto& v : x) {
        if (v < 0 || v > 1) throw OutOfHypersimplex();
        sum += v;
    }
    if (sum != 2) throw OutOfHypersimplex();
    std::set<int> omega;
    for (std::size_t g = 0; g < geoms.size(); ++g) {
        if (geoms[g].matroid.n != n) throw Error("omega_of: census dimension mismatch");
        if (strictly_inside(x, geoms[g].rows, geoms[g].eqs)) omega.insert(static_cast<int>(g));
    }
    return omega;
}

namespace {

struct Cell {
    std::vector<LinearConstraint> strict;  // accumulated strict inequalities
    QVec witness;
};

}  // namespace

std::vector<Chamber> enumerate_chambers(int n, const std::vector<PolytopeGeom>& geoms) {
    if (n < 3 || n > 6) throw Error("enumerate_chambers supports 3 <= n <= 6");

    const QVec ones(n, Rat(1));
    auto base_system = [&](const Cell& cell) {
        LinearSystem sys(n);
        sys.add_eq(ones, Rat(2));
        for (int i = 0; i < n; ++i) {
            QVec e(n, Rat(0));
            e[i] = -1;
            sys.add_le(e, Rat(0), /*strict=*/true);  // x_i > 0
            QVec f(n, Rat(0));
            f[i] = 1;
            sys.add_le(f, Rat(1), /*strict=*/true);  // x_i < 1
        }
        for (const auto& c : cell.strict) sys.add(c.coeffs, c.rhs, c.kind, c.strict);
        return sys;
    };

    std::vector<Cell> cells;
    {
        Cell start;
        start.witness.assign(n, Rat(2) / Rat(n));
        cells.push_back(std::move(start));
    }

    for (const auto& h : arrangement_hyperplanes(n)) {
        std::vector<Cell> next;
        for (auto& cell : cells) {
            const Rat v = dot(h.normal, cell.witness);
            if (v != h.offset) {
                // Side containing the witness stays; probe the other side.
                const bool witness_below = v < h.offset;
                LinearSystem sys = base_system(cell);
                if (witness_below) sys.add_ge(h.normal, h.offset, /*strict=*/true);
                else sys.add_le(h.normal, h.offset, /*strict=*/true);
                auto other = find_strict_point(sys);

                Cell keep = cell;
                keep.strict.push_back({h.normal, h.offset,
                                       witness_below ? LinearConstraint::LE : LinearConstraint::GE,
                                       true});
                next.push_back(std::move(keep));
                if (other) {
                    Cell split;
                    split.strict = cell.strict;
                    split.strict.push_back({h.normal, h.offset,
                                            witness_below ? LinearConstraint::GE
                                                          : LinearConstraint::LE,
                                            true});
                    split.witness = *other;
                    next.push_back(std::move(split));
                }
            } else {
                // Witness sits exactly on h: decide both sides by LP.
                for (auto kind : {LinearConstraint::LE, LinearConstraint::GE}) {
                    LinearSystem sys = base_system(cell);
                    sys.add(h.normal, h.offset, kind, /*strict=*/true);
                    auto pt = find_strict_point(sys);
                    if (!pt) continue;
                    Cell side;
                    side.strict = cell.strict;
                    side.strict.push_back({h.normal, h.offset, kind, true});
                    side.witness = *pt;
                    next.push_back(std::move(side));
                }
            }
        }
        cells = std::move(next);
    }

    std::vector<Chamber> out;
    for (const auto& cell : cells) {
        Chamber c;
        c.witness = cell.witness;
        c.omega = omega_of(cell.witness, geoms);
        c.dim = n - 1;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) {
        return a.witness < b.witness;
    });
    return out;
}

bool check_union_chamber(const Chamber& c, const std::vector<Cortege>& decompositions,
                         const DecompositionContext& ctx) {
    for (const auto& d : decompositions) {
        int hits = 0;
        for (const auto& m : d.members)
            if (c.omega.count(ctx.index_of(m))) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

}  // namespace gn2
