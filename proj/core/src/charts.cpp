#include "gn2/charts.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gn2 {

namespace {

// Raw (unnormalized) coordinate pair; (0,0) encodes an indeterminate value.
struct RawPair {
    Rat a, b;
    bool indeterminate() const { return a == 0 && b == 0; }
};

}  // namespace

const ProjPair& ChartPoint::at(int p, int q) const {
    auto it = coords.find(make_pair_sorted(p, q));
    if (it == coords.end())
        throw Error("chart point has no pair (" + std::to_string(p) + "," + std::to_string(q) + ")");
    return it->second;
}

std::pair<Rat, Rat> ChartPoint::extended(int p, int q) const {
    const ProjPair& v = at(p, q);
    if (p < q) return {v.a(), v.b()};
    return {v.b(), v.a()};
}

std::vector<int> ChartPoint::complement() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (i != chart.first && i != chart.second) out.push_back(i);
    return out;
}

bool ChartPoint::satisfies_relations() const {
    const auto idx = complement();
    const int m = static_cast<int>(idx.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                const int i = idx[a], j = idx[b], k = idx[c];
                const auto ij = extended(i, j);
                const auto ik = extended(i, k);
                const auto jk = extended(j, k);
                // c'_ij c_ik c'_jk = c_ij c'_ik c_jk
                if (ij.second * ik.first * jk.second != ij.first * ik.second * jk.first)
                    return false;
            }
    return true;
}

bool ChartPoint::in_main_stratum() const {
    for (const auto& [pair, v] : coords)
        if (v.in_special_set()) return false;
    return true;
}

std::string ChartPoint::str() const {
    std::ostringstream os;
    os << "M" << chart.first << chart.second << "[";
    bool first = true;
    for (const auto& [pair, v] : coords) {
        if (!first) os << ", ";
        first = false;
        os << pair.first << pair.second << "=" << v.str();
    }
    os << "]";
    return os.str();
}

Rat PluckerMatrix::minor(int i, int j) const {
    return rows[0][i - 1] * rows[1][j - 1] - rows[0][j - 1] * rows[1][i - 1];
}

bool PluckerMatrix::all_minors_nonzero() const {
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (minor(i, j) == 0) return false;
    return true;
}

PluckerMatrix random_main_stratum(int n, Rng& rng) {
    PluckerMatrix m;
    m.n = n;
    m.chart = {1, 2};
    m.rows.assign(2, QVec(n));
    do {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < n; ++c) m.rows[r][c] = Rat(rng.range(-9, 9));
    } while (!m.all_minors_nonzero());
    return m;
}

ChartPoint plucker_to_params(const PluckerMatrix& m, Chart chart) {
    const auto [k, l] = chart;
    if (m.minor(k, l) == 0) throw Error("chart minor is zero");
    ChartPoint out;
    out.n = m.n;
    out.chart = chart;
    for (int p = 1; p <= m.n; ++p) {
        if (p == k || p == l) continue;
        for (int q = p + 1; q <= m.n; ++q) {
            if (q == k || q == l) continue;
            const Rat a = m.minor(l, p) * m.minor(k, q);
            const Rat b = m.minor(l, q) * m.minor(k, p);
            if (a == 0 && b == 0) throw TransitionSingular({p, q});
            out.coords[{p, q}] = ProjPair(a, b);
        }
    }
    return out;
}

ChartPoint lift(int n, const std::vector<ProjPair>& base) {
    if (static_cast<int>(base.size()) != n - 3)
        throw Error("lift expects n-3 base pairs");
    ChartPoint out;
    out.n = n;
    out.chart = {1, 2};
    for (int i = 4; i <= n; ++i) out.coords[{3, i}] = base[i - 4];
    for (int i = 4; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const ProjPair& bi = base[i - 4];
            const ProjPair& bj = base[j - 4];
            const Rat a = bi.b() * bj.a();  // c'_3i c_3j
            const Rat b = bi.a() * bj.b();  // c_3i c'_3j
            if (a == 0 && b == 0) throw LiftUndefined({i, j});
            out.coords[{i, j}] = ProjPair(a, b);
        }
    }
    return out;
}

namespace {

// Transition representatives. Every formula below is bihomogeneous in the
// source pairs it mentions, so evaluating on canonical components is
// projectively well-defined. `which` = 0 is the primary representative,
// 1 the alternate one (equal modulo the relations ideal; they differ only
// in where they vanish on the boundary).
std::optional<RawPair> representative(Chart target, const ChartPoint& p, IndexPair out,
                                      int which) {
    auto C = [&p](int a, int b) { return p.extended(a, b); };
    const auto [i, j] = target;
    const auto [x, y] = out;
    RawPair r{Rat(0), Rat(0)};

    if (i == 1 && j == 2) {
        if (which != 0) return std::nullopt;
        const auto v = C(x, y);
        r = {v.first, v.second};
    } else if (i == 1) {
        // Lemma family for M_1j.
        if (x == 2) {
            if (which != 0) return std::nullopt;
            const auto jl = C(j, y);
            r = {jl.first, jl.first - jl.second};  // (c_jl : c_jl - c'_jl)
        } else {
            const auto jk = C(j, x), jl = C(j, y);
            if (which == 0) {
                r = {jl.first * (jk.first - jk.second), jk.first * (jl.first - jl.second)};
            } else if (which == 1) {
                const auto kl = C(x, y);
                r = {kl.first * jl.second * (jk.first - jk.second),
                     kl.second * jk.second * (jl.first - jl.second)};
            } else {
                return std::nullopt;
            }
        }
    } else if (i == 2) {
        // Lemma family for M_2j.
        if (x == 1) {
            if (which != 0) return std::nullopt;
            const auto jl = C(j, y);
            r = {jl.second, jl.second - jl.first};  // (c'_jl : c'_jl - c_jl)
        } else {
            const auto jk = C(j, x), jl = C(j, y);
            if (which == 0) {
                r = {jl.second * (jk.first - jk.second), jk.second * (jl.first - jl.second)};
            } else if (which == 1) {
                const auto kl = C(x, y);
                r = {jl.first * kl.second * (jk.first - jk.second),
                     jk.first * kl.first * (jl.first - jl.second)};
            } else {
                return std::nullopt;
            }
        }
    } else {
        // Lemma family for M_ij, 3 <= i < j.
        if (x == 1 && y == 2) {
            if (which != 0) return std::nullopt;
            const auto ij = C(i, j);
            r = {ij.first, ij.second};
        } else if (x == 1) {
            if (which != 0) return std::nullopt;
            const auto il = C(i, y), jl = C(j, y);
            r = {jl.second * (il.first - il.second), il.second * (jl.first - jl.second)};
        } else if (x == 2) {
            if (which != 0) return std::nullopt;
            const auto il = C(i, y), jl = C(j, y);
            r = {jl.first * (il.first - il.second), il.first * (jl.first - jl.second)};
        } else {
            const auto jk = C(j, x), il = C(i, y), ik = C(i, x), jl = C(j, y);
            if (which == 0) {
                const auto kl = C(x, y);
                r = {(jk.first - jk.second) * (il.first - il.second) * ik.first * jl.second * kl.first,
                     (ik.first - ik.second) * (jl.first - jl.second) * jk.second * il.first * kl.second};
            } else if (which == 1) {
                r = {(jk.second - jk.first) * (il.first - il.second) * ik.second * jl.second,
                     (ik.second - ik.first) * (jl.first - jl.second) * jk.second * il.second};
            } else {
                return std::nullopt;
            }
        }
    }
    return r;
}

int representative_count(Chart target, IndexPair out) {
    const auto [i, j] = target;
    const auto [x, y] = out;
    if (i == 1 && j == 2) return 1;
    if (i == 1) return x == 2 ? 1 : 2;
    if (i == 2) return x == 1 ? 1 : 2;
    if (x == 1 || x == 2) return 1;
    return 2;
}

std::vector<IndexPair> chart_pairs(int n, Chart chart) {
    std::vector<int> idx;
    for (int v = 1; v <= n; ++v)
        if (v != chart.first && v != chart.second) idx.push_back(v);
    std::vector<IndexPair> out;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) out.push_back({idx[a], idx[b]});
    return out;
}

// First representative that does not vanish, or nullopt.
std::optional<ProjPair> evaluate_output(Chart target, const ChartPoint& p, IndexPair out) {
    for (int which = 0; which < representative_count(target, out); ++which) {
        auto r = representative(target, p, out, which);
        if (r && !r->indeterminate()) return ProjPair(r->a, r->b);
    }
    return std::nullopt;
}

}  // namespace

std::optional<ProjPair> transition_representative(Chart target, const ChartPoint& p,
                                                  IndexPair out, int which) {
    auto r = representative(target, p, out, which);
    if (!r || r->indeterminate()) return std::nullopt;
    return ProjPair(r->a, r->b);
}

ChartPoint transition(Chart target, const ChartPoint& p) {
    if (p.chart != Chart{1, 2}) throw Error("transition source must be the chart (1,2)");
    if (target.first < 1 || target.first >= target.second || target.second > p.n)
        throw Error("invalid target chart");
    ChartPoint out;
    out.n = p.n;
    out.chart = target;
    if (target == Chart{1, 2}) return p;
    for (const auto& pr : chart_pairs(p.n, target)) {
        auto v = evaluate_output(target, p, pr);
        if (!v) throw TransitionSingular(pr);
        out.coords[pr] = *v;
    }
    return out;
}

PluckerMatrix realize_matrix(const ChartPoint& p) {
    if (p.chart != Chart{1, 2}) throw Error("realize_matrix expects a chart-(1,2) record");
    PluckerMatrix m;
    m.n = p.n;
    m.chart = {1, 2};
    m.rows.assign(2, QVec(p.n, Rat(0)));
    m.rows[0][0] = 1;
    m.rows[1][1] = 1;
    m.rows[0][2] = 1;  // z_3 = w_3 = 1
    m.rows[1][2] = 1;
    for (int i = 4; i <= p.n; ++i) {
        const ProjPair& c = p.at(3, i);
        m.rows[0][i - 1] = c.b();  // z_i = c'_3i
        m.rows[1][i - 1] = c.a();  // w_i = c_3i
    }
    return m;
}

bool compose_check(Chart kl, Chart pq, const ChartPoint& p) {
    if (!p.in_main_stratum() || !p.satisfies_relations())
        throw Error("compose_check requires a main-stratum point");
    const PluckerMatrix m = realize_matrix(p);
    if (plucker_to_params(m, {1, 2}) != p) return false;
    if (transition(kl, p) != plucker_to_params(m, kl)) return false;
    if (transition(pq, p) != plucker_to_params(m, pq)) return false;
    return true;
}

int jacobian_rank_at(const ChartPoint& p) {
    if (!p.satisfies_relations())
        throw Error("jacobian_rank_at requires a point satisfying the relations");
    const auto idx = p.complement();
    const auto pairs = chart_pairs(p.n, p.chart);
    std::map<IndexPair, int> col;
    for (std::size_t c = 0; c < pairs.size(); ++c) col[pairs[c]] = static_cast<int>(c);

    QMat jac;
    const int m = static_cast<int>(idx.size());
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            for (int c = b + 1; c < m; ++c) {
                const int i = idx[a], j = idx[b], k = idx[c];
                const auto ij = p.extended(i, j);
                const auto ik = p.extended(i, k);
                const auto jk = p.extended(j, k);
                // f = c_ij c'_ik c_jk - c'_ij c_ik c'_jk
                QVec row(pairs.size(), Rat(0));
                auto add = [&](IndexPair pr, const Rat& da, const Rat& db) {
                    // Variable of the pair: the a-component if b != 0 in
                    // canonical form, else the b-component.
                    const ProjPair& v = p.at(pr.first, pr.second);
                    row[col[pr]] += (v.b() != 0) ? da : db;
                };
                add({i, j}, ik.second * jk.first, -(ik.first * jk.second));
                add({i, k}, -(ij.second * jk.second), ij.first * jk.first);
                add({j, k}, ij.first * ik.second, -(ij.second * ik.first));
                jac.push_back(std::move(row));
            }
        }
    }
    if (jac.empty()) return 0;
    return matrix_rank(jac);
}

ExtensionVerdict classify_extension(int j, const ChartPoint& p) {
    if (p.chart != Chart{1, 2}) throw Error("classify_extension expects a chart-(1,2) record");
    if (j < 3 || j > p.n) throw Error("classify_extension: chart index must be in 3..n");
    if (!p.satisfies_relations()) throw Error("classify_extension: relations violated");
    if (p.in_main_stratum()) throw NotBoundary();

    const Chart target{1, j};
    ChartPoint value;
    value.n = p.n;
    value.chart = target;
    for (const auto& pr : chart_pairs(p.n, target)) {
        auto v = evaluate_output(target, p, pr);
        if (!v) {
            // Non-extendable: the forced-(1:1) triple pattern {j, k, l}.
            std::vector<int> locus{j, pr.first, pr.second};
            std::sort(locus.begin(), locus.end());
            std::ostringstream os;
            os << "no representative of f_{12,1" << j << "} extends at output ("
               << pr.first << "," << pr.second << "); source triple pattern F-hat{";
            for (int t : locus) os << t;
            os << "}";
            return ExtensionUndefined{locus, os.str()};
        }
        value.coords[pr] = *v;
    }

    // Collapse loci: source pairs (j,l) and (j,p) both at (1:0).
    const auto idx = p.complement();
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const int l = idx[a], q = idx[b];
            if (l == j || q == j) continue;
            const auto jl = p.extended(j, l);
            const auto jq = p.extended(j, q);
            if (jl.second == 0 && jq.second == 0) {
                std::vector<int> locus{j, l, q};
                std::sort(locus.begin(), locus.end());
                std::ostringstream os;
                os << "F-breve{";
                for (int t : locus) os << t;
                os << "}: extension is constant on the locus, image pairs ("
                   << (l < q ? l : q) << "," << (l < q ? q : l) << ")-block forced to (1:1)";
                return ExtensionCollapses{std::move(value), std::move(locus), os.str()};
            }
        }
    }
    return ExtensionDefined{std::move(value)};
}

std::vector<ChartPoint> boundary_samples(int n, std::uint64_t seed, std::size_t count) {
    Rng rng(seed ^ 0xb0a2d1ull);
    std::vector<ChartPoint> out;

    auto fresh = [&rng]() {
        // Generic value off {0, 1, inf}, denominators keep points distinct.
        while (true) {
            const long num = rng.range(2, 97);
            const long den = rng.range(2, 89);
            if (num == den) continue;
            return ProjPair(Rat(num), Rat(den));
        }
    };

    std::set<std::string> seen;
    auto push = [&out, &seen](ChartPoint p) {
        if (!p.satisfies_relations()) throw Error("boundary sample violates relations");
        if (p.in_main_stratum()) return;
        if (seen.insert(p.str()).second) out.push_back(std::move(p));
    };

    const std::vector<ProjPair> special = {ProjPair::zero(), ProjPair::one(),
                                           ProjPair::infinity()};
    std::size_t before = static_cast<std::size_t>(-1);
    while (out.size() < count && out.size() != before) {
        before = out.size();
        // One base coordinate pinned to each special value.
        for (int slot = 0; slot < n - 3 && out.size() < count; ++slot) {
            for (const auto& sp : special) {
                std::vector<ProjPair> base;
                for (int t = 0; t < n - 3; ++t) base.push_back(t == slot ? sp : fresh());
                push(lift(n, base));
            }
        }
        // Two equal generic base coordinates: a diagonal point, c_ij = (1:1).
        if (n >= 5 && out.size() < count) {
            std::vector<ProjPair> base;
            const ProjPair v = fresh();
            base.push_back(v);
            base.push_back(v);
            for (int t = 2; t < n - 3; ++t) base.push_back(fresh());
            push(lift(n, base));
        }
        // Forced-(1:1) triple: two base coordinates at (1:1).
        if (n >= 5 && out.size() < count) {
            std::vector<ProjPair> base{ProjPair::one(), ProjPair::one()};
            for (int t = 2; t < n - 3; ++t) base.push_back(fresh());
            push(lift(n, base));
        }
        // The point S = (1:1)^N.
        if (out.size() < count) {
            std::vector<ProjPair> base(n - 3, ProjPair::one());
            push(lift(n, base));
        }
        // Collapse locus: base pairs (3,4), (3,5) at (1:0), pair (4,5) free;
        // every other pair with 4 or 5 forced to (0:1). Not lift-reachable.
        if (n >= 5 && out.size() < count) {
            ChartPoint p;
            p.n = n;
            p.chart = {1, 2};
            p.coords[{3, 4}] = ProjPair::infinity();
            p.coords[{3, 5}] = ProjPair::infinity();
            p.coords[{4, 5}] = fresh();
            for (int q = 6; q <= n; ++q) p.coords[{3, q}] = fresh();
            for (int q = 6; q <= n; ++q) {
                p.coords[{4, q}] = ProjPair::zero();
                p.coords[{5, q}] = ProjPair::zero();
            }
            for (int q = 6; q <= n; ++q)
                for (int r = q + 1; r <= n; ++r) {
                    const auto bq = p.coords[{3, q}];
                    const auto br = p.coords[{3, r}];
                    p.coords[{q, r}] = ProjPair(bq.b() * br.a(), bq.a() * br.b());
                }
            push(std::move(p));
        }
    }
    if (out.size() > count) out.resize(count);
    return out;
}

}  // namespace gn2
