#include "gn2/cortege.hpp"

#include "gn2/chamber.hpp"
#include "gn2/lp.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace gn2 {

void Cortege::canonicalize() { std::sort(members.begin(), members.end()); }

DecompositionContext::DecompositionContext(int n, std::uint64_t seed, std::size_t npoints)
    : n_(n) {
    if (n < 3 || n > 7) throw Error("decomposition search supports 3 <= n <= 7");
    for (const auto& m : enumerate_admissible(n, /*full_dim_only=*/true))
        geoms_.push_back(geometry_of(m));
    for (std::size_t i = 0; i < geoms_.size(); ++i)
        index_[geoms_[i].matroid] = static_cast<int>(i);
    total_volume_ = 0;
    for (const auto& g : geoms_)
        if (g.matroid.k() == n) total_volume_ = g.volume;  // the hypersimplex itself
    if (npoints == 0) {
        const std::size_t defaults[] = {0, 0, 0, 8, 64, 600, 4000, 12000};
        npoints = defaults[n];
    }
    points_ = sample_generic_points(n, seed, npoints);

    // Keep one point per strict-membership signature; extra points add no
    // pruning power.
    std::set<std::vector<bool>> seen;
    std::vector<QVec> kept;
    for (const auto& p : points_) {
        std::vector<bool> sig(geoms_.size());
        for (std::size_t g = 0; g < geoms_.size(); ++g)
            sig[g] = strictly_inside(p, geoms_[g].rows, geoms_[g].eqs);
        if (seen.insert(sig).second) kept.push_back(p);
    }
    points_ = std::move(kept);
}

int DecompositionContext::index_of(const Rank2Matroid& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw Error("matroid not in full-dimensional census: " + m.name());
    return it->second;
}

bool DecompositionContext::interiors_disjoint(int i, int j) {
    if (i == j) return false;
    auto key = std::minmax(i, j);
    auto it = disjoint_cache_.find(key);
    if (it != disjoint_cache_.end()) return it->second;

    bool result;
    // Covering-pair certificate: classes A, B with A u B = {1..n} force
    // x(A) + x(B) >= 2 while strict interiors need < 2.
    bool covered = false;
    for (const auto& a : geoms_[i].matroid.classes) {
        for (const auto& b : geoms_[j].matroid.classes) {
            std::vector<bool> hit(n_ + 1, false);
            for (int v : a) hit[v] = true;
            for (int v : b) hit[v] = true;
            bool all = true;
            for (int v = 1; v <= n_; ++v)
                if (!hit[v]) { all = false; break; }
            if (all) { covered = true; break; }
        }
        if (covered) break;
    }
    if (covered) {
        result = true;
    } else {
        LinearSystem sys(n_);
        for (const auto& e : geoms_[i].eqs) sys.add_eq(e.normal, e.offset);
        for (const auto& r : geoms_[i].rows) sys.add_le(r.normal, r.offset, /*strict=*/true);
        for (const auto& r : geoms_[j].rows) sys.add_le(r.normal, r.offset, /*strict=*/true);
        result = !find_strict_point(sys).has_value();
    }
    disjoint_cache_[key] = result;
    return result;
}

bool is_decomposition(DecompositionContext& ctx, const Cortege& c) {
    if (c.members.empty()) return false;
    std::vector<int> ids;
    for (const auto& m : c.members) {
        if (!m.full_dimensional())
            throw DimensionMismatch("is_decomposition: member " + m.name() +
                                    " is not full-dimensional");
        ids.push_back(ctx.index_of(m));
    }
    Rat vol = 0;
    for (int id : ids) vol += ctx.geoms()[id].volume;
    if (vol != ctx.total_volume()) return false;
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (!ctx.interiors_disjoint(ids[a], ids[b])) return false;
    return true;
}

namespace {

struct Search {
    DecompositionContext& ctx;
    std::set<std::vector<int>> found;  // sorted member id lists

    void record(std::vector<int> chosen) {
        std::sort(chosen.begin(), chosen.end());
        found.insert(std::move(chosen));
    }

    // Subset phase: all sample points covered but volume remains.
    void fallback(const std::vector<int>& chosen, const std::vector<int>& avail,
                  std::size_t pos, const Rat& remaining) {
        if (remaining == 0) {
            record(chosen);
            return;
        }
        if (pos >= avail.size()) return;
        Rat reach = 0;
        for (std::size_t k = pos; k < avail.size(); ++k) reach += ctx.geoms()[avail[k]].volume;
        if (reach < remaining) return;

        fallback(chosen, avail, pos + 1, remaining);  // skip avail[pos]

        const int g = avail[pos];
        if (ctx.geoms()[g].volume <= remaining) {
            std::vector<int> chosen2 = chosen;
            chosen2.push_back(g);
            std::vector<int> avail2;
            for (std::size_t k = pos + 1; k < avail.size(); ++k)
                if (ctx.interiors_disjoint(g, avail[k])) avail2.push_back(avail[k]);
            fallback(chosen2, avail2, 0, remaining - ctx.geoms()[g].volume);
        }
    }

    void run(const std::vector<int>& chosen, const std::vector<int>& avail,
             const Rat& remaining) {
        if (remaining == 0) {
            record(chosen);
            return;
        }
        // First sample point not strictly inside any chosen member.
        const auto& pts = ctx.sample_points();
        std::size_t uncovered = pts.size();
        for (std::size_t p = 0; p < pts.size(); ++p) {
            bool covered = false;
            for (int g : chosen) {
                if (strictly_inside(pts[p], ctx.geoms()[g].rows, ctx.geoms()[g].eqs)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) { uncovered = p; break; }
        }
        if (uncovered == pts.size()) {
            fallback(chosen, avail, 0, remaining);
            return;
        }
        const QVec& pt = pts[uncovered];
        for (int g : avail) {
            if (ctx.geoms()[g].volume > remaining) continue;
            if (!strictly_inside(pt, ctx.geoms()[g].rows, ctx.geoms()[g].eqs)) continue;
            std::vector<int> chosen2 = chosen;
            chosen2.push_back(g);
            std::vector<int> avail2;
            for (int h : avail)
                if (h != g && ctx.interiors_disjoint(g, h)) avail2.push_back(h);
            run(chosen2, avail2, remaining - ctx.geoms()[g].volume);
        }
    }
};

}  // namespace

std::vector<Cortege> enumerate_decompositions(DecompositionContext& ctx) {
    Search search{ctx, {}};
    std::vector<int> avail(ctx.geoms().size());
    for (std::size_t i = 0; i < avail.size(); ++i) avail[i] = static_cast<int>(i);
    search.run({}, avail, ctx.total_volume());

    std::vector<Cortege> out;
    for (const auto& ids : search.found) {
        Cortege c;
        c.n = ctx.n();
        for (int id : ids) c.members.push_back(ctx.geoms()[id].matroid);
        c.canonicalize();
        if (!is_decomposition(ctx, c))
            throw Error("internal: search produced a non-decomposition");
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Cortege tree_to_cortege(const StableTree& t) {
    Cortege c;
    c.n = t.n;
    for (int v = t.n; v < t.vertices; ++v) {
        Rank2Matroid m;
        m.n = t.n;
        m.classes = t.branches_at(v);
        m.canonicalize();
        c.members.push_back(std::move(m));
    }
    c.canonicalize();
    return c;
}

BijectionReport bijection_check(DecompositionContext& ctx) {
    BijectionReport rep;
    const auto trees = enumerate_stable_trees(ctx.n());
    rep.tree_count = trees.size();

    std::set<Cortege> images;
    for (const auto& t : trees) {
        Cortege c = tree_to_cortege(t);
        if (!images.insert(c).second) {
            rep.detail = "tree_to_cortege not injective near cortege " + cortege_json(c);
            return rep;
        }
    }
    const auto decs = enumerate_decompositions(ctx);
    rep.decomposition_count = decs.size();
    std::set<Cortege> decset(decs.begin(), decs.end());
    for (const auto& c : images) {
        if (!decset.count(c)) {
            rep.detail = "tree image is not an enumerated decomposition: " + cortege_json(c);
            return rep;
        }
    }
    for (const auto& c : decset) {
        if (!images.count(c)) {
            rep.detail = "decomposition not covered by any tree: " + cortege_json(c);
            return rep;
        }
    }
    rep.ok = images.size() == decset.size();
    return rep;
}

std::string cortege_json(const Cortege& c) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& m : c.members) j.push_back(nlohmann::json::parse(matroid_json(m)));
    return j.dump();
}

}  // namespace gn2
