#include "gn2/matroid.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace gn2 {

void Rank2Matroid::canonicalize() {
    std::sort(loops.begin(), loops.end());
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::string Rank2Matroid::name() const {
    std::string s;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i) s += '|';
        for (int v : classes[i]) s += std::to_string(v);
    }
    if (!loops.empty()) {
        s += ";loops=";
        for (std::size_t i = 0; i < loops.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(loops[i]);
        }
    }
    return s;
}

bool operator<(const Rank2Matroid& a, const Rank2Matroid& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.loops != b.loops) return a.loops < b.loops;
    auto sizes = [](const Rank2Matroid& m) {
        std::vector<int> s;
        for (const auto& c : m.classes) s.push_back(static_cast<int>(c.size()));
        std::sort(s.begin(), s.end());
        return s;
    };
    const auto sa = sizes(a), sb = sizes(b);
    if (sa != sb) return sa < sb;
    return a.classes < b.classes;
}

AdmissibleSet sigma_of(const Rank2Matroid& m) {
    AdmissibleSet s;
    s.n = m.n;
    for (std::size_t a = 0; a < m.classes.size(); ++a)
        for (std::size_t b = a + 1; b < m.classes.size(); ++b)
            for (int i : m.classes[a])
                for (int j : m.classes[b]) s.pairs.insert(make_pair_sorted(i, j));
    return s;
}

std::optional<Rank2Matroid> recognize(const AdmissibleSet& sigma) {
    if (sigma.pairs.empty()) return std::nullopt;
    const int n = sigma.n;
    std::vector<bool> touched(n + 1, false);
    for (const auto& [i, j] : sigma.pairs) {
        if (i < 1 || j > n) return std::nullopt;
        touched[i] = touched[j] = true;
    }
    Rank2Matroid m;
    m.n = n;
    std::vector<int> nonloops;
    for (int i = 1; i <= n; ++i) {
        if (touched[i]) nonloops.push_back(i);
        else m.loops.push_back(i);
    }
    // i ~ j iff {i,j} is NOT in sigma; admissible iff ~ is an equivalence
    // relation whose cross pairs are exactly sigma.
    std::vector<int> cls(n + 1, -1);
    int next = 0;
    for (int i : nonloops) {
        if (cls[i] != -1) continue;
        cls[i] = next;
        m.classes.emplace_back(1, i);
        for (int j : nonloops) {
            if (j <= i || cls[j] != -1) continue;
            if (!sigma.pairs.count(make_pair_sorted(i, j))) {
                cls[j] = next;
                m.classes.back().push_back(j);
            }
        }
        ++next;
    }
    if (m.k() < 2) return std::nullopt;
    m.canonicalize();
    if (!(sigma_of(m).pairs == sigma.pairs)) return std::nullopt;
    return m;
}

std::vector<QVec> matroid_vertices(const Rank2Matroid& m) {
    std::vector<QVec> pts;
    for (const auto& [i, j] : sigma_of(m).pairs) {
        QVec v(m.n, Rat(0));
        v[i - 1] = 1;
        v[j - 1] = 1;
        pts.push_back(std::move(v));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

PolytopeV polytope_of(const Rank2Matroid& m) { return hull(matroid_vertices(m)); }

void matroid_rows(const Rank2Matroid& m, std::vector<Hyperplane>& rows,
                  std::vector<Hyperplane>& eqs) {
    rows.clear();
    eqs.clear();
    const int n = m.n;
    eqs.push_back({QVec(n, Rat(1)), Rat(2)});
    for (int l : m.loops) {
        QVec e(n, Rat(0));
        e[l - 1] = 1;
        eqs.push_back({std::move(e), Rat(0)});
    }
    std::vector<bool> is_loop(n + 1, false);
    for (int l : m.loops) is_loop[l] = true;
    for (int i = 1; i <= n; ++i) {
        if (is_loop[i]) continue;
        QVec a(n, Rat(0));
        a[i - 1] = -1;
        rows.push_back({std::move(a), Rat(0)});  // x_i >= 0
    }
    for (const auto& c : m.classes) {
        QVec a(n, Rat(0));
        for (int i : c) a[i - 1] = 1;
        rows.push_back({std::move(a), Rat(1)});  // x(class) <= 1
    }
}

ParamDescriptor param_space(const Rank2Matroid& m) {
    ParamDescriptor d;
    d.k = m.k();
    d.dim = std::max(d.k - 3, 0);
    d.kind = d.k <= 3 ? ParamDescriptor::Point : ParamDescriptor::M0k;
    return d;
}

namespace {

// Set partitions of `items` into at least min_blocks blocks, via restricted
// growth strings.
void partitions_of(const std::vector<int>& items, int min_blocks,
                   std::vector<std::vector<std::vector<int>>>& out) {
    const int sz = static_cast<int>(items.size());
    if (sz == 0) return;
    std::vector<int> rgs(sz, 0);
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks >= min_blocks) {
            std::vector<std::vector<int>> part(blocks);
            for (int i = 0; i < sz; ++i) part[rgs[i]].push_back(items[i]);
            out.push_back(std::move(part));
        }
        // next restricted growth string
        int i = sz - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) { ++rgs[i]; break; }
            rgs[i] = 0;
        }
        if (i == 0) break;
    }
}

}  // namespace

std::vector<Rank2Matroid> enumerate_admissible(int n, bool full_dim_only) {
    if (n < 3) throw Error("enumerate_admissible requires n >= 3");
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;

    std::vector<Rank2Matroid> out;
    auto emit = [&](const std::vector<int>& loops,
                    std::vector<std::vector<int>> classes) {
        Rank2Matroid m;
        m.n = n;
        m.loops = loops;
        m.classes = std::move(classes);
        m.canonicalize();
        out.push_back(std::move(m));
    };

    if (full_dim_only) {
        std::vector<std::vector<std::vector<int>>> parts;
        partitions_of(all, 3, parts);
        for (auto& p : parts) emit({}, std::move(p));
    } else {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> loops, rest;
            for (int i = 0; i < n; ++i)
                ((mask >> i) & 1u ? loops : rest).push_back(i + 1);
            if (rest.size() < 2) continue;
            std::vector<std::vector<std::vector<int>>> parts;
            partitions_of(rest, 2, parts);
            for (auto& p : parts) emit(loops, std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolytopeGeom geometry_of(const Rank2Matroid& m) {
    PolytopeGeom g;
    g.matroid = m;
    g.vertices = matroid_vertices(m);
    matroid_rows(m, g.rows, g.eqs);
    g.volume = normalized_volume(g.vertices, g.rows);
    return g;
}

std::string matroid_json(const Rank2Matroid& m) {
    nlohmann::json j;
    j["n"] = m.n;
    j["loops"] = m.loops;
    j["classes"] = m.classes;
    return j.dump();
}

Rank2Matroid matroid_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Rank2Matroid m;
    m.n = j.at("n").get<int>();
    m.loops = j.at("loops").get<std::vector<int>>();
    m.classes = j.at("classes").get<std::vector<std::vector<int>>>();
    m.canonicalize();
    return m;
}

}  // namespace gn2
