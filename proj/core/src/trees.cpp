#include "gn2/trees.hpp"

#include "gn2/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gn2 {

std::vector<std::vector<int>> StableTree::adjacency() const {
    std::vector<std::vector<int>> adj(vertices);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<std::vector<int>> StableTree::branches_at(int v) const {
    const auto adj = adjacency();
    std::vector<std::vector<int>> out;
    for (int start : adj[v]) {
        std::vector<int> leaves;
        std::vector<int> stack{start};
        std::vector<bool> seen(vertices, false);
        seen[v] = true;
        seen[start] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (u < n) leaves.push_back(u + 1);
            for (int w : adj[u]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(leaves.begin(), leaves.end());
        out.push_back(std::move(leaves));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> StableTree::splits() const {
    std::vector<std::vector<int>> out;
    const auto adj = adjacency();
    for (const auto& [a, b] : edges) {
        if (a < n || b < n) continue;  // pendant edge, not a split
        // Leaves on b's side of edge (a,b).
        std::vector<int> leaves;
        std::vector<int> stack{b};
        std::vector<bool> seen(vertices, false);
        seen[a] = true;
        seen[b] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (u < n) leaves.push_back(u + 1);
            for (int w : adj[u]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(leaves.begin(), leaves.end());
        if (!leaves.empty() && leaves.front() == 1) {
            // take the complement so the stored side avoids leaf 1
            std::vector<int> comp;
            std::size_t at = 0;
            for (int x = 1; x <= n; ++x) {
                if (at < leaves.size() && leaves[at] == x) ++at;
                else comp.push_back(x);
            }
            leaves = std::move(comp);
        }
        out.push_back(std::move(leaves));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool StableTree::is_stable() const {
    const auto adj = adjacency();
    if (static_cast<int>(edges.size()) != vertices - 1) return false;
    for (int v = 0; v < vertices; ++v) {
        const int deg = static_cast<int>(adj[v].size());
        if (v < n && deg != 1) return false;
        if (v >= n && deg < 3) return false;
    }
    // connectivity
    std::vector<bool> seen(vertices, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++count;
        for (int w : adj[u])
            if (!seen[w]) { seen[w] = true; stack.push_back(w); }
    }
    return count == vertices;
}

std::string StableTree::dot() const {
    std::ostringstream os;
    os << "graph stable_tree {\n";
    for (int v = 0; v < n; ++v)
        os << "  v" << v << " [label=\"" << (v + 1) << "\", shape=circle];\n";
    for (int v = n; v < vertices; ++v)
        os << "  v" << v << " [label=\"\", shape=point];\n";
    for (const auto& [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::vector<StableTree> enumerate_stable_trees(int n) {
    if (n < 3) throw Error("enumerate_stable_trees requires n >= 3");

    // Base: the star on 3 leaves.
    std::vector<StableTree> current;
    {
        StableTree star;
        star.n = 3;
        star.vertices = 4;
        star.edges = {{0, 3}, {1, 3}, {2, 3}};
        current.push_back(star);
    }

    for (int m = 4; m <= n; ++m) {
        std::map<std::vector<std::vector<int>>, StableTree> uniq;
        for (const auto& t : current) {
            // New leaf gets index m-1; internal vertices shift up by one.
            auto shift = [&](int v) { return v < m - 1 ? v : v + 1; };
            // (a) attach the new leaf to an existing internal vertex
            for (int v = m - 1; v < t.vertices; ++v) {
                StableTree s;
                s.n = m;
                s.vertices = t.vertices + 1;
                for (const auto& [x, y] : t.edges) s.edges.push_back({shift(x), shift(y)});
                s.edges.push_back({m - 1, shift(v)});
                uniq.emplace(s.splits(), s);
            }
            // (b) subdivide an edge and attach the new leaf there
            for (std::size_t e = 0; e < t.edges.size(); ++e) {
                StableTree s;
                s.n = m;
                s.vertices = t.vertices + 2;
                const int mid = t.vertices + 1;  // new internal vertex (post-shift)
                for (std::size_t f = 0; f < t.edges.size(); ++f) {
                    if (f == e) continue;
                    s.edges.push_back({shift(t.edges[f].first), shift(t.edges[f].second)});
                }
                s.edges.push_back({shift(t.edges[e].first), mid});
                s.edges.push_back({shift(t.edges[e].second), mid});
                s.edges.push_back({m - 1, mid});
                uniq.emplace(s.splits(), s);
            }
        }
        current.clear();
        for (auto& [sig, t] : uniq) current.push_back(std::move(t));
    }
    return current;
}

}  // namespace gn2
