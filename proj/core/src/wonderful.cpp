#include "gn2/wonderful.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace gn2 {

void BuildingElement::canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

long BuildingElement::o_value() const {
    long o = 0;
    for (const auto& b : blocks) {
        const long s = static_cast<long>(b.size());
        o += s * (s - 1) / 2;
    }
    return o;
}

std::set<std::pair<int, int>> BuildingElement::forced_pairs() const {
    std::set<std::pair<int, int>> out;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) out.insert({b[i], b[j]});
    return out;
}

std::string BuildingElement::name() const {
    std::string s = "F^{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ',';
        for (int v : blocks[i]) s += std::to_string(v);
    }
    return s + "}";
}

BuildingElement closure(const std::vector<std::vector<int>>& triples) {
    if (triples.empty()) throw Error("closure of empty triple set");
    // Union-find over the union graph of the triangles.
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        if (parent[x] != x) parent[x] = find(parent[x]);
        return parent[x];
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& t : triples)
        for (int v : t)
            if (!parent.count(v)) parent[v] = v;
    for (const auto& t : triples)
        for (std::size_t i = 1; i < t.size(); ++i) unite(t[0], t[i]);

    std::map<int, std::vector<int>> comps;
    for (const auto& [v, _] : parent) comps[find(v)].push_back(v);
    BuildingElement e;
    for (auto& [root, members] : comps) e.blocks.push_back(std::move(members));
    e.canonicalize();
    return e;
}

BuildingElement merge(const BuildingElement& a, const BuildingElement& b) {
    std::vector<std::vector<int>> parts = a.blocks;
    parts.insert(parts.end(), b.blocks.begin(), b.blocks.end());
    return closure(parts);
}

bool refines(const BuildingElement& fine, const BuildingElement& coarse) {
    for (const auto& f : fine.blocks) {
        bool contained = false;
        for (const auto& c : coarse.blocks) {
            if (std::includes(c.begin(), c.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) return false;
    }
    return true;
}

namespace {

// All families of pairwise disjoint blocks of size >= 3 from `pool`
// (sorted). Recursion over the smallest unassigned symbol: skip it or put
// it in a fresh block with any >= 2 larger companions.
void families(const std::vector<int>& pool, std::size_t from,
              std::vector<std::vector<int>>& current,
              std::vector<BuildingElement>& out) {
    if (!current.empty()) {
        BuildingElement e;
        e.blocks = current;
        e.canonicalize();
        out.push_back(std::move(e));
    }
    for (std::size_t lead = from; lead < pool.size(); ++lead) {
        // Choose companions for pool[lead] among strictly larger symbols.
        std::vector<int> rest(pool.begin() + lead + 1, pool.end());
        const std::size_t r = rest.size();
        if (r < 2) break;
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            if (__builtin_popcount(mask) < 2) continue;
            std::vector<int> block{pool[lead]};
            std::vector<int> remaining_pool;
            for (std::size_t i = 0; i < r; ++i) {
                if ((mask >> i) & 1u) block.push_back(rest[i]);
                else remaining_pool.push_back(rest[i]);
            }
            current.push_back(block);
            families(remaining_pool, 0, current, out);
            current.pop_back();
        }
    }
}

}  // namespace

std::vector<BuildingElement> generate_building_set(int n) {
    if (n == 4) return {};
    if (n < 4) throw Error("building set requires n >= 4");
    std::vector<int> pool;
    for (int v = 3; v <= n; ++v) pool.push_back(v);
    std::vector<BuildingElement> out;
    std::vector<std::vector<int>> current;
    families(pool, 0, current, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BlowupSchedule schedule(const std::vector<BuildingElement>& elements) {
    BlowupSchedule s;
    s.order = elements;
    std::stable_sort(s.order.begin(), s.order.end(),
                     [](const BuildingElement& a, const BuildingElement& b) {
                         if (a.o_value() != b.o_value()) return a.o_value() > b.o_value();
                         return a < b;
                     });
    // Prefix validation: the closure of any two prefix members that is a
    // member of the full set must already lie in the prefix.
    std::set<BuildingElement> all(elements.begin(), elements.end());
    for (std::size_t len = 1; len <= s.order.size(); ++len) {
        std::set<BuildingElement> prefix(s.order.begin(), s.order.begin() + len);
        for (std::size_t a = 0; a < len; ++a) {
            for (std::size_t b = a + 1; b < len; ++b) {
                BuildingElement m = merge(s.order[a], s.order[b]);
                if (all.count(m) && !prefix.count(m))
                    throw ScheduleInvalid("prefix of length " + std::to_string(len) +
                                          " misses the intersection " + m.name());
            }
        }
    }
    return s;
}

std::vector<std::vector<BuildingElement>> nest_candidates(
    const std::vector<BuildingElement>& elements) {
    // All chains of the refinement order, by DFS extension with elements
    // later in canonical order.
    std::vector<std::vector<BuildingElement>> out;
    std::vector<BuildingElement> sorted = elements;
    std::sort(sorted.begin(), sorted.end());

    std::function<void(std::vector<BuildingElement>&, std::size_t)> extend =
        [&](std::vector<BuildingElement>& chain, std::size_t from) {
            if (!chain.empty()) out.push_back(chain);
            for (std::size_t i = from; i < sorted.size(); ++i) {
                bool comparable = true;
                for (const auto& c : chain) {
                    if (!refines(sorted[i], c) && !refines(c, sorted[i])) {
                        comparable = false;
                        break;
                    }
                }
                if (!comparable) continue;
                chain.push_back(sorted[i]);
                extend(chain, i + 1);
                chain.pop_back();
            }
        };
    std::vector<BuildingElement> chain;
    extend(chain, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string building_element_json(const BuildingElement& e) {
    nlohmann::json j;
    j["blocks"] = e.blocks;
    j["o"] = e.o_value();
    return j.dump();
}

std::string building_set_dot(const std::vector<BuildingElement>& elements) {
    std::ostringstream os;
    os << "digraph building_set {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < elements.size(); ++i)
        os << "  e" << i << " [label=\"" << elements[i].name() << "\"];\n";
    // Cover relations of the refinement order.
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
            if (i == j || !refines(elements[i], elements[j])) continue;
            if (elements[i] == elements[j]) continue;
            bool covered = false;
            for (std::size_t k = 0; k < elements.size(); ++k) {
                if (k == i || k == j) continue;
                if (refines(elements[i], elements[k]) && refines(elements[k], elements[j]) &&
                    !(elements[k] == elements[i]) && !(elements[k] == elements[j])) {
                    covered = true;
                    break;
                }
            }
            if (!covered) os << "  e" << i << " -> e" << j << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace gn2
