#include "diagsemi/greens.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "diagsemi/counting.hpp"
#include "diagsemi/errors.hpp"

namespace diagsemi {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

GreensPartition from_labels(GreensRelation rel, const std::vector<int>& label) {
    GreensPartition p;
    p.relation = rel;
    int n = (int)label.size();
    p.class_of.assign(n, -1);
    std::map<int, int> compact;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = compact.emplace(label[i], (int)p.classes.size());
        if (fresh) p.classes.emplace_back();
        p.class_of[i] = it->second;
        p.classes[it->second].push_back(i);
    }
    return p;
}

void check_star_closed(const ElementSet& S) {
    for (const auto& a : S.elements)
        if (S.index_of(star(a)) < 0)
            throw NotStarClosed("element set is not closed under star");
}

// Strongly connected components over edges i -> adj[i][*]; labels are
// assigned so that scanning elements in order yields classes by least member.
std::vector<int> scc_labels(const std::vector<std::vector<int>>& adj) {
    int n = (int)adj.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<int> stack, frame_v, frame_e;
    std::vector<char> on_stack(n, 0);
    int next = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        frame_v.push_back(root);
        frame_e.push_back(0);
        while (!frame_v.empty()) {
            int v = frame_v.back();
            if (frame_e.back() == 0) {
                index[v] = low[v] = next++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (frame_e.back() < (int)adj[v].size()) {
                int w = adj[v][frame_e.back()++];
                if (index[w] < 0) {
                    frame_v.push_back(w);
                    frame_e.push_back(0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = v;
                    if (w == v) break;
                }
            }
            frame_v.pop_back();
            frame_e.pop_back();
            if (!frame_v.empty()) {
                int parent = frame_v.back();
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return comp;
}

std::vector<std::vector<int>> edge_list(const CayleyGraph& C, bool use_right,
                                        bool use_left) {
    std::size_t n = C.elements.elements.size();
    std::vector<std::vector<int>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (use_right)
            for (int w : C.right[i]) adj[i].push_back(w);
        if (use_left)
            for (int w : C.left[i]) adj[i].push_back(w);
    }
    return adj;
}

std::vector<int> pair_labels(const std::vector<int>& a,
                             const std::vector<int>& b) {
    std::map<std::pair<int, int>, int> compact;
    std::vector<int> label(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [it, fresh] =
            compact.emplace(std::make_pair(a[i], b[i]), (int)compact.size());
        label[i] = it->second;
    }
    return label;
}

std::vector<int> join_labels(const std::vector<int>& a,
                             const std::vector<int>& b) {
    int n = (int)a.size();
    UnionFind uf(n);
    std::map<int, int> first_a, first_b;
    for (int i = 0; i < n; ++i) {
        auto [ia, fa] = first_a.emplace(a[i], i);
        if (!fa) uf.unite(i, ia->second);
        auto [ib, fb] = first_b.emplace(b[i], i);
        if (!fb) uf.unite(i, ib->second);
    }
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[i] = uf.find(i);
    return label;
}

}  // namespace

bool pattern_compatible(const ElementSet& S, const Pattern& p,
                        const Pattern& q) {
    check_star_closed(S);
    for (const auto& a : S.elements)
        if (upper_pattern(a) == p && lower_pattern(a) == q) return true;
    return false;
}

GreensPartition classes_by_pattern(const ElementSet& S, GreensRelation rel) {
    check_star_closed(S);
    int n = (int)S.elements.size();
    std::vector<Pattern> up(n), low(n);
    std::map<Pattern, int> pat_id;
    for (int i = 0; i < n; ++i) {
        up[i] = upper_pattern(S.elements[i]);
        low[i] = lower_pattern(S.elements[i]);
        pat_id.emplace(up[i], (int)pat_id.size());
        pat_id.emplace(low[i], (int)pat_id.size());
    }
    auto pattern_labels = [&](const std::vector<Pattern>& pats) {
        std::vector<int> label(n);
        for (int i = 0; i < n; ++i) label[i] = pat_id.at(pats[i]);
        return label;
    };
    switch (rel) {
        case GreensRelation::R:
            return from_labels(rel, pattern_labels(up));
        case GreensRelation::L:
            return from_labels(rel, pattern_labels(low));
        case GreensRelation::H:
            return from_labels(
                rel, pair_labels(pattern_labels(up), pattern_labels(low)));
        case GreensRelation::D:
        case GreensRelation::J: {
            UnionFind uf((int)pat_id.size());
            for (int i = 0; i < n; ++i)
                uf.unite(pat_id.at(up[i]), pat_id.at(low[i]));
            std::vector<int> label(n);
            for (int i = 0; i < n; ++i) label[i] = uf.find(pat_id.at(up[i]));
            return from_labels(rel, label);
        }
    }
    throw RangeError("unknown relation");
}

GreensPartition classes_by_ideals(const CayleyGraph& C, GreensRelation rel) {
    switch (rel) {
        case GreensRelation::R:
            return from_labels(rel, scc_labels(edge_list(C, true, false)));
        case GreensRelation::L:
            return from_labels(rel, scc_labels(edge_list(C, false, true)));
        case GreensRelation::J:
            return from_labels(rel, scc_labels(edge_list(C, true, true)));
        case GreensRelation::H:
            return from_labels(
                rel, pair_labels(scc_labels(edge_list(C, true, false)),
                                 scc_labels(edge_list(C, false, true))));
        case GreensRelation::D:
            return from_labels(
                rel, join_labels(scc_labels(edge_list(C, true, false)),
                                 scc_labels(edge_list(C, false, true))));
    }
    throw RangeError("unknown relation");
}

BigNat count_d_classes(const Family& f, int k) {
    if (f.kind == FamilyKind::PMod) return d_classes_pmod(f.m, k);
    if (f.kind == FamilyKind::Mod) return d_classes_mod(f.m, k);
    throw UnsupportedFamily("class-count formulas cover mod and pmod only");
}

BigNat count_r_classes(const Family& f, int k) {
    if (f.kind == FamilyKind::PMod) return r_classes_pmod(f.m, k);
    if (f.kind == FamilyKind::Mod) return r_classes_mod(f.m, k);
    throw UnsupportedFamily("class-count formulas cover mod and pmod only");
}

}  // namespace diagsemi
