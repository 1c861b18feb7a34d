#include "diagsemi/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "diagsemi/errors.hpp"

namespace diagsemi {

int ElementSet::index_of(const Bipartition& a) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), a);
    if (it == elements.end() || !(*it == a)) return -1;
    return (int)(it - elements.begin());
}

namespace {

void check_degrees(int k, const std::vector<Bipartition>& gens) {
    for (const auto& g : gens)
        if (g.degree() != k)
            throw DegreeMismatch("generator degree " +
                                 std::to_string(g.degree()) +
                                 " does not match " + std::to_string(k));
}

std::vector<Bipartition> bfs_closure(int k,
                                     const std::vector<Bipartition>& gens,
                                     std::size_t max_elements) {
    std::unordered_map<Bipartition, int> seen;
    std::vector<Bipartition> order;
    order.push_back(identity(k));
    seen.emplace(order[0], 0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        Bipartition cur = order[head];
        for (const auto& g : gens) {
            Bipartition next = product(cur, g);
            if (seen.emplace(next, (int)order.size()).second) {
                if (order.size() >= max_elements)
                    throw ExplosionGuard("closure exceeds " +
                                         std::to_string(max_elements) +
                                         " elements");
                order.push_back(next);
            }
        }
    }
    return order;
}

}  // namespace

ElementSet close(int k, const std::vector<Bipartition>& gens,
                 std::size_t max_elements) {
    if (k < 0) throw RangeError("degree must be >= 0");
    check_degrees(k, gens);
    ElementSet set;
    set.k = k;
    set.elements = bfs_closure(k, gens, max_elements);
    std::sort(set.elements.begin(), set.elements.end());
    return set;
}

ElementSet close(const std::vector<Bipartition>& gens,
                 std::size_t max_elements) {
    if (gens.empty())
        throw RangeError("cannot infer degree from an empty generating set");
    return close(gens[0].degree(), gens, max_elements);
}

CayleyGraph cayley(int k, const std::vector<Bipartition>& gens,
                   std::size_t max_elements) {
    CayleyGraph g;
    g.elements = close(k, gens, max_elements);
    g.generators = gens;
    std::size_t n = g.elements.elements.size();
    g.right.assign(n, std::vector<int>(gens.size(), -1));
    g.left.assign(n, std::vector<int>(gens.size(), -1));
    for (std::size_t i = 0; i < n; ++i) {
        const Bipartition& x = g.elements.elements[i];
        for (std::size_t j = 0; j < gens.size(); ++j) {
            g.right[i][j] = g.elements.index_of(product(x, gens[j]));
            g.left[i][j] = g.elements.index_of(product(gens[j], x));
        }
    }
    return g;
}

ElementSet all_bipartitions(int k, int degree_limit) {
    if (k < 0) throw RangeError("degree must be >= 0");
    if (k > degree_limit)
        throw LimitExceeded("degree " + std::to_string(k) +
                            " exceeds limit " + std::to_string(degree_limit));
    ElementSet set;
    set.k = k;
    int n = 2 * k;
    // Restricted growth strings over the canonical slot order are exactly
    // the canonical id vectors, and lex order on them is canonical order.
    std::vector<int> rgs(n, 0);
    if (n == 0) {
        set.elements.push_back(identity(0));
        return set;
    }
    int pos = 1;
    std::vector<int> maxpfx(n, 0);
    while (true) {
        if (pos == n) {
            set.elements.push_back(Bipartition::from_raw_ids(k, rgs));
            --pos;
            while (pos >= 1 && rgs[pos] > maxpfx[pos - 1]) --pos;
            if (pos < 1) break;
            ++rgs[pos];
            maxpfx[pos] = std::max(maxpfx[pos - 1], rgs[pos]);
            ++pos;
        } else {
            rgs[pos] = 0;
            maxpfx[pos] = maxpfx[pos - 1];
            ++pos;
        }
    }
    return set;
}

}  // namespace diagsemi
