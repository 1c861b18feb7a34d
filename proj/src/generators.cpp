#include "diagsemi/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "diagsemi/errors.hpp"

namespace diagsemi {

namespace {

void check_index(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi)
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) +
                              " outside " + std::to_string(lo) + ".." +
                              std::to_string(hi));
}

std::vector<int> upper_range(int from, int to) {
    std::vector<int> v;
    for (int j = from; j <= to; j++) v.push_back(j);
    return v;
}

std::vector<int> lower_range(int from, int to) {
    std::vector<int> v;
    for (int j = from; j <= to; j++) v.push_back(-j);
    return v;
}

}  // namespace

Bipartition transposition(int k, int i) {
    check_index(i, 1, k - 1, "transposition");
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= k; j++) {
        if (j == i)
            blocks.push_back({i, -(i + 1)});
        else if (j == i + 1)
            blocks.push_back({i + 1, -i});
        else
            blocks.push_back({j, -j});
    }
    return make_bipartition(k, blocks);
}

Bipartition transapsis(int k, int i) {
    check_index(i, 1, k - 1, "transapsis");
    std::vector<std::vector<int>> blocks;
    blocks.push_back({i, i + 1, -i, -(i + 1)});
    for (int j = 1; j <= k; j++)
        if (j != i && j != i + 1) blocks.push_back({j, -j});
    return make_bipartition(k, blocks);
}

Bipartition apsis(int k, int m, int i) {
    if (m < 1) throw RangeError("apsis arity below 1");
    check_index(i, 1, k - m + 1, "apsis");
    std::vector<std::vector<int>> blocks;
    blocks.push_back(upper_range(i, i + m - 1));
    blocks.push_back(lower_range(i, i + m - 1));
    for (int j = 1; j <= k; j++)
        if (j < i || j > i + m - 1) blocks.push_back({j, -j});
    return make_bipartition(k, blocks);
}

Bipartition monapsis(int k, int i) { return apsis(k, 1, i); }
Bipartition diapsis(int k, int i) { return apsis(k, 2, i); }

Bipartition pf_forward(int k, int i) {
    check_index(i, 1, k, "pf_forward");
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j < i; j++) blocks.push_back({j, -j});
    blocks.push_back({k});
    blocks.push_back({-i});
    for (int j = i; j <= k - 1; j++) blocks.push_back({j, -(j + 1)});
    return make_bipartition(k, blocks);
}

Bipartition pf_backward(int k, int i) {
    check_index(i, 1, k, "pf_backward");
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j < i; j++) blocks.push_back({j, -j});
    blocks.push_back({i});
    blocks.push_back({-k});
    for (int j = i; j <= k - 1; j++) blocks.push_back({j + 1, -j});
    return make_bipartition(k, blocks);
}

Bipartition run(int k, int m, int i, int j) {
    return apmorph(k, m, {i}, {j});
}

Bipartition apmorph(int k, int m, const std::vector<int>& uppers,
                    const std::vector<int>& lowers) {
    if (m < 1) throw RangeError("apsis arity below 1");
    if (uppers.size() != lowers.size())
        throw DegreeMismatch("apmorph needs equally many upper and lower apses");
    auto starts = [&](const std::vector<int>& xs) {
        std::vector<int> v = xs;
        std::sort(v.begin(), v.end());
        for (int s : v) check_index(s, 1, k - m + 1, "apmorph apsis");
        for (std::size_t q = 1; q < v.size(); q++)
            if (v[q] < v[q - 1] + m)
                throw OverlapError("apses at " + std::to_string(v[q - 1]) +
                                   " and " + std::to_string(v[q]) + " overlap");
        return v;
    };
    std::vector<int> us = starts(uppers), ls = starts(lowers);
    std::vector<char> ucov(k + 1, 0), lcov(k + 1, 0);
    std::vector<std::vector<int>> blocks;
    for (int s : us) {
        blocks.push_back(upper_range(s, s + m - 1));
        for (int j = s; j < s + m; j++) ucov[j] = 1;
    }
    for (int s : ls) {
        blocks.push_back(lower_range(s, s + m - 1));
        for (int j = s; j < s + m; j++) lcov[j] = 1;
    }
    std::vector<int> ufree, lfree;
    for (int j = 1; j <= k; j++) {
        if (!ucov[j]) ufree.push_back(j);
        if (!lcov[j]) lfree.push_back(j);
    }
    for (std::size_t q = 0; q < ufree.size(); q++)
        blocks.push_back({ufree[q], -lfree[q]});
    return make_bipartition(k, blocks);
}

namespace {

void check_omega_args(int k, int m, int mu, int gamma) {
    if (m < 1) throw RangeError("modulus below 1");
    if (mu < 0 || mu > k || gamma < 0 || gamma > k)
        throw RangeError("transversal arm outside 0..k");
    if (mu + gamma == 0) throw RangeError("empty transversal");
    if ((mu - gamma) % m != 0)
        throw CongruenceViolation("arms " + std::to_string(mu) + " and " +
                                  std::to_string(gamma) +
                                  " differ mod " + std::to_string(m));
}

std::vector<int> transversal_block(int mu, int gamma) {
    std::vector<int> blk;
    for (int j = 1; j <= mu; j++) blk.push_back(j);
    for (int j = 1; j <= gamma; j++) blk.push_back(-j);
    return blk;
}

}  // namespace

Bipartition omega_bar(int k, int m, int mu, int gamma) {
    check_omega_args(k, m, mu, gamma);
    int kbar = std::max(mu, gamma);
    std::vector<std::vector<int>> blocks;
    blocks.push_back(transversal_block(mu, gamma));
    for (int s = mu + 1; s + m - 1 <= kbar; s += m)
        blocks.push_back(upper_range(s, s + m - 1));
    for (int s = gamma + 1; s + m - 1 <= kbar; s += m)
        blocks.push_back(lower_range(s, s + m - 1));
    for (int j = kbar + 1; j <= k; j++) blocks.push_back({j, -j});
    return make_bipartition(k, blocks);
}

Bipartition omega(int k, int m, int mu, int gamma) {
    check_omega_args(k, m, mu, gamma);
    if ((k - mu) % m != 0)
        throw CongruenceViolation("arm " + std::to_string(mu) +
                                  " not congruent to degree mod " +
                                  std::to_string(m));
    std::vector<std::vector<int>> blocks;
    blocks.push_back(transversal_block(mu, gamma));
    for (int s = mu + 1; s + m - 1 <= k; s += m)
        blocks.push_back(upper_range(s, s + m - 1));
    for (int s = gamma + 1; s + m - 1 <= k; s += m)
        blocks.push_back(lower_range(s, s + m - 1));
    return make_bipartition(k, blocks);
}

namespace {

void check_chain_args(int k, int m, const std::vector<std::pair<int, int>>& pairs) {
    if (m < 1) throw RangeError("modulus below 1");
    if (pairs.empty()) throw RangeError("empty chain");
    long smu = 0, sgamma = 0;
    for (auto [mu, gamma] : pairs) {
        if (mu < 1 || mu > k || gamma < 1 || gamma > k)
            throw RangeError("transversal arm outside 1..k");
        if ((mu - gamma) % m != 0)
            throw CongruenceViolation("arms " + std::to_string(mu) + " and " +
                                      std::to_string(gamma) + " differ mod " +
                                      std::to_string(m));
        smu += mu;
        sgamma += gamma;
    }
    if (smu > k || sgamma > k) throw RangeError("transversal arms exceed degree");
    if ((k - smu) % m != 0)
        throw CongruenceViolation("arm total not congruent to degree mod " +
                                  std::to_string(m));
}

// Transversals 2..r of a chain are right-packed: the j-th takes the mu_j
// uppers ending at k - (sum of arms after j), and likewise with gamma below.
void push_packed_transversals(std::vector<std::vector<int>>& blocks,
                              const std::vector<std::pair<int, int>>& pairs,
                              int k, std::size_t from) {
    long mu_tail = 0, gamma_tail = 0;
    for (std::size_t q = from; q < pairs.size(); q++) {
        mu_tail += pairs[q].first;
        gamma_tail += pairs[q].second;
    }
    for (std::size_t q = from; q < pairs.size(); q++) {
        std::vector<int> blk;
        for (int j = (int)(k - mu_tail) + 1; j <= (int)(k - mu_tail) + pairs[q].first; j++)
            blk.push_back(j);
        for (int j = (int)(k - gamma_tail) + 1; j <= (int)(k - gamma_tail) + pairs[q].second; j++)
            blk.push_back(-j);
        blocks.push_back(blk);
        mu_tail -= pairs[q].first;
        gamma_tail -= pairs[q].second;
    }
}

}  // namespace

Bipartition omega_chain(int k, int m,
                        const std::vector<std::pair<int, int>>& pairs) {
    check_chain_args(k, m, pairs);
    long smu = 0, sgamma = 0;
    for (auto [mu, gamma] : pairs) {
        smu += mu;
        sgamma += gamma;
    }
    int mu1 = pairs[0].first, gamma1 = pairs[0].second;
    std::vector<std::vector<int>> blocks;
    blocks.push_back(transversal_block(mu1, gamma1));
    for (int s = mu1 + 1; s + m - 1 <= (int)(k - smu + mu1); s += m)
        blocks.push_back(upper_range(s, s + m - 1));
    for (int s = gamma1 + 1; s + m - 1 <= (int)(k - sgamma + gamma1); s += m)
        blocks.push_back(lower_range(s, s + m - 1));
    push_packed_transversals(blocks, pairs, k, 1);
    return make_bipartition(k, blocks);
}

Bipartition upsilon_chain(int k, int m,
                          const std::vector<std::pair<int, int>>& pairs) {
    check_chain_args(k, m, pairs);
    long smu = 0, sgamma = 0;
    for (auto [mu, gamma] : pairs) {
        smu += mu;
        sgamma += gamma;
    }
    std::vector<std::vector<int>> blocks;
    for (int s = 1; s + m - 1 <= (int)(k - smu); s += m)
        blocks.push_back(upper_range(s, s + m - 1));
    for (int s = 1; s + m - 1 <= (int)(k - sgamma); s += m)
        blocks.push_back(lower_range(s, s + m - 1));
    push_packed_transversals(blocks, pairs, k, 0);
    return make_bipartition(k, blocks);
}

}  // namespace diagsemi
