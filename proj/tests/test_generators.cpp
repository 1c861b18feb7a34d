#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <utility>
#include <vector>

#include "diagsemi/bipartition.hpp"
#include "diagsemi/errors.hpp"
#include "diagsemi/generators.hpp"
#include "doctest.h"

using namespace diagsemi;

namespace {

Bipartition apsis_chain(int k, int m, const std::vector<int>& starts) {
    Bipartition out = identity(k);
    for (int i : starts) out = product(out, apsis(k, m, i));
    return out;
}

Bipartition transapsis_chain(int k, int hi) {
    Bipartition out = identity(k);
    for (int i = 1; i <= hi; ++i) out = product(out, transapsis(k, i));
    return out;
}

std::vector<int> tiling(int from, int to, int m) {
    std::vector<int> starts;
    for (int i = from; i + m - 1 <= to; i += m) starts.push_back(i);
    return starts;
}

}  // namespace

TEST_CASE("basic generator shapes") {
    CHECK(to_text(transposition(4, 2)) == "[[1,1'],[2,3'],[3,2'],[4,4']]");
    CHECK(to_text(transapsis(4, 2)) == "[[1,1'],[2,3,2',3'],[4,4']]");
    CHECK(to_text(apsis(5, 3, 2)) == "[[1,1'],[2,3,4],[5,5'],[2',3',4']]");
    CHECK(monapsis(3, 2) == apsis(3, 1, 2));
    CHECK(diapsis(3, 2) == apsis(3, 2, 2));
    CHECK(to_text(monapsis(2, 1)) == "[[1],[2,2'],[1']]");
    CHECK(to_text(diapsis(2, 1)) == "[[1,2],[1',2']]");
}

TEST_CASE("generator index errors") {
    CHECK_THROWS_AS(transposition(3, 0), IndexOutOfRange);
    CHECK_THROWS_AS(transposition(3, 3), IndexOutOfRange);
    CHECK_THROWS_AS(transapsis(3, 3), IndexOutOfRange);
    CHECK_THROWS_AS(apsis(3, 4, 1), IndexOutOfRange);
    CHECK_THROWS_AS(apsis(5, 3, 4), IndexOutOfRange);
    CHECK_THROWS_AS(apsis(5, 0, 1), RangeError);
    CHECK_THROWS_AS(pf_forward(3, 4), IndexOutOfRange);
    CHECK_THROWS_AS(pf_backward(3, 0), IndexOutOfRange);
}

TEST_CASE("planar partial-shift generators") {
    CHECK(to_text(pf_forward(4, 2)) == "[[1,1'],[2,3'],[3,4'],[4],[2']]");
    CHECK(to_text(pf_backward(4, 2)) == "[[1,1'],[2],[3,2'],[4,3'],[4']]");
    CHECK(to_text(pf_forward(4, 4)) == "[[1,1'],[2,2'],[3,3'],[4],[4']]");
    CHECK(pf_backward(4, 4) == pf_forward(4, 4));
    for (int k = 1; k <= 5; ++k)
        for (int i = 1; i <= k; ++i)
            CHECK(star(pf_forward(k, i)) == pf_backward(k, i));
}

TEST_CASE("run and apmorph") {
    CHECK(to_text(run(6, 3, 4, 2)) ==
          "[[1,1'],[2,5'],[3,6'],[4,5,6],[2',3',4']]");
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            CHECK(star(run(6, 3, i, j)) == run(6, 3, j, i));
    CHECK(apmorph(6, 3, {}, {}) == identity(6));
    CHECK_THROWS_AS(apmorph(6, 3, {1, 2}, {1, 4}), OverlapError);
    CHECK_THROWS_AS(apmorph(6, 3, {1}, {1, 4}), DegreeMismatch);
    // Two disjoint upper apses of arity 2 against two lower ones.
    CHECK(to_text(apmorph(6, 2, {1, 4}, {2, 5})) ==
          "[[1,2],[3,1'],[4,5],[6,4'],[2',3'],[5',6']]");
}

TEST_CASE("omega shapes") {
    CHECK(to_text(omega_bar(8, 2, 2, 6)) ==
          "[[1,2,1',2',3',4',5',6'],[3,4],[5,6],[7,7'],[8,8']]");
    CHECK(to_text(omega(4, 2, 2, 2)) == "[[1,2,1',2'],[3,4],[3',4']]");
    CHECK(omega_bar(4, 2, 2, 2) ==
          make_bipartition(4, {{1, 2, -1, -2}, {3, -3}, {4, -4}}));
    CHECK_THROWS_AS(omega_bar(8, 2, 0, 0), RangeError);
    CHECK_THROWS_AS(omega_bar(8, 2, 1, 2), CongruenceViolation);
    CHECK_THROWS_AS(omega_bar(8, 2, 9, 1), RangeError);
    CHECK_THROWS_AS(omega(8, 2, 3, 3), CongruenceViolation);
}

TEST_CASE("chain shapes") {
    std::vector<std::pair<int, int>> pairs{{3, 1}, {1, 3}};
    CHECK(to_text(omega_chain(4, 2, pairs)) == "[[1,2,3,1'],[4,2',3',4']]");
    CHECK(to_text(upsilon_chain(4, 2, pairs)) == "[[1,2,3,1'],[4,2',3',4']]");
    CHECK_THROWS_AS(omega_chain(4, 2, {}), RangeError);
    CHECK_THROWS_AS(omega_chain(4, 2, {{3, 1}, {2, 3}}), CongruenceViolation);
    CHECK_THROWS_AS(omega_chain(4, 2, {{1, 1}, {2, 2}}), CongruenceViolation);
    CHECK_THROWS_AS(omega_chain(4, 2, {{4, 4}, {2, 2}}), RangeError);
    CHECK_THROWS_AS(omega_chain(4, 2, {{5, 5}}), RangeError);
}

TEST_CASE("omega factorizations") {
    for (auto [m, kmax] : {std::pair<int, int>{2, 8}, {3, 9}}) {
        for (int k = m; k <= kmax; ++k) {
            for (int mu = 0; mu <= k; ++mu) {
                for (int gamma = 0; gamma <= k; ++gamma) {
                    if (mu + gamma == 0 || (mu - gamma) % m != 0) continue;
                    Bipartition wbar = omega_bar(k, m, mu, gamma);
                    Bipartition expect;
                    if (mu == gamma) {
                        expect = transapsis_chain(k, mu - 1);
                    } else if (mu > gamma) {
                        expect = product(
                            transapsis_chain(k, mu - 1),
                            apsis_chain(k, m, tiling(gamma + 1, mu, m)));
                    } else {
                        expect = product(
                            apsis_chain(k, m, tiling(mu + 1, gamma, m)),
                            transapsis_chain(k, gamma - 1));
                    }
                    CHECK(wbar == expect);
                    if ((k - mu) % m == 0) {
                        int kbar = std::max(mu, gamma);
                        Bipartition w = omega(k, m, mu, gamma);
                        CHECK(w == product(wbar, apsis_chain(
                                                     k, m,
                                                     tiling(kbar + 1, k, m))));
                    }
                }
            }
        }
    }
}

TEST_CASE("chain factorizations") {
    for (auto [m, kmax] : {std::pair<int, int>{2, 8}, {3, 9}}) {
        for (int k = m; k <= kmax; ++k) {
            // Single-link chains coincide with omega.
            for (int mu = 1; mu <= k; ++mu)
                for (int gamma = 1; gamma <= k; ++gamma) {
                    if ((mu - gamma) % m != 0 || (k - mu) % m != 0) continue;
                    CHECK(omega_chain(k, m, {{mu, gamma}}) ==
                          omega(k, m, mu, gamma));
                }
            // Two-link chains split into an omega link and a shorter chain.
            for (int mu1 = 1; mu1 <= k; ++mu1)
                for (int g1 = 1; g1 <= k; ++g1)
                    for (int mu2 = 1; mu2 <= k; ++mu2)
                        for (int g2 = 1; g2 <= k; ++g2) {
                            if ((mu1 - g1) % m != 0 || (mu2 - g2) % m != 0)
                                continue;
                            if (mu1 + mu2 > k || g1 + g2 > k) continue;
                            if ((mu1 + mu2 - k) % m != 0) continue;
                            std::vector<std::pair<int, int>> pairs{{mu1, g1},
                                                                   {mu2, g2}};
                            std::vector<std::pair<int, int>> rest{{mu2, g2}};
                            Bipartition lhs = omega_chain(k, m, pairs);
                            Bipartition rhs;
                            if (mu1 >= g1) {
                                rhs = product(
                                    hsum(omega(k - mu2, m, mu1, g1),
                                         identity(mu2)),
                                    hsum(identity(g1),
                                         upsilon_chain(k - g1, m, rest)));
                            } else {
                                rhs = product(
                                    hsum(identity(mu1),
                                         upsilon_chain(k - mu1, m, rest)),
                                    hsum(omega(k - g2, m, mu1, g1),
                                         identity(g2)));
                            }
                            CHECK(lhs == rhs);
                        }
        }
    }
}
