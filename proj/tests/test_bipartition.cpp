#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>
#include <vector>

#include "diagsemi/bipartition.hpp"
#include "diagsemi/enumerate.hpp"
#include "diagsemi/errors.hpp"
#include "diagsemi/generators.hpp"
#include "doctest.h"

using namespace diagsemi;

namespace {

// Independent planarity oracle: place the 2k vertices on a circle in the
// order 1..k,k',..,1' and look for interleaved positions p1<p2<p3<p4 with
// blocks A,B,A,B.
bool planar_oracle(const Bipartition& a) {
    int k = a.degree();
    int n = 2 * k;
    std::vector<int> label(n);
    for (int j = 1; j <= k; ++j) {
        label[j - 1] = a.block_id(j);
        label[n - j] = a.block_id(-j);
    }
    for (int p1 = 0; p1 < n; ++p1)
        for (int p2 = p1 + 1; p2 < n; ++p2)
            for (int p3 = p2 + 1; p3 < n; ++p3)
                for (int p4 = p3 + 1; p4 < n; ++p4)
                    if (label[p1] == label[p3] && label[p2] == label[p4] &&
                        label[p1] != label[p2])
                        return false;
    return true;
}

}  // namespace

TEST_CASE("canonical labelling ignores input order") {
    Bipartition a = make_bipartition(3, {{1, 2, -1}, {3, -2, -3}});
    Bipartition b = make_bipartition(3, {{-3, 3, -2}, {2, 1, -1}});
    Bipartition c = make_bipartition(3, {{-1, 2, 1}, {-2, -3, 3}});
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.num_blocks() == 2);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make_bipartition(2, {{1, 2}, {-1}}), MissingVertex);
    CHECK_THROWS_AS(make_bipartition(2, {{1, 2, -1, -2}, {1}}),
                    DuplicateVertex);
    CHECK_THROWS_AS(make_bipartition(2, {{1, 2, -1, -2, 1}}), DuplicateVertex);
    CHECK_THROWS_AS(make_bipartition(2, {{1, 3, -1, -2}}), IndexOutOfRange);
    CHECK_THROWS_AS(make_bipartition(2, {{0, 1, 2, -1, -2}}), IndexOutOfRange);
    CHECK_THROWS_AS(make_bipartition(-1, {}), RangeError);
}

TEST_CASE("product worked example") {
    Bipartition a = from_text("[[1,5,4',5'],[2,3,4],[1'],[2',3']]");
    Bipartition b = from_text("[[1,4,5,1',2',3'],[2,3],[4',5']]");
    CHECK(to_text(product(a, b)) == "[[1,5,1',2',3'],[2,3,4],[4',5']]");
    CHECK_THROWS_AS(product(identity(2), identity(3)), DegreeMismatch);
}

TEST_CASE("product drops middle-only components") {
    // h1 * h1 = h1: the middle loop component must vanish.
    Bipartition h = diapsis(2, 1);
    CHECK(product(h, h) == h);
    CHECK(product(h, identity(2)) == h);
    CHECK(product(identity(2), h) == h);
}

TEST_CASE("star is a vertical flip") {
    Bipartition a = from_text("[[1,5,4',5'],[2,3,4],[1'],[2',3']]");
    CHECK(to_text(star(a)) == "[[1],[2,3],[4,5,1',5'],[2',3',4']]");
    for (const Bipartition& x : all_bipartitions(2).elements)
        CHECK(star(star(x)) == x);
}

TEST_CASE("hsum shifts the second factor") {
    Bipartition a = from_text("[[1,1']]");
    Bipartition b = from_text("[[1],[1']]");
    CHECK(to_text(hsum(a, b)) == "[[1,1'],[2],[2']]");
    CHECK(hsum(a, b).degree() == 2);
    CHECK(hsum(identity(0), a) == a);
    CHECK(hsum(a, identity(0)) == a);
}

TEST_CASE("rank counts transversal blocks") {
    CHECK(rank(identity(4)) == 4);
    CHECK(rank(diapsis(4, 1)) == 2);
    CHECK(rank(apsis(5, 3, 2)) == 2);
    Bipartition a = from_text("[[1,5,1',2',3'],[2,3,4],[4',5']]");
    CHECK(rank(a) == 1);
    CHECK(rank(star(a)) == 1);
}

TEST_CASE("block classification") {
    BlockType t = block_type({2, 3, 4});
    CHECK(t.upper == 3);
    CHECK(t.lower == 0);
    BlockType u = block_type({1, -1, -2});
    CHECK(u.upper == 1);
    CHECK(u.lower == 2);
    CHECK(is_uniform({1, -1}));
    CHECK(is_uniform({1, 2, -3, -4}));
    CHECK_FALSE(is_uniform({1, 2, -1}));
    CHECK(is_transversal_line({3, -3}));
    CHECK_FALSE(is_transversal_line({3, -2}));
    CHECK_FALSE(is_transversal_line({1, 2, -1, -2}));
    CHECK(is_m_apsis({2, 3, 4}, 3));
    CHECK(is_m_apsis({-1, -2}, 2));
    CHECK_FALSE(is_m_apsis({2, 4, 5}, 3));
    CHECK_FALSE(is_m_apsis({1, -1}, 2));
    CHECK_FALSE(is_m_apsis({2, 3}, 3));
}

TEST_CASE("planarity matches the chord-crossing oracle at degree 3") {
    int nonplanar = 0;
    for (const Bipartition& a : all_bipartitions(3).elements) {
        CHECK(is_planar(a) == planar_oracle(a));
        if (!is_planar(a)) nonplanar++;
    }
    CHECK(nonplanar == 203 - 132);  // bell(6) - catalan(6)
}

TEST_CASE("planarity spot checks") {
    CHECK(is_planar(identity(5)));
    CHECK_FALSE(is_planar(transposition(2, 1)));
    int planar = 0;
    for (const Bipartition& a : all_bipartitions(2).elements)
        if (is_planar(a)) planar++;
    CHECK(planar == 14);  // catalan(4)
}

TEST_CASE("modularity") {
    for (const Bipartition& a : all_bipartitions(2).elements)
        CHECK(is_modular(a, 1));
    CHECK(is_modular(transposition(3, 1), 2));
    CHECK(is_modular(diapsis(2, 1), 2));
    CHECK_FALSE(is_modular(monapsis(2, 1), 2));
    CHECK(is_modular(transapsis(3, 1), 3));  // (2,2) block: 2-2 = 0 mod 3
    CHECK_FALSE(is_modular(diapsis(4, 1), 3));
    CHECK_THROWS_AS(is_modular(identity(2), 0), RangeError);
    Bipartition v =
        from_text("[[1,8,9],[2,3,4,5,6,7],[1',2',3'],[4',5',6'],[7',8',9']]");
    CHECK(is_modular(v, 3));
}

TEST_CASE("patterns") {
    Pattern up = upper_pattern(diapsis(3, 1));
    CHECK(up.degree == 3);
    CHECK(up.non_transversals == std::vector<std::vector<int>>{{1, 2}});
    CHECK(up.transversals == std::vector<std::vector<int>>{{3}});
    Pattern low = lower_pattern(run(6, 3, 4, 2));
    CHECK(low.non_transversals == std::vector<std::vector<int>>{{2, 3, 4}});
    CHECK(low.transversals ==
          std::vector<std::vector<int>>{{1}, {5}, {6}});
    for (const Bipartition& a : all_bipartitions(2).elements) {
        CHECK(upper_pattern(star(a)) == lower_pattern(a));
        CHECK(lower_pattern(star(a)) == upper_pattern(a));
        CHECK((int)upper_pattern(a).transversals.size() == rank(a));
    }
}

TEST_CASE("text round trip") {
    for (const Bipartition& a : all_bipartitions(2).elements)
        CHECK(from_text(to_text(a)) == a);
    CHECK(from_text(" [[ 1 , 5,4' ,5'] ,[2,3,4],[1'],[2',3']] ") ==
          from_text("[[1,5,4',5'],[2,3,4],[1'],[2',3']]"));
    CHECK(from_text(to_text(identity(0))) == identity(0));
    CHECK(to_text(make_bipartition(2, {{-2, -1, 2, 1}})) == "[[1,2,1',2']]");
}

TEST_CASE("text parse errors") {
    CHECK_THROWS_AS(from_text(""), ParseError);
    CHECK_THROWS_AS(from_text("[[1,2]"), ParseError);
    CHECK_THROWS_AS(from_text("[[0,1,-1]]"), ParseError);
    CHECK_THROWS_AS(from_text("[[a]]"), ParseError);
    CHECK_THROWS_AS(from_text("[[1,2],[1',2']] rest"), ParseError);
    CHECK_THROWS_AS(from_text("[[1,3,1',2']]"), MissingVertex);
}

TEST_CASE("json round trip") {
    for (const Bipartition& a : all_bipartitions(2).elements)
        CHECK(from_json(to_json(a)) == a);
    Bipartition a = from_text("[[1,2,1'],[2']]");
    CHECK(to_json(a).find("\"k\":2") != std::string::npos);
    CHECK_THROWS_AS(from_json("{\"k\":2}"), ParseError);
    CHECK_THROWS_AS(from_json("not json"), ParseError);
}
