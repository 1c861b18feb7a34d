#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "diagsemi/bipartition.hpp"
#include "diagsemi/counting.hpp"
#include "diagsemi/enumerate.hpp"
#include "diagsemi/errors.hpp"
#include "diagsemi/families.hpp"
#include "diagsemi/generators.hpp"
#include "diagsemi/greens.hpp"
#include "doctest.h"

using namespace diagsemi;

namespace {

std::set<std::set<int>> as_sets(const GreensPartition& p) {
    std::set<std::set<int>> out;
    for (const auto& c : p.classes) out.insert({c.begin(), c.end()});
    return out;
}

// Partition refinement: every class of fine sits inside one class of coarse.
bool refines(const GreensPartition& fine, const GreensPartition& coarse) {
    for (std::size_t e = 0; e < fine.class_of.size(); ++e)
        for (std::size_t q = e + 1; q < fine.class_of.size(); ++q)
            if (fine.class_of[e] == fine.class_of[q] &&
                coarse.class_of[e] != coarse.class_of[q])
                return false;
    return true;
}

void check_pattern_vs_ideals(const Family& f, int k) {
    auto gens = generating_set(f, k);
    auto C = cayley(k, gens);
    for (auto rel : {GreensRelation::R, GreensRelation::L, GreensRelation::H,
                     GreensRelation::D, GreensRelation::J}) {
        auto a = classes_by_pattern(C.elements, rel);
        auto b = classes_by_ideals(C, rel);
        CHECK(as_sets(a) == as_sets(b));
    }
}

}  // namespace

TEST_CASE("pattern and ideal methods agree") {
    for (int k = 2; k <= 4; ++k) check_pattern_vs_ideals({FamilyKind::PMod, 2}, k);
    check_pattern_vs_ideals({FamilyKind::Mod, 2}, 3);
    check_pattern_vs_ideals({FamilyKind::Jones}, 4);
    check_pattern_vs_ideals({FamilyKind::Symmetric}, 3);
    check_pattern_vs_ideals({FamilyKind::Apsis, 3}, 4);
}

TEST_CASE("known class counts") {
    auto count = [](const Family& f, int k, GreensRelation rel) {
        auto S = close(k, generating_set(f, k));
        return classes_by_pattern(S, rel).classes.size();
    };
    CHECK(count({FamilyKind::PMod, 2}, 2, GreensRelation::D) == 3);
    CHECK(count({FamilyKind::PMod, 2}, 3, GreensRelation::D) == 4);
    CHECK(count({FamilyKind::PMod, 2}, 3, GreensRelation::R) == 6);
    CHECK(count({FamilyKind::Mod, 2}, 4, GreensRelation::D) == 6);
    CHECK(count({FamilyKind::Mod, 2}, 4, GreensRelation::R) == 31);
    CHECK(count({FamilyKind::Jones}, 4, GreensRelation::D) == 3);
    CHECK(count({FamilyKind::Symmetric}, 3, GreensRelation::D) == 1);
    CHECK(count({FamilyKind::Symmetric}, 3, GreensRelation::R) == 1);
    CHECK(count({FamilyKind::Symmetric}, 3, GreensRelation::H) == 1);
}

TEST_CASE("relation lattice invariants") {
    auto S = close(3, generating_set({FamilyKind::Mod, 2}, 3));
    auto R = classes_by_pattern(S, GreensRelation::R);
    auto L = classes_by_pattern(S, GreensRelation::L);
    auto H = classes_by_pattern(S, GreensRelation::H);
    auto D = classes_by_pattern(S, GreensRelation::D);
    auto J = classes_by_pattern(S, GreensRelation::J);
    CHECK(refines(H, R));
    CHECK(refines(H, L));
    CHECK(refines(R, D));
    CHECK(refines(L, D));
    CHECK(as_sets(D) == as_sets(J));
    CHECK(H.classes.size() >= R.classes.size());
    CHECK(H.classes.size() >= L.classes.size());
    for (std::size_t e = 0; e < S.elements.size(); ++e) {
        CHECK(H.class_of[e] >= 0);
        CHECK((std::size_t)H.class_of[e] < H.classes.size());
    }
}

TEST_CASE("star duality swaps R and L") {
    auto S = close(3, generating_set({FamilyKind::PMod, 2}, 3));
    auto R = classes_by_pattern(S, GreensRelation::R);
    auto L = classes_by_pattern(S, GreensRelation::L);
    std::map<int, int> starred;
    for (std::size_t e = 0; e < S.elements.size(); ++e)
        starred[(int)e] = S.index_of(star(S.elements[(int)e]));
    std::set<std::set<int>> rflip;
    for (const auto& c : R.classes) {
        std::set<int> img;
        for (int e : c) img.insert(starred[e]);
        rflip.insert(img);
    }
    CHECK(rflip == as_sets(L));
}

TEST_CASE("pattern method requires star closure") {
    std::vector<Bipartition> gens{pf_forward(2, 1)};
    auto S = close(2, gens);
    CHECK_THROWS_AS(classes_by_pattern(S, GreensRelation::R), NotStarClosed);
}

TEST_CASE("formula counts match enumerated classes") {
    for (int k = 2; k <= 5; ++k) {
        Family f{FamilyKind::PMod, 2};
        auto S = close(k, generating_set(f, k));
        auto D = classes_by_pattern(S, GreensRelation::D);
        auto R = classes_by_pattern(S, GreensRelation::R);
        CHECK(count_d_classes(f, k) == (long)D.classes.size());
        CHECK(count_r_classes(f, k) == (long)R.classes.size());
    }
    for (int k = 2; k <= 4; ++k) {
        Family f{FamilyKind::Mod, 2};
        auto S = close(k, generating_set(f, k));
        auto D = classes_by_pattern(S, GreensRelation::D);
        auto R = classes_by_pattern(S, GreensRelation::R);
        CHECK(count_d_classes(f, k) == (long)D.classes.size());
        CHECK(count_r_classes(f, k) == (long)R.classes.size());
    }
    CHECK_THROWS_AS(count_d_classes({FamilyKind::Jones}, 3), UnsupportedFamily);
    CHECK_THROWS_AS(count_r_classes({FamilyKind::Brauer}, 3),
                    UnsupportedFamily);
}
