#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "diagsemi/bignat.hpp"
#include "diagsemi/bipartition.hpp"
#include "diagsemi/counting.hpp"
#include "diagsemi/enumerate.hpp"
#include "diagsemi/errors.hpp"
#include "diagsemi/families.hpp"
#include "diagsemi/generators.hpp"
#include "diagsemi/greens.hpp"
#include "diagsemi/tables.hpp"
#include "diagsemi/words.hpp"

using namespace diagsemi;

namespace {

struct Gate {
    bool ok = true;
    std::vector<std::string> notes;
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (notes.size() < 8) notes.push_back(what);
    }
};

std::optional<std::string> fixture_bytes(const std::string& name) {
    std::ifstream in(std::string(DIAGSEMI_FIXTURES_DIR) + "/" + name + ".csv",
                     std::ios::binary);
    if (!in.good()) return std::nullopt;
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::string> fixture_rows(const std::string& name) {
    std::ifstream in(std::string(DIAGSEMI_FIXTURES_DIR) + "/" + name + ".csv");
    std::vector<std::string> rows;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(line);
    return rows;
}

void check_tables(Gate& g, const std::vector<std::string>& names) {
    for (const auto& name : names) {
        auto want = fixture_bytes(name);
        if (!want) {
            g.expect(false, "missing fixture " + name);
            continue;
        }
        g.expect(render_table(name) == *want, "table mismatch: " + name);
    }
}

// Shared between criteria 4 and 9.
std::vector<std::pair<std::string, ElementSet>> closure_cache;

const ElementSet& all_of_degree(int k) {
    static std::map<int, ElementSet> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, all_bipartitions(k)).first;
    return it->second;
}

Bipartition random_bipartition(int k, std::mt19937& rng) {
    std::vector<std::vector<int>> blocks;
    int used = 0;
    for (int pass = 0; pass < 2; ++pass)
        for (int j = 1; j <= k; ++j) {
            std::uniform_int_distribution<int> pick(0, used);
            int label = pick(rng);
            if (label == used) {
                blocks.emplace_back();
                ++used;
            }
            blocks[label].push_back(pass == 0 ? j : -j);
        }
    return make_bipartition(k, blocks);
}

long rank_of_pattern(const Pattern& p) {
    return (long)p.transversals.size();
}

void criterion_moncards(Gate& g) {
    check_tables(g, {"pmod2moncards", "pmod3moncards", "pmod4moncards",
                     "apsismod3moncards", "apsismod4moncards", "mod2moncards",
                     "mod3moncards", "mod4moncards", "capsismon3moncards",
                     "capsismon4moncards"});
}

void criterion_recurrences(Gate& g) {
    check_tables(g, {"PT2", "PT3", "PT4", "PN2", "PN3", "PN4", "PNB3", "PNB4",
                     "XT2", "XT3", "XT4", "XN2", "XN3", "XN4", "XNB3", "XNB4",
                     "nointparts", "noorderedintparts", "Rjivalues"});
}

void criterion_binomial(Gate& g) {
    for (int k = 2; k <= 30; ++k)
        g.expect(pm_card(2, k) * (2 * k + 1) == binomial(3L * k, k),
                 "binomial identity fails at k=" + std::to_string(k));
}

void criterion_closures(Gate& g) {
    struct Entry {
        const char* fam;
        int klo, khi;
    };
    const std::vector<Entry> entries{
        {"pmod:2", 2, 6},  {"pmod:3", 2, 6},       {"apsis:3", 3, 8},
        {"mod:2", 2, 4},   {"xapsis:3", 3, 5},     {"jones", 2, 8},
        {"planar", 2, 5},  {"syminv", 2, 4},       {"planarsyminv", 2, 4},
        {"ubb", 2, 4}};
    for (const auto& e : entries) {
        Family f = family_from_string(e.fam);
        for (int k = e.klo; k <= e.khi; ++k) {
            std::string tag = std::string(e.fam) + " k=" + std::to_string(k);
            auto closed = close(k, generating_set(f, k));
            g.expect(family_cardinality(f, k) == (long)closed.elements.size(),
                     "cardinality mismatch: " + tag);
            if (k <= 5) {
                std::set<Bipartition> want;
                for (const auto& a : all_of_degree(k).elements)
                    if (member(f, a)) want.insert(a);
                std::set<Bipartition> got(closed.elements.begin(),
                                          closed.elements.end());
                g.expect(got == want, "membership filter mismatch: " + tag);
            }
            closure_cache.push_back({tag, std::move(closed)});
        }
    }
}

std::set<std::set<int>> as_sets(const GreensPartition& p) {
    std::set<std::set<int>> out;
    for (const auto& c : p.classes) out.insert({c.begin(), c.end()});
    return out;
}

void criterion_greens(Gate& g) {
    struct Probe {
        const char* fam;
        int k;
    };
    for (const auto& p : std::vector<Probe>{{"pmod:2", 2}, {"pmod:2", 3},
                                            {"pmod:2", 4}, {"pmod:2", 5},
                                            {"pmod:3", 5}, {"mod:2", 4},
                                            {"jones", 6}}) {
        Family f = family_from_string(p.fam);
        auto C = cayley(p.k, generating_set(f, p.k));
        for (auto rel : {GreensRelation::R, GreensRelation::L,
                         GreensRelation::H, GreensRelation::D,
                         GreensRelation::J}) {
            auto a = classes_by_pattern(C.elements, rel);
            auto b = classes_by_ideals(C, rel);
            g.expect(as_sets(a) == as_sets(b),
                     std::string("pattern/ideal mismatch: ") + p.fam +
                         " k=" + std::to_string(p.k));
        }
    }
    check_tables(g, {"nopmodmonDclasses", "nomodmonDclasses",
                     "nopmodmonRclasses", "nomodmonRclasses"});
    auto enumerated = [&](const Family& f, int k, GreensRelation rel) {
        auto S = close(k, generating_set(f, k));
        return (long)classes_by_pattern(S, rel).classes.size();
    };
    for (int k = 2; k <= 5; ++k) {
        Family f{FamilyKind::PMod, 2};
        g.expect(count_d_classes(f, k) == enumerated(f, k, GreensRelation::D),
                 "pmod2 D-class count k=" + std::to_string(k));
        g.expect(count_r_classes(f, k) == enumerated(f, k, GreensRelation::R),
                 "pmod2 R-class count k=" + std::to_string(k));
    }
    for (int k = 3; k <= 5; ++k) {
        Family f{FamilyKind::PMod, 3};
        g.expect(count_d_classes(f, k) == enumerated(f, k, GreensRelation::D),
                 "pmod3 D-class count k=" + std::to_string(k));
        g.expect(count_r_classes(f, k) == enumerated(f, k, GreensRelation::R),
                 "pmod3 R-class count k=" + std::to_string(k));
    }
    for (int k = 2; k <= 4; ++k) {
        Family f{FamilyKind::Mod, 2};
        g.expect(count_d_classes(f, k) == enumerated(f, k, GreensRelation::D),
                 "mod2 D-class count k=" + std::to_string(k));
        g.expect(count_r_classes(f, k) == enumerated(f, k, GreensRelation::R),
                 "mod2 R-class count k=" + std::to_string(k));
    }
}

void exhaustive_properties(Gate& g) {
    const auto& S = all_of_degree(3);
    int n = (int)S.elements.size();
    std::vector<std::vector<int>> T(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            T[i][j] = S.index_of(product(S.elements[i], S.elements[j]));
    int e = S.index_of(identity(3));
    std::vector<int> dual(n), rk(n);
    std::vector<char> planar(n), mod2(n), mod3(n);
    for (int i = 0; i < n; ++i) {
        dual[i] = S.index_of(star(S.elements[i]));
        rk[i] = rank(S.elements[i]);
        planar[i] = is_planar(S.elements[i]);
        mod2[i] = is_modular(S.elements[i], 2);
        mod3[i] = is_modular(S.elements[i], 3);
        g.expect(rank_of_pattern(upper_pattern(S.elements[i])) == rk[i],
                 "rank vs upper pattern");
        g.expect(rank_of_pattern(lower_pattern(S.elements[i])) == rk[i],
                 "rank vs lower pattern");
    }
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
        for (int b = 0; b < n && assoc; ++b)
            for (int c = 0; c < n; ++c)
                if (T[T[a][b]][c] != T[a][T[b][c]]) {
                    assoc = false;
                    break;
                }
    g.expect(assoc, "associativity fails at k=3");
    for (int a = 0; a < n; ++a) {
        g.expect(T[e][a] == a && T[a][e] == a, "identity law at k=3");
        g.expect(dual[dual[a]] == a, "star involution at k=3");
        g.expect(T[T[a][dual[a]]][a] == a, "a a* a = a at k=3");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = T[a][b];
            g.expect(dual[ab] == T[dual[b]][dual[a]],
                     "(ab)* = b* a* at k=3");
            g.expect(rk[ab] <= rk[a] && rk[ab] <= rk[b],
                     "rank inequality at k=3");
            if (planar[a] && planar[b])
                g.expect(planar[ab], "planarity closure at k=3");
            if (mod2[a] && mod2[b])
                g.expect(mod2[ab], "mod-2 closure at k=3");
            if (mod3[a] && mod3[b])
                g.expect(mod3[ab], "mod-3 closure at k=3");
        }
}

void random_properties(Gate& g, int k, std::mt19937& rng) {
    std::vector<Bipartition> pool;
    for (int i = 0; i < 120; ++i) pool.push_back(random_bipartition(k, rng));
    std::uniform_int_distribution<int> pick(0, (int)pool.size() - 1);
    std::string at = " at k=" + std::to_string(k);
    for (int trial = 0; trial < 400; ++trial) {
        const auto& a = pool[pick(rng)];
        const auto& b = pool[pick(rng)];
        const auto& c = pool[pick(rng)];
        g.expect(product(product(a, b), c) == product(a, product(b, c)),
                 "associativity" + at);
        g.expect(star(product(a, b)) == product(star(b), star(a)),
                 "(ab)* = b* a*" + at);
        long rab = rank(product(a, b));
        g.expect(rab <= rank(a) && rab <= rank(b), "rank inequality" + at);
    }
    for (const auto& a : pool) {
        g.expect(product(identity(k), a) == a && product(a, identity(k)) == a,
                 "identity law" + at);
        g.expect(product(product(a, star(a)), a) == a, "a a* a = a" + at);
        g.expect(rank_of_pattern(upper_pattern(a)) == rank(a),
                 "rank vs pattern" + at);
    }
    // Closure under the defining predicates, exercised along random words.
    struct Walk {
        const char* fam;
        std::function<bool(const Bipartition&)> inside;
    };
    const std::vector<Walk> walks{
        {"planar", [](const Bipartition& a) { return is_planar(a); }},
        {"mod:2", [](const Bipartition& a) { return is_modular(a, 2); }},
        {"mod:3", [](const Bipartition& a) { return is_modular(a, 3); }},
        {"pmod:2",
         [](const Bipartition& a) { return is_modular(a, 2) && is_planar(a); }}};
    for (const auto& w : walks) {
        auto gens = generating_set(family_from_string(w.fam), k);
        std::uniform_int_distribution<int> gpick(0, (int)gens.size() - 1);
        for (int walk = 0; walk < 40; ++walk) {
            Bipartition x = identity(k);
            for (int step = 0; step < 12; ++step) {
                x = product(x, gens[gpick(rng)]);
                g.expect(w.inside(x),
                         std::string(w.fam) + " closure" + at);
            }
        }
    }
}

void criterion_properties(Gate& g) {
    exhaustive_properties(g);
    std::mt19937 rng(20260822u);
    random_properties(g, 6, rng);
    random_properties(g, 7, rng);
}

void criterion_presentations(Gate& g) {
    for (const auto& name : relation_set_names())
        for (int k = 2; k <= 7; ++k) {
            auto report = check_soundness(relations(name, k), k);
            g.expect(report.sound && report.failing.empty(),
                     name + " unsound at k=" + std::to_string(k));
        }
    for (int k = 3; k <= 7; ++k) {
        auto report = check_soundness(relations("mod_m", k, 3), k);
        g.expect(report.sound, "mod_m m=3 unsound at k=" + std::to_string(k));
    }
    for (int k = 2; k <= 6; ++k) {
        auto r = congruence_size(presentation_alphabet("jones", k),
                                 relations("jones", k), k, 10);
        g.expect(r.stabilized && catalan(k) == (long)r.class_count,
                 "jones congruence at k=" + std::to_string(k));
    }
    for (int k = 2; k <= 5; ++k) {
        auto r = congruence_size(presentation_alphabet("pmod2", k),
                                 relations("pmod2", k), k, 8);
        g.expect(r.stabilized && pm_card(2, k) == r.class_count,
                 "pmod2 congruence at k=" + std::to_string(k));
    }
}

std::map<std::pair<int, int>, long> candidate_grid(Gate& g) {
    std::map<std::pair<int, int>, long> grid;
    for (const auto& row : fixture_rows("candidateRjivalues")) {
        std::istringstream ss(row);
        std::string cell;
        std::getline(ss, cell, ',');
        int j = std::stoi(cell);
        for (int i = 1; std::getline(ss, cell, ','); ++i)
            if (!cell.empty()) grid[{j, i}] = std::stol(cell);
    }
    g.expect(!grid.empty(), "candidateRjivalues fixture unreadable");
    return grid;
}

void criterion_normal_forms(Gate& g) {
    for (int k = 2; k <= 10; ++k) {
        auto forms = jones_normal_forms(k);
        g.expect(catalan(k) == (long)forms.size(),
                 "normal form count at k=" + std::to_string(k));
        std::map<std::pair<int, int>, long> tally;
        for (const auto& w : forms) {
            if (!in_run_form(w.letters)) {
                g.expect(false, "normal form not in run form");
                continue;
            }
            if (w.letters.empty()) continue;
            auto er = end_run(w.letters);
            if (!er) {
                g.expect(false, "normal form without terminal run");
                continue;
            }
            tally[*er]++;
        }
        bool match = (long)tally.size() == (long)(k - 1) * k / 2;
        for (int j = 1; j < k && match; ++j)
            for (int i = 1; i <= j; ++i) {
                auto it = tally.find({j, i});
                if (it == tally.end() ||
                    catalan_triangle_R(j, i) != it->second)
                    match = false;
            }
        g.expect(match, "terminal run tallies at k=" + std::to_string(k));
    }
    for (int k = 3; k <= 6; ++k)
        for (auto [order, tag] :
             {std::pair<GenOrder, const char*>{GenOrder::DiapsisFirst,
                                               "diapsis_first"},
              {GenOrder::TransapsisFirst, "transapsis_first"}}) {
            auto got = geodesic_lex_words(k, order, 6);
            std::multiset<std::string> rows;
            bool run_form = true, evals = true;
            for (const auto& [elem, w] : got) {
                if (eval(k, w) != elem) evals = false;
                if (!in_run_form(w)) run_form = false;
                if (w.empty()) continue;
                auto er = end_run(w);
                if (!er) {
                    run_form = false;
                    continue;
                }
                rows.insert(std::to_string(er->first) + "," +
                            std::to_string(er->second) + "," +
                            word_to_string(w));
            }
            std::string where =
                " k=" + std::to_string(k) + " " + tag;
            g.expect(evals, "geodesic word evaluation" + where);
            g.expect(run_form, "geodesic word run form" + where);
            auto want_rows = fixture_rows("pmod2_words_k" +
                                          std::to_string(k) + "_" + tag);
            g.expect(rows == std::multiset<std::string>(want_rows.begin(),
                                                        want_rows.end()),
                     "word inventory mismatch" + where);
        }
    auto grid = candidate_grid(g);
    auto fixture = fixture_bytes("candidateRjivalues");
    g.expect(fixture && render_table("candidateRjivalues") == *fixture,
             "candidateRjivalues table mismatch");
    for (auto order : {GenOrder::DiapsisFirst, GenOrder::TransapsisFirst}) {
        auto words = geodesic_lex_words(7, order, 7);
        std::map<std::pair<int, int>, long> tally;
        bool run_form = true;
        for (const auto& [elem, w] : words) {
            if (!in_run_form(w)) run_form = false;
            if (w.empty()) continue;
            auto er = end_run(w);
            if (er)
                tally[*er]++;
            else
                run_form = false;
        }
        std::string which =
            order == GenOrder::DiapsisFirst ? "diapsis" : "transapsis";
        g.expect(run_form, "degree-7 geodesics run form, " + which);
        g.expect(tally == grid, "candidate tallies mismatch, " + which);
    }
    for (int d = 0; d <= 12; ++d)
        g.expect(fibonacci(d + 3) == (long)run_set(d + 1, 1).size(),
                 "run set size at gap " + std::to_string(d));
}

void criterion_round_trip(Gate& g) {
    g.expect(!closure_cache.empty(), "no cached closures to round-trip");
    for (const auto& [tag, S] : closure_cache)
        for (const auto& a : S.elements)
            g.expect(from_text(to_text(a)) == a, "round trip fails in " + tag);
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double budget;
        void (*body)(Gate&);
    };
    const std::vector<Criterion> criteria{
        {1, "moncards cardinality tables", 5, criterion_moncards},
        {2, "recurrence tables", 2, criterion_recurrences},
        {3, "pm_card binomial identity", 1, criterion_binomial},
        {4, "closure characterizations", 60, criterion_closures},
        {5, "greens class structure", 60, criterion_greens},
        {6, "algebraic property suite", 30, criterion_properties},
        {7, "presentation soundness and congruences", 120,
         criterion_presentations},
        {8, "normal form inventories", 120, criterion_normal_forms},
        {9, "text round trips", 10, criterion_round_trip},
    };
    bool all_ok = true;
    for (const auto& c : criteria) {
        Gate gate;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(gate);
        } catch (const std::exception& e) {
            gate.expect(false, std::string("exception: ") + e.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        std::printf("%s %d %s (%.2fs, budget %.0fs)\n",
                    gate.ok ? "PASS" : "FAIL", c.id, c.label, secs, c.budget);
        for (const auto& note : gate.notes)
            std::printf("      %s\n", note.c_str());
        if (!gate.ok) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
