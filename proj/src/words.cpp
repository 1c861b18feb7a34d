#include "diagsemi/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

#include "diagsemi/errors.hpp"
#include "diagsemi/generators.hpp"

namespace diagsemi {

namespace {

constexpr long long kClassGuard = 2000000;

Letter H(int i) { return {LetterKind::Diapsis, i}; }
Letter T(int i) { return {LetterKind::Transapsis, i}; }
Letter S(int i) { return {LetterKind::Transposition, i}; }
Letter E(int i) { return {LetterKind::Monapsis, i}; }
Letter F(int i) { return {LetterKind::PfForward, i}; }
Letter B(int i) { return {LetterKind::PfBackward, i}; }
Letter A(int m, int i) { return {LetterKind::Apsis, i, m}; }

void add(RelationSet& rs, Word lhs, Word rhs) {
    rs.pairs.emplace_back(std::move(lhs), std::move(rhs));
}

void jones_rels(RelationSet& rs, int n) {
    for (int i = 1; i <= n; ++i) add(rs, {H(i), H(i)}, {H(i)});
    for (int i = 1; i <= n; ++i)
        for (int j : {i - 1, i + 1})
            if (j >= 1 && j <= n) add(rs, {H(i), H(j), H(i)}, {H(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            add(rs, {H(j), H(i)}, {H(i), H(j)});
}

void sym_rels(RelationSet& rs, int n) {
    for (int i = 1; i <= n; ++i) add(rs, {S(i), S(i)}, {});
    for (int i = 1; i < n; ++i)
        add(rs, {S(i), S(i + 1), S(i)}, {S(i + 1), S(i), S(i + 1)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            add(rs, {S(j), S(i)}, {S(i), S(j)});
}

void pmod2_rels(RelationSet& rs, int n) {
    for (int i = 1; i <= n; ++i) add(rs, {T(i), T(i)}, {T(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add(rs, {T(j), T(i)}, {T(i), T(j)});
    jones_rels(rs, n);
    for (int i = 1; i <= n; ++i) {
        add(rs, {T(i), H(i)}, {H(i)});
        add(rs, {H(i), T(i)}, {H(i)});
    }
    for (int i = 1; i < n; ++i)
        add(rs, {T(i), H(i + 1), T(i)}, {T(i), T(i + 1)});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j - i >= 2 || i - j >= 2)
                add(rs, {T(j), H(i)}, {H(i), T(j)});
}

void pmod2_implied_rels(RelationSet& rs, int n) {
    for (int i = 1; i < n; ++i) {
        add(rs, {H(i), T(i + 1), H(i)}, {H(i)});
        add(rs, {H(i + 1), H(i), T(i + 1)}, {H(i + 1), T(i)});
        add(rs, {T(i + 1), H(i), H(i + 1)}, {T(i), H(i + 1)});
        add(rs, {T(i + 1), H(i), T(i + 1)}, {T(i), T(i + 1)});
        add(rs, {T(i), H(i + 1), H(i)}, {T(i + 1), H(i)});
        add(rs, {H(i), H(i + 1), T(i)}, {H(i), T(i + 1)});
        add(rs, {H(i + 1), T(i), H(i + 1)}, {H(i + 1)});
    }
}

void ppttn_rels(RelationSet& rs, int k) {
    int n = k - 1;
    for (int i = 1; i <= k; ++i) add(rs, {E(i), E(i)}, {E(i)});
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            add(rs, {E(j), E(i)}, {E(i), E(j)});
    for (int i = 1; i <= n; ++i) add(rs, {T(i), T(i)}, {T(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add(rs, {T(j), T(i)}, {T(i), T(j)});
    for (int i = 1; i <= k; ++i)
        for (int j : {i - 1, i + 1})
            if (j >= 1 && j <= n) add(rs, {E(i), T(j), E(i)}, {E(i)});
}

void brauer_common(RelationSet& rs, int n) {
    sym_rels(rs, n);
    for (int i = 1; i <= n; ++i) add(rs, {H(i), H(i)}, {H(i)});
}

void h_commute(RelationSet& rs, int n) {
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            add(rs, {H(j), H(i)}, {H(i), H(j)});
}

void brauer1_rels(RelationSet& rs, int n) {
    brauer_common(rs, n);
    for (int i = 1; i <= n; ++i)
        for (int j : {i - 1, i + 1})
            if (j >= 1 && j <= n) add(rs, {H(i), H(j), H(i)}, {H(i)});
    h_commute(rs, n);
    for (int i = 1; i <= n; ++i) {
        add(rs, {S(i), H(i)}, {H(i)});
        add(rs, {H(i), S(i)}, {H(i)});
    }
    for (int i = 1; i <= n; ++i)
        for (int j : {i - 1, i + 1})
            if (j >= 1 && j <= n) {
                add(rs, {H(i), H(j), S(i)}, {H(i), S(j)});
                add(rs, {S(i), H(j), H(i)}, {S(j), H(i)});
            }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j - i >= 2 || i - j >= 2)
                add(rs, {H(j), S(i)}, {S(i), H(j)});
}

void brauer2_rels(RelationSet& rs, int n) {
    brauer_common(rs, n);
    for (int i = 1; i <= n; ++i)
        for (int j : {i - 1, i + 1})
            if (j >= 1 && j <= n) add(rs, {H(i), H(j), H(i)}, {H(i)});
    h_commute(rs, n);
    if (n >= 1) {
        add(rs, {S(1), H(1)}, {H(1)});
        add(rs, {H(1), S(1)}, {H(1)});
    }
    for (int i = 1; i < n; ++i) {
        add(rs, {H(i), H(i + 1), S(i)}, {H(i), S(i + 1)});
        add(rs, {S(i), H(i + 1), H(i)}, {S(i + 1), H(i)});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            add(rs, {H(j), S(i)}, {S(i), H(j)});
}

void brauer3_rels(RelationSet& rs, int n) {
    brauer_common(rs, n);
    h_commute(rs, n);
    if (n >= 1) {
        add(rs, {S(1), H(1)}, {H(1)});
        add(rs, {H(1), S(1)}, {H(1)});
    }
    for (int i = 1; i < n; ++i)
        add(rs, {H(i + 1)}, {S(i), S(i + 1), H(i), S(i + 1), S(i)});
    if (n >= 2) add(rs, {H(1), S(2), H(1)}, {H(1)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            add(rs, {H(j), S(i)}, {S(i), H(j)});
}

void syminv_rels(RelationSet& rs, int k) {
    int n = k - 1;
    for (int i = 1; i <= n; ++i) add(rs, {S(i), S(i)}, {});
    for (int i = 1; i < n; ++i)
        add(rs, {S(i), S(i + 1), S(i)}, {S(i + 1), S(i), S(i + 1)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            add(rs, {S(j), S(i)}, {S(i), S(j)});
    for (int i = 1; i <= k; ++i) add(rs, {E(i), E(i)}, {E(i)});
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            add(rs, {E(j), E(i)}, {E(i), E(j)});
    for (int i = 1; i <= n; ++i) add(rs, {S(i), E(i)}, {E(i + 1), S(i)});
    for (int i = 1; i <= n; ++i) add(rs, {E(i + 1), S(i)}, {S(i), E(i)});
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= k; ++i)
            if (j != i - 1 && j != i) add(rs, {S(j), E(i)}, {E(i), S(j)});
}

void planarsyminv_rels(RelationSet& rs, int k) {
    for (int i = 1; i <= k - 1; ++i)
        for (int j = i; j <= k - 1; ++j) {
            add(rs, {F(j), F(i)}, {F(i), F(j + 1)});
            add(rs, {B(i), B(j)}, {B(j + 1), B(i)});
        }
    for (int i = 1; i <= k; ++i) {
        add(rs, {F(k), F(i)}, {F(i)});
        add(rs, {B(i), B(k)}, {B(i)});
    }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            add(rs, {B(i), F(j)}, {F(k), F(j - 1), B(i)});
    for (int i = 1; i <= k; ++i) add(rs, {B(i), F(i)}, {F(k)});
    if (k >= 1) add(rs, {F(k)}, {B(k)});
    for (int j = 1; j <= k; ++j)
        for (int i = j + 1; i <= k; ++i)
            add(rs, {B(i), F(j)}, {F(k), F(j), B(i - 1)});
}

void pubb_rels(RelationSet& rs, int n) {
    for (int i = 1; i <= n; ++i) add(rs, {T(i), T(i)}, {T(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add(rs, {T(j), T(i)}, {T(i), T(j)});
}

void ubb1_rels(RelationSet& rs, int k) {
    int n = k - 1;
    for (int i = 1; i <= n; ++i) add(rs, {S(i), S(i)}, {});
    for (int i = 1; i < n; ++i)
        add(rs, {S(i + 1), S(i), S(i + 1)}, {S(i), S(i + 1), S(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            add(rs, {S(j), S(i)}, {S(i), S(j)});
    if (k >= 2) add(rs, {T(1), T(1)}, {T(1)});
    if (n >= 1 && k >= 2) {
        add(rs, {S(1), T(1)}, {T(1)});
        add(rs, {T(1), S(1)}, {T(1)});
    }
    if (n >= 2)
        add(rs, {S(2), T(1), S(2), T(1)}, {T(1), S(2), T(1), S(2)});
    if (n >= 3)
        add(rs,
            {S(2), S(1), S(3), S(2), T(1), S(2), S(1), S(3), S(2), T(1)},
            {T(1), S(2), S(1), S(3), S(2), T(1), S(2), S(1), S(3), S(2)});
    for (int i = 3; i <= n; ++i) add(rs, {S(i), T(1)}, {T(1), S(i)});
}

void ubb2_rels(RelationSet& rs, int k) {
    int n = k - 1;
    for (int i = 1; i <= n; ++i) add(rs, {S(i), S(i)}, {});
    for (int i = 1; i < n; ++i)
        add(rs, {S(i + 1), S(i), S(i + 1)}, {S(i), S(i + 1), S(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            add(rs, {S(j), S(i)}, {S(i), S(j)});
    for (int i = 1; i <= n; ++i) add(rs, {T(i), T(i)}, {T(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add(rs, {T(j), T(i)}, {T(i), T(j)});
    for (int i = 1; i <= n; ++i) {
        add(rs, {S(i), T(i)}, {T(i)});
        add(rs, {T(i), S(i)}, {T(i)});
    }
    for (int i = 1; i < n; ++i)
        add(rs, {S(i + 1), T(i), S(i + 1)}, {S(i), T(i + 1), S(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j - i >= 2 || i - j >= 2)
                add(rs, {S(j), T(i)}, {T(i), S(j)});
}

void mod_m_rels(RelationSet& rs, int k, int m) {
    int n = k - 1, na = k - m + 1;
    for (int i = 1; i <= n; ++i) add(rs, {S(i), S(i)}, {});
    for (int i = 1; i < n; ++i)
        add(rs, {S(i), S(i + 1), S(i)}, {S(i + 1), S(i), S(i + 1)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            add(rs, {S(j), S(i)}, {S(i), S(j)});
    for (int i = 1; i <= n; ++i) add(rs, {T(i), T(i)}, {T(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add(rs, {T(j), T(i)}, {T(i), T(j)});
    for (int i = 1; i <= na; ++i) add(rs, {A(m, i), A(m, i)}, {A(m, i)});
    for (int i = 1; i <= na; ++i)
        for (int j = i + m; j <= na; ++j)
            add(rs, {A(m, j), A(m, i)}, {A(m, i), A(m, j)});
    for (int i = 1; i <= n; ++i) {
        add(rs, {T(i), S(i)}, {T(i)});
        add(rs, {S(i), T(i)}, {T(i)});
    }
    for (int i = 1; i < n; ++i)
        add(rs, {S(i), S(i + 1), T(i), S(i + 1), S(i)}, {T(i + 1)});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j - i >= 2 || i - j >= 2)
                add(rs, {T(j), S(i)}, {S(i), T(j)});
    for (int i = 1; i <= na; ++i)
        for (int j = i; j <= i + m - 2 && j <= n; ++j) {
            add(rs, {A(m, i), S(j)}, {A(m, i)});
            add(rs, {S(j), A(m, i)}, {A(m, i)});
        }
    for (int i = 1; i <= na; ++i) {
        if (i + m - 1 <= n)
            add(rs, {A(m, i), S(i + m - 1), A(m, i)}, {A(m, i)});
        if (i >= 2) add(rs, {A(m, i), S(i - 1), A(m, i)}, {A(m, i)});
    }
    for (int i = 1; i < na; ++i) {
        Word lhs;
        for (int j = i; j <= i + m - 1; ++j) lhs.push_back(S(j));
        lhs.push_back(A(m, i));
        for (int j = i + m - 1; j >= i; --j) lhs.push_back(S(j));
        add(rs, std::move(lhs), {A(m, i + 1)});
    }
    for (int i = 1; i <= na; ++i)
        for (int j = 1; j <= n; ++j)
            if (j <= i - 2 || j >= i + m)
                add(rs, {A(m, i), S(j)}, {S(j), A(m, i)});
    for (int i = 1; i <= na; ++i) {
        add(rs, {A(m, i), T(i)}, {A(m, i)});
        add(rs, {T(i), A(m, i)}, {A(m, i)});
    }
    for (int i = 1; i <= k - m; ++i) {
        Word chain;
        for (int j = i; j <= i + m - 1; ++j) chain.push_back(T(j));
        add(rs, {T(i), A(m, i + 1), T(i)}, chain);
        add(rs, {T(i + m - 1), A(m, i), T(i + m - 1)}, chain);
    }
    for (int i = 1; i <= na; ++i)
        for (int j = 1; j <= n; ++j)
            if (j <= i - 2 || j >= i + m)
                add(rs, {A(m, i), T(j)}, {T(j), A(m, i)});
}

// The diapsis/transapsis relation swap is only a presentation for m = 2;
// relation a_i a_{i+1} s_i = a_i s_{i+1} fails for wider apses.
void mod_m2_rels(RelationSet& rs, int k, int m) {
    int n = k - 1, na = k - m + 1;
    for (int i = 1; i <= n; ++i) add(rs, {S(i), S(i)}, {});
    for (int i = 1; i < n; ++i)
        add(rs, {S(i), S(i + 1), S(i)}, {S(i + 1), S(i), S(i + 1)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            add(rs, {S(j), S(i)}, {S(i), S(j)});
    for (int i = 1; i <= n; ++i) add(rs, {T(i), T(i)}, {T(i)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add(rs, {T(j), T(i)}, {T(i), T(j)});
    for (int i = 1; i <= na; ++i) add(rs, {A(m, i), A(m, i)}, {A(m, i)});
    for (int i = 1; i <= na; ++i)
        for (int j : {i - 1, i + 1})
            if (j >= 1 && j <= na)
                add(rs, {A(m, i), A(m, j), A(m, i)}, {A(m, i)});
    for (int i = 1; i <= na; ++i)
        for (int j = i + m; j <= na; ++j)
            add(rs, {A(m, j), A(m, i)}, {A(m, i), A(m, j)});
    for (int i = 1; i <= n; ++i) {
        add(rs, {T(i), S(i)}, {T(i)});
        add(rs, {S(i), T(i)}, {T(i)});
    }
    for (int i = 1; i < n; ++i)
        add(rs, {S(i), S(i + 1), T(i), S(i + 1), S(i)}, {T(i + 1)});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j - i >= 2 || i - j >= 2)
                add(rs, {T(j), S(i)}, {S(i), T(j)});
    for (int i = 1; i <= na; ++i) {
        add(rs, {A(m, i), S(i)}, {A(m, i)});
        add(rs, {S(i), A(m, i)}, {A(m, i)});
    }
    for (int i = 1; i < na; ++i) {
        add(rs, {A(m, i), A(m, i + 1), S(i)}, {A(m, i), S(i + 1)});
        add(rs, {S(i), A(m, i + 1), A(m, i)}, {S(i + 1), A(m, i)});
    }
    for (int i = 1; i <= na; ++i)
        for (int j = 1; j <= n; ++j)
            if (j - i >= 2 || i - j >= 2)
                add(rs, {A(m, i), S(j)}, {S(j), A(m, i)});
    for (int i = 1; i <= na; ++i) {
        add(rs, {A(m, i), T(i)}, {A(m, i)});
        add(rs, {T(i), A(m, i)}, {A(m, i)});
    }
    for (int i = 1; i < na; ++i) {
        add(rs, {T(i), A(m, i + 1), T(i)}, {T(i), T(i + 1)});
        add(rs, {T(i + 1), A(m, i), T(i + 1)}, {T(i), T(i + 1)});
    }
    for (int i = 1; i <= na; ++i)
        for (int j = 1; j <= n; ++j)
            if (j - i >= 2 || i - j >= 2)
                add(rs, {A(m, i), T(j)}, {T(j), A(m, i)});
}

std::vector<Letter> range_letters(LetterKind kind, int lo, int hi, int m = 0) {
    std::vector<Letter> out;
    for (int i = lo; i <= hi; ++i) out.push_back({kind, i, m});
    return out;
}

void append(std::vector<Letter>& dst, const std::vector<Letter>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

bool Letter::operator<(const Letter& o) const {
    return std::tie(kind, index, m) < std::tie(o.kind, o.index, o.m);
}

Letter make_letter(LetterKind kind, int index, int m) {
    return {kind, index, m};
}

Bipartition eval_letter(int k, const Letter& l) {
    try {
        switch (l.kind) {
            case LetterKind::Diapsis: return diapsis(k, l.index);
            case LetterKind::Transapsis: return transapsis(k, l.index);
            case LetterKind::Transposition: return transposition(k, l.index);
            case LetterKind::Monapsis: return monapsis(k, l.index);
            case LetterKind::Apsis: return apsis(k, l.m, l.index);
            case LetterKind::PfForward: return pf_forward(k, l.index);
            case LetterKind::PfBackward: return pf_backward(k, l.index);
        }
    } catch (const IndexOutOfRange& e) {
        throw IllegalLetter(e.what());
    } catch (const RangeError& e) {
        throw IllegalLetter(e.what());
    }
    throw IllegalLetter("unknown letter kind");
}

Bipartition eval(int k, const Word& w) {
    Bipartition out = identity(k);
    for (const Letter& l : w) out = product(out, eval_letter(k, l));
    return out;
}

Bipartition eval(const GenWord& w) { return eval(w.k, w.letters); }

std::vector<std::string> relation_set_names() {
    return {"jones",  "brauer1", "brauer2",      "brauer3",
            "mod_m",  "mod_m2",  "pubb",         "ppttn",
            "ubb1",   "ubb2",    "syminv",       "planarsyminv",
            "pmod2",  "pmod2_implied"};
}

RelationSet relations(const std::string& name, int k, int m) {
    if (k < 0) throw RangeError("degree must be >= 0");
    RelationSet rs;
    rs.name = name;
    rs.k = k;
    int n = k - 1;
    if (name == "jones") {
        jones_rels(rs, n);
    } else if (name == "pmod2") {
        rs.m = 2;
        pmod2_rels(rs, n);
    } else if (name == "pmod2_implied") {
        rs.m = 2;
        pmod2_implied_rels(rs, n);
    } else if (name == "ppttn") {
        ppttn_rels(rs, k);
    } else if (name == "brauer1") {
        brauer1_rels(rs, n);
    } else if (name == "brauer2") {
        brauer2_rels(rs, n);
    } else if (name == "brauer3") {
        brauer3_rels(rs, n);
    } else if (name == "syminv") {
        syminv_rels(rs, k);
    } else if (name == "planarsyminv") {
        planarsyminv_rels(rs, k);
    } else if (name == "pubb") {
        pubb_rels(rs, n);
    } else if (name == "ubb1") {
        ubb1_rels(rs, k);
    } else if (name == "ubb2") {
        ubb2_rels(rs, k);
    } else if (name == "mod_m") {
        if (m < 2) throw RangeError("mod_m relations need m >= 2");
        rs.m = m;
        mod_m_rels(rs, k, m);
    } else if (name == "mod_m2") {
        if (m < 2) throw RangeError("mod_m2 relations need m >= 2");
        if (m != 2)
            throw UnsupportedRange("mod_m2 relations are sound for m = 2 only");
        rs.m = m;
        mod_m2_rels(rs, k, m);
    } else {
        throw RangeError("unknown relation set: " + name);
    }
    return rs;
}

std::vector<Letter> presentation_alphabet(const std::string& name, int k,
                                          int m) {
    int n = k - 1;
    std::vector<Letter> out;
    if (name == "jones") {
        out = range_letters(LetterKind::Diapsis, 1, n);
    } else if (name == "pmod2" || name == "pmod2_implied") {
        out = range_letters(LetterKind::Transapsis, 1, n);
        append(out, range_letters(LetterKind::Diapsis, 1, n));
    } else if (name == "ppttn") {
        out = range_letters(LetterKind::Monapsis, 1, k);
        append(out, range_letters(LetterKind::Transapsis, 1, n));
    } else if (name == "brauer1" || name == "brauer2" || name == "brauer3") {
        out = range_letters(LetterKind::Transposition, 1, n);
        append(out, range_letters(LetterKind::Diapsis, 1, n));
    } else if (name == "syminv") {
        out = range_letters(LetterKind::Transposition, 1, n);
        append(out, range_letters(LetterKind::Monapsis, 1, k));
    } else if (name == "planarsyminv") {
        out = range_letters(LetterKind::PfForward, 1, k);
        append(out, range_letters(LetterKind::PfBackward, 1, k));
    } else if (name == "pubb") {
        out = range_letters(LetterKind::Transapsis, 1, n);
    } else if (name == "ubb1") {
        out = range_letters(LetterKind::Transposition, 1, n);
        if (k >= 2) out.push_back(T(1));
    } else if (name == "ubb2") {
        out = range_letters(LetterKind::Transposition, 1, n);
        append(out, range_letters(LetterKind::Transapsis, 1, n));
    } else if (name == "mod_m" || name == "mod_m2") {
        if (m < 2) throw RangeError("mod relations need m >= 2");
        out = range_letters(LetterKind::Transposition, 1, n);
        append(out, range_letters(LetterKind::Transapsis, 1, n));
        append(out, range_letters(LetterKind::Apsis, 1, k - m + 1, m));
    } else {
        throw RangeError("unknown relation set: " + name);
    }
    return out;
}

SoundnessReport check_soundness(const RelationSet& rs, int k) {
    SoundnessReport report;
    for (std::size_t i = 0; i < rs.pairs.size(); ++i) {
        if (!(eval(k, rs.pairs[i].first) == eval(k, rs.pairs[i].second)))
            report.failing.push_back((int)i);
    }
    report.sound = report.failing.empty();
    return report;
}

namespace {

// Bounded congruence closure over the word classes of the free monoid on
// the alphabet: classes are table rows, expanded breadth-first up to the
// length cap, with relation traces merged to a fixpoint after every level.
struct CongruenceEngine {
    int g;
    std::vector<std::vector<int>> trans;
    std::vector<int> uf, replen, pclass, pletter;

    explicit CongruenceEngine(int letters) : g(letters) {
        new_class(-1, -1);
    }

    int find(int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    }

    int new_class(int from, int letter) {
        int id = (int)trans.size();
        if (id >= kClassGuard)
            throw ExplosionGuard("congruence classes exceed guard");
        trans.emplace_back(g, -1);
        uf.push_back(id);
        replen.push_back(from < 0 ? 0 : replen[from] + 1);
        pclass.push_back(from);
        pletter.push_back(letter);
        if (from >= 0) trans[from][letter] = id;
        return id;
    }

    // Follow w from class c through current transitions; -1 when undefined.
    int trace(int c, const std::vector<int>& w) {
        int cur = find(c);
        for (int l : w) {
            int next = trans[cur][l];
            if (next < 0) return -1;
            cur = find(next);
        }
        return cur;
    }

    bool merge(int a, int b) {
        std::vector<std::pair<int, int>> queue{{a, b}};
        bool changed = false;
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (std::make_pair(replen[y], y) < std::make_pair(replen[x], x))
                std::swap(x, y);
            uf[y] = x;
            changed = true;
            for (int l = 0; l < g; ++l) {
                int ty = trans[y][l];
                if (ty < 0) continue;
                int tx = trans[x][l];
                if (tx < 0)
                    trans[x][l] = ty;
                else if (find(tx) != find(ty))
                    queue.emplace_back(tx, ty);
            }
        }
        return changed;
    }

    void deduce(const std::vector<std::pair<std::vector<int>,
                                            std::vector<int>>>& rels) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int c = 0; c < (int)trans.size(); ++c) {
                if (find(c) != c) continue;
                for (const auto& [lhs, rhs] : rels) {
                    int cu = trace(c, lhs);
                    if (cu < 0) continue;
                    int cv = trace(c, rhs);
                    if (cv < 0) continue;
                    if (cu != cv && merge(cu, cv)) changed = true;
                }
            }
        }
    }

    long long run(const std::vector<std::pair<std::vector<int>,
                                              std::vector<int>>>& rels,
                  int cap) {
        deduce(rels);
        for (int level = 1; level <= cap; ++level) {
            int snapshot = (int)trans.size();
            for (int c = 0; c < snapshot; ++c) {
                if (find(c) != c || replen[c] >= level) continue;
                for (int l = 0; l < g; ++l)
                    if (trans[c][l] < 0) new_class(c, l);
            }
            deduce(rels);
        }
        long long live = 0;
        for (int c = 0; c < (int)trans.size(); ++c)
            if (find(c) == c) ++live;
        return live;
    }

    Word creation_word(int c, const std::vector<Letter>& alphabet) {
        Word w;
        for (int cur = c; pclass[cur] >= 0; cur = pclass[cur])
            w.push_back(alphabet[pletter[cur]]);
        std::reverse(w.begin(), w.end());
        return w;
    }
};

}  // namespace

CongruenceResult congruence_size(const std::vector<Letter>& alphabet,
                                 const RelationSet& rs, int k,
                                 int length_cap) {
    if (length_cap < 1) throw RangeError("length cap must be >= 1");
    std::map<Letter, int> letter_index;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        letter_index.emplace(alphabet[i], (int)i);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rels;
    auto translate = [&](const Word& w) {
        std::vector<int> out;
        for (const Letter& l : w) {
            auto it = letter_index.find(l);
            if (it == letter_index.end())
                throw IllegalLetter("relation letter missing from alphabet: " +
                                    letter_to_string(l));
            out.push_back(it->second);
        }
        return out;
    };
    for (const auto& [lhs, rhs] : rs.pairs)
        rels.emplace_back(translate(lhs), translate(rhs));

    CongruenceEngine first((int)alphabet.size());
    CongruenceResult result;
    result.class_count = first.run(rels, length_cap);

    CongruenceEngine second((int)alphabet.size());
    long long recount = second.run(rels, length_cap + 2);
    bool injective = true;
    std::set<Bipartition> images;
    for (int c = 0; c < (int)second.trans.size() && injective; ++c) {
        if (second.find(c) != c) continue;
        if (!images.insert(eval(k, second.creation_word(c, alphabet))).second)
            injective = false;
    }
    result.stabilized = (result.class_count == recount) && injective;
    return result;
}

std::vector<GenWord> jones_normal_forms(int k) {
    if (k < 2) throw RangeError("jones normal forms need k >= 2");
    std::vector<GenWord> out;
    Word word;
    auto rec = [&](auto&& self, int prev_j, int prev_i) -> void {
        out.push_back({k, word});
        for (int j = prev_j + 1; j <= k - 1; ++j)
            for (int i = prev_i + 1; i <= j; ++i) {
                std::size_t mark = word.size();
                for (int l = j; l >= i; --l) word.push_back(H(l));
                self(self, j, i);
                word.resize(mark);
            }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<std::pair<Bipartition, Word>> geodesic_lex_words(
    int k, GenOrder order, int degree_limit) {
    if (k < 0) throw RangeError("degree must be >= 0");
    if (k > degree_limit)
        throw ExplosionGuard("degree " + std::to_string(k) +
                             " exceeds word-search limit " +
                             std::to_string(degree_limit));
    std::vector<Letter> alphabet;
    for (int i = 1; i < k; ++i) {
        if (order == GenOrder::DiapsisFirst) {
            alphabet.push_back(H(i));
            alphabet.push_back(T(i));
        } else {
            alphabet.push_back(T(i));
            alphabet.push_back(H(i));
        }
    }
    std::vector<Bipartition> letter_value;
    for (const Letter& l : alphabet) letter_value.push_back(eval_letter(k, l));

    std::vector<std::pair<Bipartition, Word>> out;
    std::unordered_map<Bipartition, int> seen;
    out.emplace_back(identity(k), Word{});
    seen.emplace(out[0].first, 0);
    for (std::size_t head = 0; head < out.size(); ++head) {
        Bipartition cur = out[head].first;
        Word word = out[head].second;
        for (std::size_t l = 0; l < alphabet.size(); ++l) {
            Bipartition next = product(cur, letter_value[l]);
            if (seen.emplace(next, (int)out.size()).second) {
                Word next_word = word;
                next_word.push_back(alphabet[l]);
                out.emplace_back(std::move(next), std::move(next_word));
            }
        }
    }
    return out;
}

namespace {

struct RunDecomposition {
    // (j, i) per maximal descending-consecutive-index run.
    std::vector<std::pair<int, int>> runs;
    bool monotone = false;
    bool adjacent_transapses = false;
};

RunDecomposition decompose_runs(const Word& w) {
    RunDecomposition d;
    for (const Letter& l : w)
        if (l.kind != LetterKind::Diapsis && l.kind != LetterKind::Transapsis)
            throw IllegalLetter("run decomposition expects h/t letters only");
    std::size_t start = 0;
    for (std::size_t p = 1; p <= w.size(); ++p) {
        bool boundary = p == w.size() || w[p].index != w[p - 1].index - 1;
        if (!boundary) {
            if (w[p].kind == LetterKind::Transapsis &&
                w[p - 1].kind == LetterKind::Transapsis)
                d.adjacent_transapses = true;
            continue;
        }
        d.runs.emplace_back(w[start].index, w[p - 1].index);
        start = p;
    }
    d.monotone = true;
    for (std::size_t r = 1; r < d.runs.size(); ++r) {
        if (d.runs[r].first <= d.runs[r - 1].first ||
            d.runs[r].second <= d.runs[r - 1].second)
            d.monotone = false;
    }
    return d;
}

}  // namespace

std::optional<std::pair<int, int>> end_run(const Word& w) {
    RunDecomposition d = decompose_runs(w);
    if (w.empty() || !d.monotone) return std::nullopt;
    return d.runs.back();
}

bool in_run_form(const Word& w) {
    RunDecomposition d = decompose_runs(w);
    if (w.empty()) return true;
    return d.monotone && !d.adjacent_transapses;
}

std::vector<Word> run_set(int j, int i) {
    if (i < 1 || j < i) throw RangeError("run indices need 1 <= i <= j");
    std::vector<Word> out;
    Word word;
    auto rec = [&](auto&& self, int l) -> void {
        if (l < i) {
            out.push_back(word);
            return;
        }
        bool prev_t = !word.empty() && word.back().kind == LetterKind::Transapsis;
        word.push_back(H(l));
        self(self, l - 1);
        word.pop_back();
        if (!prev_t) {
            word.push_back(T(l));
            self(self, l - 1);
            word.pop_back();
        }
    };
    rec(rec, j);
    return out;
}

std::string letter_to_string(const Letter& l) {
    switch (l.kind) {
        case LetterKind::Diapsis: return "h" + std::to_string(l.index);
        case LetterKind::Transapsis: return "t" + std::to_string(l.index);
        case LetterKind::Transposition: return "s" + std::to_string(l.index);
        case LetterKind::Monapsis: return "e" + std::to_string(l.index);
        case LetterKind::Apsis:
            return "a" + std::to_string(l.m) + "_" + std::to_string(l.index);
        case LetterKind::PfForward: return "f" + std::to_string(l.index);
        case LetterKind::PfBackward: return "b" + std::to_string(l.index);
    }
    throw IllegalLetter("unknown letter kind");
}

std::string word_to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += letter_to_string(w[i]);
    }
    return out;
}

namespace {

Letter parse_token(const std::string& tok) {
    static const std::string low = "abcd fg", high = "ABCD FG";
    if (tok.size() == 1) {
        auto p = low.find(tok[0]);
        if (p != std::string::npos && tok[0] != ' ')
            return H((int)(p < 4 ? p + 1 : p));
        p = high.find(tok[0]);
        if (p != std::string::npos && tok[0] != ' ')
            return T((int)(p < 4 ? p + 1 : p));
        throw ParseError("unknown word letter: " + tok);
    }
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) throw ParseError("missing index in letter: " + tok);
        int v = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (!std::isdigit((unsigned char)tok[i]))
                throw ParseError("bad index in letter: " + tok);
            v = v * 10 + (tok[i] - '0');
        }
        return v;
    };
    char c = tok[0];
    if (c == 'a') {
        auto us = tok.find('_');
        if (us == std::string::npos)
            throw ParseError("apsis letter needs a<m>_<i>: " + tok);
        return A(digits(1, us), digits(us + 1, tok.size()));
    }
    int idx = digits(1, tok.size());
    switch (c) {
        case 'h': return H(idx);
        case 't': return T(idx);
        case 's': return S(idx);
        case 'e': return E(idx);
        case 'f': return F(idx);
        case 'b': return B(idx);
        default: throw ParseError("unknown word letter: " + tok);
    }
}

}  // namespace

Word parse_word(const std::string& text) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace((unsigned char)text[i])) ++i;
        if (i > start) out.push_back(parse_token(text.substr(start, i - start)));
    }
    return out;
}

}  // namespace diagsemi
