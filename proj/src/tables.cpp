#include "diagsemi/tables.hpp"

#include <functional>
#include <vector>

#include "diagsemi/bignat.hpp"
#include "diagsemi/counting.hpp"
#include "diagsemi/errors.hpp"
#include "diagsemi/words.hpp"

namespace diagsemi {

namespace {

const std::vector<std::vector<int>>& pn_columns() {
    static const std::vector<std::vector<int>> cols = {
        {0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {3, 0, 0, 0},
        {4, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {2, 1, 0, 0},
        {0, 2, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}};
    return cols;
}

const std::vector<std::vector<int>>& xn_columns() {
    static const std::vector<std::vector<int>> cols = {
        {0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0},
        {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    return cols;
}

std::string vec_header(const std::vector<std::vector<int>>& cols) {
    std::string h = "k/t";
    for (const auto& t : cols) {
        h += ",\"(";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) h += ',';
            h += std::to_string(t[i]);
        }
        h += ")\"";
    }
    return h;
}

long vec_weight(int m, const std::vector<int>& t) {
    long w = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        w += (long)(i + 1) * m * t[i];
    return w;
}

std::string blank_if_zero(const BigNat& v) {
    return v == 0 ? std::string() : to_string(v);
}

// Transversal tables: rows and columns are vertex counts, zeros blank.
std::string transversal_table(int m, int hi,
                              BigNat (*fn)(int, int, int)) {
    std::string out = "k1/k2";
    for (int k2 = 0; k2 <= hi; ++k2) out += ',' + std::to_string(k2);
    out += '\n';
    for (int k1 = 0; k1 <= hi; ++k1) {
        out += std::to_string(k1);
        for (int k2 = 0; k2 <= hi; ++k2)
            out += ',' + blank_if_zero(fn(m, k1, k2));
        out += '\n';
    }
    return out;
}

// Non-transversal tables over multiplicity vectors, zeros blank.
std::string vector_table(int m, int klo, int khi,
                         const std::vector<std::vector<int>>& cols,
                         BigNat (*fn)(int, int, const std::vector<int>&)) {
    std::string out = vec_header(cols) + '\n';
    for (int k = klo; k <= khi; ++k) {
        out += std::to_string(k);
        for (const auto& t : cols) out += ',' + blank_if_zero(fn(m, k, t));
        out += '\n';
    }
    return out;
}

// Bounded-block variants print zeros and leave only overweight cells blank.
std::string bounded_vector_table(
    int m, int klo, int khi, const std::vector<std::vector<int>>& cols,
    BigNat (*fn)(int, int, const std::vector<int>&)) {
    std::string out = vec_header(cols) + '\n';
    for (int k = klo; k <= khi; ++k) {
        out += std::to_string(k);
        for (const auto& t : cols) {
            out += ',';
            if (vec_weight(m, t) <= k) out += to_string(fn(m, k, t));
        }
        out += '\n';
    }
    return out;
}

// Cardinality tables: scalar vertex-count columns plus the monoid size.
std::string moncards_table(int m, int klo, int khi, int tcols,
                           BigNat (*scalar)(int, int, long),
                           BigNat (*card)(int, int)) {
    std::string out = "k/t";
    for (int c = 0; c < tcols; ++c) out += ',' + std::to_string(c * m);
    out += ",card\n";
    for (int k = klo; k <= khi; ++k) {
        out += std::to_string(k);
        for (int c = 0; c < tcols; ++c)
            out += ',' + blank_if_zero(scalar(m, k, (long)c * m));
        out += ',' + to_string(card(m, k)) + '\n';
    }
    return out;
}

std::string grid_table(const std::string& corner, int rlo, int rhi, int clo,
                       int chi,
                       const std::function<std::string(int, int)>& cell) {
    std::string out = corner;
    for (int c = clo; c <= chi; ++c) out += ',' + std::to_string(c);
    out += '\n';
    for (int r = rlo; r <= rhi; ++r) {
        out += std::to_string(r);
        for (int c = clo; c <= chi; ++c) out += ',' + cell(r, c);
        out += '\n';
    }
    return out;
}

std::string bound_table(int khi, BigNat (*fn)(int, int), int klo = 1) {
    return grid_table("m/k", 1, 5, klo, khi, [&](int m, int k) {
        return to_string(fn(m, k));
    });
}

// Elements of the planar mod-2 monoid of degree 7 tallied by the final run
// of their shortest word; rows stabilize once the degree exceeds j.
std::string candidate_r_table() {
    std::vector<std::vector<long long>> tally(8, std::vector<long long>(8, 0));
    for (const auto& [elt, word] :
         geodesic_lex_words(7, GenOrder::DiapsisFirst, 7)) {
        if (word.empty()) continue;
        auto run = end_run(word);
        if (!run) throw RangeError("geodesic word is not in run form");
        ++tally[run->first][run->second];
    }
    return grid_table("j/i", 1, 6, 1, 6, [&](int j, int i) {
        return i > j ? std::string() : std::to_string(tally[j][i]);
    });
}

}  // namespace

std::vector<std::string> table_names() {
    return {"PT2",
            "PT3",
            "PT4",
            "PN2",
            "PN3",
            "PN4",
            "PNB3",
            "PNB4",
            "XT2",
            "XT3",
            "XT4",
            "XN2",
            "XN3",
            "XN4",
            "XNB3",
            "XNB4",
            "pmod2moncards",
            "pmod3moncards",
            "pmod4moncards",
            "apsismod3moncards",
            "apsismod4moncards",
            "mod2moncards",
            "mod3moncards",
            "mod4moncards",
            "capsismon3moncards",
            "capsismon4moncards",
            "nointparts",
            "noorderedintparts",
            "nopmodmonDclasses",
            "nomodmonDclasses",
            "nopmodmonRclasses",
            "nomodmonRclasses",
            "Rjivalues",
            "candidateRjivalues"};
}

std::string render_table(const std::string& name) {
    if (name == "PT2") return transversal_table(2, 12, pt);
    if (name == "PT3") return transversal_table(3, 12, pt);
    if (name == "PT4") return transversal_table(4, 12, pt);
    if (name == "PN2") return vector_table(2, 0, 16, pn_columns(), pn_vec);
    if (name == "PN3") return vector_table(3, 0, 15, pn_columns(), pn_vec);
    if (name == "PN4") return vector_table(4, 0, 20, pn_columns(), pn_vec);
    if (name == "PNB3")
        return bounded_vector_table(3, 0, 15, pn_columns(), pnb_vec);
    if (name == "PNB4")
        return bounded_vector_table(4, 0, 20, pn_columns(), pnb_vec);
    if (name == "XT2") return transversal_table(2, 9, xt);
    if (name == "XT3") return transversal_table(3, 9, xt);
    if (name == "XT4") return transversal_table(4, 9, xt);
    if (name == "XN2") return vector_table(2, 2, 15, xn_columns(), xn_vec);
    if (name == "XN3") return vector_table(3, 3, 15, xn_columns(), xn_vec);
    if (name == "XN4") return vector_table(4, 4, 15, xn_columns(), xn_vec);
    if (name == "XNB3")
        return bounded_vector_table(3, 0, 11, xn_columns(), xnb_vec);
    if (name == "XNB4")
        return bounded_vector_table(4, 4, 15, xn_columns(), xnb_vec);
    if (name == "pmod2moncards") return moncards_table(2, 2, 20, 5, pn, pm_card);
    if (name == "pmod3moncards") return moncards_table(3, 3, 15, 5, pn, pm_card);
    if (name == "pmod4moncards") return moncards_table(4, 4, 20, 5, pn, pm_card);
    if (name == "apsismod3moncards")
        return moncards_table(3, 3, 15, 5, pnb, apsis_card);
    if (name == "apsismod4moncards")
        return moncards_table(4, 4, 20, 5, pnb, apsis_card);
    if (name == "mod2moncards") return moncards_table(2, 2, 15, 4, xn, mod_card);
    if (name == "mod3moncards") return moncards_table(3, 3, 15, 4, xn, mod_card);
    if (name == "mod4moncards") return moncards_table(4, 4, 15, 4, xn, mod_card);
    if (name == "capsismon3moncards")
        return moncards_table(3, 3, 11, 4, xnb, xapsis_card);
    if (name == "capsismon4moncards")
        return moncards_table(4, 4, 15, 4, xnb, xapsis_card);
    if (name == "nointparts") return bound_table(10, p_parts_bounded);
    if (name == "noorderedintparts") return bound_table(10, o_parts_bounded);
    if (name == "nopmodmonDclasses") return bound_table(10, d_classes_pmod, 0);
    if (name == "nomodmonDclasses") return bound_table(10, d_classes_mod, 0);
    if (name == "nopmodmonRclasses") return bound_table(10, r_classes_pmod);
    if (name == "nomodmonRclasses") return bound_table(10, r_classes_mod);
    if (name == "Rjivalues")
        return grid_table("j/i", 1, 10, 1, 10, [](int j, int i) {
            return i > j ? std::string() : to_string(catalan_triangle_R(j, i));
        });
    if (name == "candidateRjivalues") return candidate_r_table();
    throw RangeError("unknown table: " + name);
}

}  // namespace diagsemi
