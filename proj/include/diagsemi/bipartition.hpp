#pragma once
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace diagsemi {

// Vertices are encoded as signed integers: +j is upper vertex j,
// -j is lower vertex j' (1 <= j <= k).

struct BlockType {
    int upper = 0;
    int lower = 0;
    bool operator==(const BlockType&) const = default;
};

struct Pattern {
    int degree = 0;
    // Vertex lists use unsigned labels 1..k; both lists are ordered by their
    // least member, which matches canonical block order.
    std::vector<std::vector<int>> non_transversals;
    std::vector<std::vector<int>> transversals;
    bool operator==(const Pattern&) const = default;
    bool operator<(const Pattern& o) const;
};

class Bipartition {
public:
    Bipartition() = default;  // degree 0 identity

    // Canonicalizes an arbitrary block-id labelling of the 2k vertex slots
    // (slots 0..k-1 = upper 1..k, slots k..2k-1 = lower 1..k).
    static Bipartition from_raw_ids(int k, const std::vector<int>& raw);

    int degree() const { return k_; }
    int num_blocks() const { return nblocks_; }
    const std::vector<int>& canonical_ids() const { return ids_; }
    int block_id(int vertex) const;  // canonical id of a signed vertex
    std::vector<std::vector<int>> blocks() const;  // canonical order, signed

    bool operator==(const Bipartition& o) const {
        return k_ == o.k_ && ids_ == o.ids_;
    }
    bool operator<(const Bipartition& o) const {
        if (k_ != o.k_) return k_ < o.k_;
        return ids_ < o.ids_;
    }

private:
    int k_ = 0;
    int nblocks_ = 0;
    std::vector<int> ids_;
};

Bipartition make_bipartition(int k, const std::vector<std::vector<int>>& blocks);
Bipartition identity(int k);
Bipartition product(const Bipartition& a, const Bipartition& b);
Bipartition star(const Bipartition& a);
Bipartition hsum(const Bipartition& a, const Bipartition& b);
int rank(const Bipartition& a);

BlockType block_type(const std::vector<int>& block);
bool is_uniform(const std::vector<int>& block);
bool is_transversal_line(const std::vector<int>& block);
bool is_m_apsis(const std::vector<int>& block, int m);

bool is_planar(const Bipartition& a);
bool is_modular(const Bipartition& a, int m);

Pattern upper_pattern(const Bipartition& a);
Pattern lower_pattern(const Bipartition& a);

std::string to_text(const Bipartition& a);
Bipartition from_text(const std::string& text);
std::string to_json(const Bipartition& a);
Bipartition from_json(const std::string& text);

}  // namespace diagsemi

template <>
struct std::hash<diagsemi::Bipartition> {
    std::size_t operator()(const diagsemi::Bipartition& a) const {
        std::size_t h = 1469598103934665603ull ^ (std::size_t)a.degree();
        for (int v : a.canonical_ids()) {
            h ^= (std::size_t)(v + 1);
            h *= 1099511628211ull;
        }
        return h;
    }
};
