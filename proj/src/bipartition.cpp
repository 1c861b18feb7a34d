#include "diagsemi/bipartition.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <tuple>

#include "diagsemi/errors.hpp"
#include "json.hpp"

namespace diagsemi {

namespace {

int slot_of(int k, int v) {
    if (v >= 1 && v <= k) return v - 1;
    if (v <= -1 && v >= -k) return k + (-v) - 1;
    throw IndexOutOfRange("vertex " + std::to_string(v) +
                          " out of range for degree " + std::to_string(k));
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; i++) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[y] = x;
    }
};

}  // namespace

bool Pattern::operator<(const Pattern& o) const {
    return std::tie(degree, non_transversals, transversals) <
           std::tie(o.degree, o.non_transversals, o.transversals);
}

Bipartition Bipartition::from_raw_ids(int k, const std::vector<int>& raw) {
    Bipartition out;
    out.k_ = k;
    out.ids_.assign(2 * k, -1);
    std::vector<int> relabel;
    for (int p = 0; p < 2 * k; p++) {
        int r = raw[p];
        int id = -1;
        for (int q = 0; q < (int)relabel.size(); q++) {
            if (relabel[q] == r) {
                id = q;
                break;
            }
        }
        if (id < 0) {
            id = (int)relabel.size();
            relabel.push_back(r);
        }
        out.ids_[p] = id;
    }
    out.nblocks_ = (int)relabel.size();
    return out;
}

int Bipartition::block_id(int vertex) const {
    return ids_[slot_of(k_, vertex)];
}

std::vector<std::vector<int>> Bipartition::blocks() const {
    std::vector<std::vector<int>> out(nblocks_);
    for (int j = 1; j <= k_; j++) out[ids_[j - 1]].push_back(j);
    for (int j = 1; j <= k_; j++) out[ids_[k_ + j - 1]].push_back(-j);
    return out;
}

Bipartition make_bipartition(int k, const std::vector<std::vector<int>>& blocks) {
    if (k < 0) throw RangeError("negative degree");
    std::vector<int> raw(2 * k, -1);
    int next = 0;
    for (const auto& blk : blocks) {
        if (blk.empty()) continue;
        for (int v : blk) {
            int p = slot_of(k, v);
            if (raw[p] != -1)
                throw DuplicateVertex("vertex " + std::to_string(v) +
                                      " appears twice");
            raw[p] = next;
        }
        next++;
    }
    for (int p = 0; p < 2 * k; p++) {
        if (raw[p] == -1) {
            int j = p < k ? p + 1 : -(p - k + 1);
            throw MissingVertex("vertex " + std::to_string(j) + " not covered");
        }
    }
    return Bipartition::from_raw_ids(k, raw);
}

Bipartition identity(int k) {
    if (k < 0) throw RangeError("negative degree");
    std::vector<int> raw(2 * k);
    for (int j = 0; j < k; j++) raw[j] = raw[k + j] = j;
    return Bipartition::from_raw_ids(k, raw);
}

Bipartition product(const Bipartition& a, const Bipartition& b) {
    if (a.degree() != b.degree())
        throw DegreeMismatch("product of degrees " + std::to_string(a.degree()) +
                             " and " + std::to_string(b.degree()));
    int k = a.degree();
    // Nodes: 0..k-1 = a's upper row, k..2k-1 = glued middle row
    // (a's lower with b's upper), 2k..3k-1 = b's lower row.
    UnionFind uf(3 * k);
    const auto& ai = a.canonical_ids();
    const auto& bi = b.canonical_ids();
    std::vector<int> first_a(a.num_blocks(), -1), first_b(b.num_blocks(), -1);
    for (int p = 0; p < 2 * k; p++) {
        int node = p;  // a's upper slot j -> node j, lower slot j -> node k+j
        int id = ai[p];
        if (first_a[id] < 0)
            first_a[id] = node;
        else
            uf.unite(first_a[id], node);
    }
    for (int p = 0; p < 2 * k; p++) {
        int node = k + p;  // b's upper slot j -> node k+j, lower slot j -> node 2k+j
        int id = bi[p];
        if (first_b[id] < 0)
            first_b[id] = node;
        else
            uf.unite(first_b[id], node);
    }
    std::vector<int> raw(2 * k);
    for (int j = 0; j < k; j++) raw[j] = uf.find(j);
    for (int j = 0; j < k; j++) raw[k + j] = uf.find(2 * k + j);
    return Bipartition::from_raw_ids(k, raw);
}

Bipartition star(const Bipartition& a) {
    int k = a.degree();
    const auto& ids = a.canonical_ids();
    std::vector<int> raw(2 * k);
    for (int j = 0; j < k; j++) {
        raw[j] = ids[k + j];
        raw[k + j] = ids[j];
    }
    return Bipartition::from_raw_ids(k, raw);
}

Bipartition hsum(const Bipartition& a, const Bipartition& b) {
    int k1 = a.degree(), k2 = b.degree(), k = k1 + k2;
    int off = a.num_blocks();
    const auto& ai = a.canonical_ids();
    const auto& bi = b.canonical_ids();
    std::vector<int> raw(2 * k);
    for (int j = 0; j < k1; j++) {
        raw[j] = ai[j];
        raw[k + j] = ai[k1 + j];
    }
    for (int j = 0; j < k2; j++) {
        raw[k1 + j] = off + bi[j];
        raw[k + k1 + j] = off + bi[k2 + j];
    }
    return Bipartition::from_raw_ids(k, raw);
}

int rank(const Bipartition& a) {
    int k = a.degree();
    const auto& ids = a.canonical_ids();
    std::vector<char> up(a.num_blocks(), 0), low(a.num_blocks(), 0);
    for (int j = 0; j < k; j++) up[ids[j]] = 1;
    for (int j = 0; j < k; j++) low[ids[k + j]] = 1;
    int r = 0;
    for (int b = 0; b < a.num_blocks(); b++) r += up[b] && low[b];
    return r;
}

BlockType block_type(const std::vector<int>& block) {
    BlockType t;
    for (int v : block) (v > 0 ? t.upper : t.lower)++;
    return t;
}

bool is_uniform(const std::vector<int>& block) {
    BlockType t = block_type(block);
    return t.upper == t.lower;
}

bool is_transversal_line(const std::vector<int>& block) {
    BlockType t = block_type(block);
    return t.upper == 1 && t.lower == 1;
}

bool is_m_apsis(const std::vector<int>& block, int m) {
    if (m < 1) throw RangeError("apsis arity below 1");
    if ((int)block.size() != m) return false;
    BlockType t = block_type(block);
    if (t.upper != m && t.lower != m) return false;
    std::vector<int> js;
    for (int v : block) js.push_back(std::abs(v));
    std::sort(js.begin(), js.end());
    for (int i = 1; i < m; i++)
        if (js[i] != js[i - 1] + 1) return false;
    return true;
}

bool is_planar(const Bipartition& a) {
    int k = a.degree();
    if (k == 0) return true;
    const auto& ids = a.canonical_ids();
    // Boundary order: 1, ..., k, k', ..., 1'.
    std::vector<int> seq(2 * k);
    for (int j = 0; j < k; j++) seq[j] = ids[j];
    for (int j = 0; j < k; j++) seq[k + j] = ids[2 * k - 1 - j];
    std::vector<int> last(a.num_blocks(), -1);
    for (int p = 0; p < 2 * k; p++) last[seq[p]] = p;
    std::vector<int> stack;
    std::vector<char> open(a.num_blocks(), 0);
    for (int p = 0; p < 2 * k; p++) {
        int b = seq[p];
        if (open[b]) {
            if (stack.empty() || stack.back() != b) return false;
        } else {
            open[b] = 1;
            stack.push_back(b);
        }
        if (last[b] == p) {
            if (stack.back() != b) return false;
            stack.pop_back();
        }
    }
    return true;
}

bool is_modular(const Bipartition& a, int m) {
    if (m < 1) throw RangeError("modulus below 1");
    int k = a.degree();
    const auto& ids = a.canonical_ids();
    std::vector<int> up(a.num_blocks(), 0), low(a.num_blocks(), 0);
    for (int j = 0; j < k; j++) up[ids[j]]++;
    for (int j = 0; j < k; j++) low[ids[k + j]]++;
    for (int b = 0; b < a.num_blocks(); b++)
        if ((up[b] - low[b]) % m != 0) return false;
    return true;
}

Pattern upper_pattern(const Bipartition& a) {
    Pattern p;
    p.degree = a.degree();
    for (const auto& blk : a.blocks()) {
        std::vector<int> uppers;
        bool has_lower = false;
        for (int v : blk) {
            if (v > 0)
                uppers.push_back(v);
            else
                has_lower = true;
        }
        if (uppers.empty()) continue;
        (has_lower ? p.transversals : p.non_transversals).push_back(uppers);
    }
    return p;
}

Pattern lower_pattern(const Bipartition& a) { return upper_pattern(star(a)); }

std::string to_text(const Bipartition& a) {
    std::string out = "[";
    bool first_block = true;
    for (const auto& blk : a.blocks()) {
        if (!first_block) out += ",";
        first_block = false;
        out += "[";
        bool first = true;
        for (int v : blk) {
            if (!first) out += ",";
            first = false;
            if (v > 0) {
                out += std::to_string(v);
            } else {
                out += std::to_string(-v);
                out += "'";
            }
        }
        out += "]";
    }
    out += "]";
    return out;
}

Bipartition from_text(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError(why + " at offset " + std::to_string(pos));
    };
    auto expect = [&](char c) {
        if (pos >= s.size() || s[pos] != c)
            throw fail(std::string("expected '") + c + "'");
        pos++;
    };
    expect('[');
    std::vector<std::vector<int>> blocks;
    int maxj = 0;
    if (pos < s.size() && s[pos] != ']') {
        while (true) {
            expect('[');
            std::vector<int> blk;
            while (true) {
                if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
                    throw fail("expected vertex");
                int j = 0;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                    j = j * 10 + (s[pos] - '0');
                    pos++;
                }
                if (j == 0) throw fail("vertex labels start at 1");
                bool lower = pos < s.size() && s[pos] == '\'';
                if (lower) pos++;
                blk.push_back(lower ? -j : j);
                maxj = std::max(maxj, j);
                if (pos < s.size() && s[pos] == ',') {
                    pos++;
                    continue;
                }
                break;
            }
            expect(']');
            blocks.push_back(blk);
            if (pos < s.size() && s[pos] == ',') {
                pos++;
                continue;
            }
            break;
        }
    }
    expect(']');
    if (pos != s.size()) throw fail("trailing characters");
    return make_bipartition(maxj, blocks);
}

std::string to_json(const Bipartition& a) {
    nlohmann::json j;
    j["k"] = a.degree();
    j["blocks"] = a.blocks();
    return j.dump();
}

Bipartition from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("blocks"))
        throw ParseError("json must be an object with fields k and blocks");
    int k;
    std::vector<std::vector<int>> blocks;
    try {
        k = j.at("k").get<int>();
        blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad json fields: ") + e.what());
    }
    return make_bipartition(k, blocks);
}

}  // namespace diagsemi
