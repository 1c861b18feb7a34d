#include "diagsemi/families.hpp"

#include <algorithm>
#include <cstdlib>

#include "diagsemi/errors.hpp"
#include "diagsemi/generators.hpp"

namespace diagsemi {

namespace {

bool all_block_sizes(const Bipartition& a, int size) {
    for (const auto& b : a.blocks())
        if ((int)b.size() != size) return false;
    return true;
}

bool all_vertical_lines(const Bipartition& a) {
    for (const auto& b : a.blocks()) {
        BlockType t = block_type(b);
        if (!(t.upper == 1 && t.lower == 1)) return false;
    }
    return true;
}

bool partial_permutation(const Bipartition& a) {
    for (const auto& b : a.blocks()) {
        BlockType t = block_type(b);
        if (t.upper > 1 || t.lower > 1) return false;
    }
    return true;
}

bool uniform(const Bipartition& a) {
    for (const auto& b : a.blocks())
        if (!is_uniform(b)) return false;
    return true;
}

// Every block is either a vertical line {i, i'} or a monapsis, with the
// upper monapsis positions matching the lower ones.
bool monapsis_projection(const Bipartition& a) {
    std::vector<int> up, low;
    for (const auto& b : a.blocks()) {
        BlockType t = block_type(b);
        if (t.upper == 1 && t.lower == 1) {
            if (b[0] != -b[1]) return false;
        } else if (t.upper == 1 && t.lower == 0) {
            up.push_back(b[0]);
        } else if (t.upper == 0 && t.lower == 1) {
            low.push_back(-b[0]);
        } else {
            return false;
        }
    }
    std::sort(up.begin(), up.end());
    std::sort(low.begin(), low.end());
    return up == low;
}

bool has_m_apsis(const Bipartition& a, int m, bool upper) {
    for (const auto& b : a.blocks()) {
        if ((b[0] > 0) != upper) continue;
        if (is_m_apsis(b, m)) return true;
    }
    return false;
}

bool has_block_type(const Bipartition& a, int up, int low) {
    for (const auto& b : a.blocks()) {
        BlockType t = block_type(b);
        if (t.upper == up && t.lower == low) return true;
    }
    return false;
}

void require_modulus(const Family& f) {
    if (f.m < 1) throw RangeError("family modulus must be >= 1");
}

}  // namespace

bool member(const Family& f, const Bipartition& a) {
    switch (f.kind) {
        case FamilyKind::Partition:
            return true;
        case FamilyKind::PlanarPartition:
            return is_planar(a);
        case FamilyKind::Symmetric:
            return all_vertical_lines(a);
        case FamilyKind::Jones:
            return all_block_sizes(a, 2) && is_planar(a);
        case FamilyKind::Brauer:
            return all_block_sizes(a, 2);
        case FamilyKind::SymInv:
            return partial_permutation(a);
        case FamilyKind::PlanarSymInv:
            return partial_permutation(a) && is_planar(a);
        case FamilyKind::UBB:
            return uniform(a);
        case FamilyKind::PlanarUBB:
            return uniform(a) && is_planar(a);
        case FamilyKind::Mod:
            require_modulus(f);
            return is_modular(a, f.m);
        case FamilyKind::PMod:
            require_modulus(f);
            return is_modular(a, f.m) && is_planar(a);
        case FamilyKind::Apsis:
            require_modulus(f);
            if (f.m == 1) return monapsis_projection(a);
            if (f.m == 2) return all_block_sizes(a, 2) && is_planar(a);
            if (a == identity(a.degree())) return true;
            return is_modular(a, f.m) && is_planar(a) &&
                   has_m_apsis(a, f.m, true) && has_m_apsis(a, f.m, false);
        case FamilyKind::CrossedApsis:
            require_modulus(f);
            if (f.m == 1) return partial_permutation(a);
            if (f.m == 2) return all_block_sizes(a, 2);
            if (!is_modular(a, f.m)) return false;
            return all_vertical_lines(a) ||
                   (has_block_type(a, f.m, 0) && has_block_type(a, 0, f.m));
    }
    throw UnsupportedFamily("unknown family kind");
}

std::vector<Bipartition> generating_set(const Family& f, int k) {
    if (k < 0) throw RangeError("degree must be >= 0");
    std::vector<Bipartition> gens;
    auto add_transpositions = [&] {
        for (int i = 1; i < k; ++i) gens.push_back(transposition(k, i));
    };
    auto add_transapses = [&] {
        for (int i = 1; i < k; ++i) gens.push_back(transapsis(k, i));
    };
    auto add_monapses = [&] {
        for (int i = 1; i <= k; ++i) gens.push_back(monapsis(k, i));
    };
    auto add_diapses = [&] {
        for (int i = 1; i < k; ++i) gens.push_back(diapsis(k, i));
    };
    auto add_apses = [&] {
        require_modulus(f);
        for (int i = 1; i + f.m - 1 <= k; ++i) gens.push_back(apsis(k, f.m, i));
    };
    switch (f.kind) {
        case FamilyKind::Partition:
            add_transpositions();
            add_transapses();
            add_monapses();
            break;
        case FamilyKind::PlanarPartition:
            add_transapses();
            add_monapses();
            break;
        case FamilyKind::Symmetric:
            add_transpositions();
            break;
        case FamilyKind::Jones:
            add_diapses();
            break;
        case FamilyKind::Brauer:
            add_transpositions();
            add_diapses();
            break;
        case FamilyKind::SymInv:
            add_transpositions();
            if (k >= 1) gens.push_back(monapsis(k, k));
            break;
        case FamilyKind::PlanarSymInv:
            for (int i = 1; i <= k; ++i) gens.push_back(pf_forward(k, i));
            for (int i = 1; i < k; ++i) gens.push_back(pf_backward(k, i));
            break;
        case FamilyKind::UBB:
            add_transpositions();
            if (k >= 2) gens.push_back(transapsis(k, 1));
            break;
        case FamilyKind::PlanarUBB:
            add_transapses();
            break;
        case FamilyKind::Mod:
            add_transpositions();
            add_transapses();
            add_apses();
            break;
        case FamilyKind::PMod:
            add_transapses();
            add_apses();
            break;
        case FamilyKind::Apsis:
            add_apses();
            gens.push_back(identity(k));
            break;
        case FamilyKind::CrossedApsis:
            add_apses();
            add_transpositions();
            break;
    }
    return gens;
}

Family family_from_string(const std::string& s) {
    if (s == "partition") return {FamilyKind::Partition};
    if (s == "planar") return {FamilyKind::PlanarPartition};
    if (s == "sym") return {FamilyKind::Symmetric};
    if (s == "jones") return {FamilyKind::Jones};
    if (s == "brauer") return {FamilyKind::Brauer};
    if (s == "syminv") return {FamilyKind::SymInv};
    if (s == "planarsyminv") return {FamilyKind::PlanarSymInv};
    if (s == "ubb") return {FamilyKind::UBB};
    if (s == "pubb") return {FamilyKind::PlanarUBB};
    auto pos = s.find(':');
    if (pos != std::string::npos) {
        std::string head = s.substr(0, pos);
        std::string tail = s.substr(pos + 1);
        if (!tail.empty() &&
            tail.find_first_not_of("0123456789") == std::string::npos) {
            int m = std::atoi(tail.c_str());
            if (m >= 1) {
                if (head == "mod") return {FamilyKind::Mod, m};
                if (head == "pmod") return {FamilyKind::PMod, m};
                if (head == "apsis") return {FamilyKind::Apsis, m};
                if (head == "xapsis") return {FamilyKind::CrossedApsis, m};
            }
        }
    }
    throw UnsupportedFamily("unknown family: " + s);
}

std::string family_to_string(const Family& f) {
    switch (f.kind) {
        case FamilyKind::Partition: return "partition";
        case FamilyKind::PlanarPartition: return "planar";
        case FamilyKind::Symmetric: return "sym";
        case FamilyKind::Jones: return "jones";
        case FamilyKind::Brauer: return "brauer";
        case FamilyKind::SymInv: return "syminv";
        case FamilyKind::PlanarSymInv: return "planarsyminv";
        case FamilyKind::UBB: return "ubb";
        case FamilyKind::PlanarUBB: return "pubb";
        case FamilyKind::Mod: return "mod:" + std::to_string(f.m);
        case FamilyKind::PMod: return "pmod:" + std::to_string(f.m);
        case FamilyKind::Apsis: return "apsis:" + std::to_string(f.m);
        case FamilyKind::CrossedApsis: return "xapsis:" + std::to_string(f.m);
    }
    throw UnsupportedFamily("unknown family kind");
}

}  // namespace diagsemi
