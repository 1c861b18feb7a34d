#pragma once
#include <cstddef>
#include <vector>

#include "diagsemi/bipartition.hpp"

namespace diagsemi {

inline constexpr std::size_t kDefaultMaxElements = 2000000;

struct ElementSet {
    int k = 0;
    std::vector<Bipartition> elements;  // sorted canonically

    // Index within elements, or -1 when absent.
    int index_of(const Bipartition& a) const;
};

// Right-multiplication closure of the generators together with identity(k).
ElementSet close(int k, const std::vector<Bipartition>& gens,
                 std::size_t max_elements = kDefaultMaxElements);
// Degree inferred from the generators; empty set raises RangeError.
ElementSet close(const std::vector<Bipartition>& gens,
                 std::size_t max_elements = kDefaultMaxElements);

struct CayleyGraph {
    ElementSet elements;
    std::vector<Bipartition> generators;
    // right[i][g] = index of elements[i] * generators[g],
    // left[i][g] = index of generators[g] * elements[i].
    std::vector<std::vector<int>> right;
    std::vector<std::vector<int>> left;
};

CayleyGraph cayley(int k, const std::vector<Bipartition>& gens,
                   std::size_t max_elements = kDefaultMaxElements);

// All bell(2k) bipartitions of degree k, sorted canonically.
// Guarded because the count explodes: k > degree_limit raises LimitExceeded.
ElementSet all_bipartitions(int k, int degree_limit = 5);

}  // namespace diagsemi
