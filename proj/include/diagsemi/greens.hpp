#pragma once
#include <vector>

#include "diagsemi/bignat.hpp"
#include "diagsemi/bipartition.hpp"
#include "diagsemi/enumerate.hpp"
#include "diagsemi/families.hpp"

namespace diagsemi {

enum class GreensRelation { R, L, H, D, J };

struct GreensPartition {
    GreensRelation relation;
    std::vector<std::vector<int>> classes;  // ordered by least member
    std::vector<int> class_of;              // element index -> class id
};

// Whether some element of S has upper pattern p and lower pattern q.
// S must be closed under star.
bool pattern_compatible(const ElementSet& S, const Pattern& p,
                        const Pattern& q);

// R = equal upper patterns, L = equal lower patterns, H = both,
// D = J = pattern-compatibility components. S must be closed under star.
GreensPartition classes_by_pattern(const ElementSet& S, GreensRelation rel);

// Principal-ideal computation on the Cayley graph: R/L/J from strongly
// connected components of the right/left/two-sided reachability graphs,
// H = R meet L, D = join of R and L.
GreensPartition classes_by_ideals(const CayleyGraph& C, GreensRelation rel);

// Formula-based counts for Mod and PMod families.
BigNat count_d_classes(const Family& f, int k);
BigNat count_r_classes(const Family& f, int k);

}  // namespace diagsemi
