#pragma once
#include <string>
#include <vector>

#include "diagsemi/bipartition.hpp"

namespace diagsemi {

enum class FamilyKind {
    Partition,
    PlanarPartition,
    Symmetric,
    Jones,
    Brauer,
    SymInv,
    PlanarSymInv,
    UBB,
    PlanarUBB,
    Mod,
    PMod,
    Apsis,
    CrossedApsis,
};

struct Family {
    FamilyKind kind;
    int m = 0;  // modulus / apsis arity for Mod, PMod, Apsis, CrossedApsis
};

bool member(const Family& f, const Bipartition& a);
std::vector<Bipartition> generating_set(const Family& f, int k);

// CLI spellings: partition, planar, sym, jones, brauer, syminv,
// planarsyminv, ubb, pubb, mod:<m>, pmod:<m>, apsis:<m>, xapsis:<m>.
Family family_from_string(const std::string& s);
std::string family_to_string(const Family& f);

}  // namespace diagsemi
