#pragma once
#include <utility>
#include <vector>

#include "diagsemi/bipartition.hpp"

namespace diagsemi {

Bipartition transposition(int k, int i);            // s_i
Bipartition transapsis(int k, int i);               // t_i, the (2,2)-transapsis
Bipartition apsis(int k, int m, int i);             // a^m_i
Bipartition monapsis(int k, int i);                 // e_i = a^1_i
Bipartition diapsis(int k, int i);                  // h_i = a^2_i
Bipartition pf_forward(int k, int i);               // f_i
Bipartition pf_backward(int k, int i);              // b_i

// Upper m-apsis starting at i, lower m-apsis starting at j, remaining
// vertices joined by the unique order-preserving planar matching.
Bipartition run(int k, int m, int i, int j);
Bipartition apmorph(int k, int m, const std::vector<int>& uppers,
                    const std::vector<int>& lowers);

// Building blocks with one wide transversal {1..mu, 1'..gamma'}:
// omega_bar pads with m-apses up to max(mu, gamma) and vertical lines beyond;
// omega pads with m-apses all the way to k on both sides.
Bipartition omega_bar(int k, int m, int mu, int gamma);
Bipartition omega(int k, int m, int mu, int gamma);

// Chain variants: r transversals; omega_chain keeps the first transversal
// leftmost with apses after it, upsilon_chain packs apses leftmost and all
// transversals rightmost.
Bipartition omega_chain(int k, int m,
                        const std::vector<std::pair<int, int>>& pairs);
Bipartition upsilon_chain(int k, int m,
                          const std::vector<std::pair<int, int>>& pairs);

}  // namespace diagsemi
