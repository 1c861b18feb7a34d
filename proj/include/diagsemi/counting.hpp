#pragma once
#include <vector>

#include "diagsemi/bignat.hpp"
#include "diagsemi/families.hpp"

namespace diagsemi {

// t-vectors list block multiplicities: t[i] blocks of size (i+1)*m.
// Scalar forms take the total number t of vertices in such blocks and sum
// over every multiplicity vector of that weight.

BigNat pt(int m, int k1, int k2);
BigNat pn_vec(int m, int k, const std::vector<int>& t);
BigNat pn(int m, int k, long t);
BigNat pnb_vec(int m, int k, const std::vector<int>& t);
BigNat pnb(int m, int k, long t);

BigNat xt(int m, int k1, int k2);
BigNat xn_vec(int m, int k, const std::vector<int>& t);
BigNat xn(int m, int k, long t);
BigNat xnb_vec(int m, int k, const std::vector<int>& t);
BigNat xnb(int m, int k, long t);

BigNat pm_card(int m, int k);
BigNat apsis_card(int m, int k);   // m >= 3, k >= m
BigNat mod_card(int m, int k);
BigNat xapsis_card(int m, int k);  // m >= 3, k >= m

BigNat bell(int n);
BigNat catalan(int n);
BigNat fibonacci(int n);

BigNat p_parts_bounded(int m, int k);   // partitions of k into parts <= m
BigNat o_parts(int k);                  // compositions of k: 2^(k-1)
BigNat o_parts_bounded(int m, int k);   // compositions of k into parts <= m

BigNat d_classes_pmod(int m, int k);
BigNat d_classes_mod(int m, int k);
BigNat r_classes_pmod(int m, int k);
BigNat r_classes_mod(int m, int k);

BigNat catalan_triangle_R(int j, int i);

BigNat family_cardinality(const Family& f, int k);

}  // namespace diagsemi
