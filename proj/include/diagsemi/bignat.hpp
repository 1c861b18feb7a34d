#pragma once
#include <gmpxx.h>

#include <string>

namespace diagsemi {

using BigNat = mpz_class;

BigNat binomial(long n, long r);
BigNat factorial(long n);
BigNat double_factorial(long n);
BigNat power_of_two(long e);

inline std::string to_string(const BigNat& v) { return v.get_str(); }

}  // namespace diagsemi
