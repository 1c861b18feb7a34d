#include "diagsemi/bignat.hpp"

#include "diagsemi/errors.hpp"

namespace diagsemi {

BigNat binomial(long n, long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    BigNat out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(r));
    return out;
}

BigNat factorial(long n) {
    if (n < 0) throw RangeError("factorial of negative argument");
    BigNat out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigNat double_factorial(long n) {
    if (n < -1) throw RangeError("double factorial of argument below -1");
    if (n == -1 || n == 0) return 1;
    BigNat out;
    mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigNat power_of_two(long e) {
    if (e < 0) throw RangeError("negative power of two");
    BigNat out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return out;
}

}  // namespace diagsemi
