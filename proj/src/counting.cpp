#include "diagsemi/counting.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "diagsemi/errors.hpp"

namespace diagsemi {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw RangeError(what);
}

std::vector<int> trimmed(std::vector<int> t) {
    while (!t.empty() && t.back() == 0) t.pop_back();
    return t;
}

long weight(int m, const std::vector<int>& t) {
    long w = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        w += (long)(i + 1) * m * t[i];
    return w;
}

using VecKey = std::tuple<int, int, std::vector<int>>;

// Noncrossing transversal grid: blocks take a >= 1 uppers and b >= 1 lowers
// with a = b (mod m), consuming a prefix of each row.
BigNat pt_rec(int m, int k1, int k2) {
    if (k1 == 0 && k2 == 0) return 1;
    if (k1 == 0 || k2 == 0) return 0;
    if (k1 % m != k2 % m) return 0;
    static std::map<std::tuple<int, int, int>, BigNat> memo;
    auto key = std::make_tuple(m, k1, k2);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigNat s = 0;
    for (int a = 1; a <= k1; ++a)
        for (int b = 1; b <= k2; ++b)
            if (a % m == b % m) s += pt_rec(m, k1 - a, k2 - b);
    memo.emplace(key, s);
    return s;
}

// Crossed variant: the block containing the first upper vertex picks its
// remaining a-1 uppers and all b lowers freely.
BigNat xt_rec(int m, int k1, int k2) {
    if (k1 == 0 && k2 == 0) return 1;
    if (k1 == 0 || k2 == 0) return 0;
    if (k1 % m != k2 % m) return 0;
    static std::map<std::tuple<int, int, int>, BigNat> memo;
    auto key = std::make_tuple(m, k1, k2);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigNat s = 0;
    for (int a = 1; a <= k1; ++a)
        for (int b = 1; b <= k2; ++b)
            if (a % m == b % m)
                s += binomial(k1 - 1, a - 1) * binomial(k2, b) *
                     xt_rec(m, k1 - a, k2 - b);
    memo.emplace(key, s);
    return s;
}

// t trimmed throughout.
BigNat pn_rec(int m, int k, const std::vector<int>& t) {
    if (weight(m, t) > k) return 0;
    if (t.empty()) return 1;
    static std::map<VecKey, BigNat> memo;
    VecKey key{m, k, t};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigNat s = pn_rec(m, k - 1, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == 0) continue;
        std::vector<int> t2 = t;
        --t2[i];
        s += pn_rec(m, k - 1, trimmed(std::move(t2)));
    }
    memo.emplace(std::move(key), s);
    return s;
}

BigNat pnb_rec(int m, int k, const std::vector<int>& t) {
    if (weight(m, t) > k) return 0;
    if (t.empty()) return 1;
    if (t[0] == 0) return 0;
    static std::map<VecKey, BigNat> memo;
    VecKey key{m, k, t};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigNat s = pnb_rec(m, k - 1, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == 0) continue;
        std::vector<int> t2 = t;
        --t2[i];
        s += pnb_rec(m, k - 1, trimmed(std::move(t2)));
    }
    std::vector<int> tm = t;
    --tm[0];
    tm = trimmed(std::move(tm));
    s += pn_rec(m, k - m, tm) - pnb_rec(m, k - m, tm);
    memo.emplace(std::move(key), s);
    return s;
}

BigNat xn_rec(int m, int k, const std::vector<int>& t) {
    if (t.empty()) return 1;
    if (weight(m, t) > k) return 0;
    static std::map<VecKey, BigNat> memo;
    VecKey key{m, k, t};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigNat s = xn_rec(m, k - 1, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == 0) continue;
        int im = (int)(i + 1) * m;
        std::vector<int> t2 = t;
        --t2[i];
        s += binomial(k - 1, im - 1) * xn_rec(m, k - im, trimmed(std::move(t2)));
    }
    memo.emplace(std::move(key), s);
    return s;
}

BigNat xnb_rec(int m, int k, const std::vector<int>& t) {
    if (!t.empty() && t[0] == 0) return 0;
    return xn_rec(m, k, t);
}

// Every multiplicity vector of length k/m and weight t, fed to fn.
template <typename Fn>
void for_each_composition(int m, int k, long t, Fn fn) {
    int x = k / m;
    std::vector<int> acc(x, 0);
    auto rec = [&](auto&& self, int i, long rem) -> void {
        if (i == x) {
            if (rem == 0) fn(acc);
            return;
        }
        long step = (long)(i + 1) * m;
        for (int c = 0; c * step <= rem; ++c) {
            acc[i] = c;
            self(self, i + 1, rem - c * step);
        }
        acc[i] = 0;
    };
    rec(rec, 0, t);
}

void check_mk(int m, int k) {
    require(m >= 1, "modulus must be >= 1");
    require(k >= 0, "degree must be >= 0");
}

BigNat ballot(int n, int kk) {
    if (kk < 0 || kk > n) return 0;
    if (kk == 0) return 1;
    static std::map<std::pair<int, int>, BigNat> memo;
    auto key = std::make_pair(n, kk);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigNat s = ballot(n - 1, kk) + ballot(n, kk - 1);
    memo.emplace(key, s);
    return s;
}

// Uniform block bijections: pick two set partitions of the same type and a
// size-preserving matching between their blocks.
BigNat ubb_card(int k) {
    BigNat total = 0;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int maxpart, int rem) -> void {
        if (rem == 0) {
            BigNat n = factorial(k);
            for (int p : parts) n /= factorial(p);
            BigNat mults = 1;
            for (std::size_t i = 0; i < parts.size();) {
                std::size_t j = i;
                while (j < parts.size() && parts[j] == parts[i]) ++j;
                mults *= factorial((long)(j - i));
                i = j;
            }
            n /= mults;
            total += n * n * mults;
            return;
        }
        for (int p = std::min(maxpart, rem); p >= 1; --p) {
            parts.push_back(p);
            self(self, p, rem - p);
            parts.pop_back();
        }
    };
    rec(rec, k, k);
    return total;
}

BigNat syminv_card(int k) {
    BigNat s = 0;
    for (int i = 0; i <= k; ++i) {
        BigNat c = binomial(k, i);
        s += c * c * factorial(i);
    }
    return s;
}

}  // namespace

BigNat pt(int m, int k1, int k2) {
    require(m >= 1, "modulus must be >= 1");
    require(k1 >= 0 && k2 >= 0, "row sizes must be >= 0");
    return pt_rec(m, k1, k2);
}

BigNat xt(int m, int k1, int k2) {
    require(m >= 1, "modulus must be >= 1");
    require(k1 >= 0 && k2 >= 0, "row sizes must be >= 0");
    return xt_rec(m, k1, k2);
}

BigNat pn_vec(int m, int k, const std::vector<int>& t) {
    check_mk(m, k);
    return pn_rec(m, k, trimmed(t));
}

BigNat pn(int m, int k, long t) {
    check_mk(m, k);
    if (t < 0) return 0;
    BigNat s = 0;
    for_each_composition(m, k, t,
                         [&](const std::vector<int>& v) { s += pn_rec(m, k, trimmed(v)); });
    return s;
}

BigNat pnb_vec(int m, int k, const std::vector<int>& t) {
    if (m < 3) throw UnsupportedRange("pnb requires m >= 3");
    require(k >= 0, "degree must be >= 0");
    return pnb_rec(m, k, trimmed(t));
}

BigNat pnb(int m, int k, long t) {
    if (m < 3) throw UnsupportedRange("pnb requires m >= 3");
    require(k >= 0, "degree must be >= 0");
    if (t == 0) return 1;
    if (t < 0) return 0;
    BigNat s = 0;
    for_each_composition(m, k, t, [&](const std::vector<int>& v) {
        if (!v.empty() && v[0] >= 1) s += pnb_rec(m, k, trimmed(v));
    });
    return s;
}

BigNat xn_vec(int m, int k, const std::vector<int>& t) {
    check_mk(m, k);
    return xn_rec(m, k, trimmed(t));
}

BigNat xn(int m, int k, long t) {
    check_mk(m, k);
    if (t < 0) return 0;
    BigNat s = 0;
    for_each_composition(m, k, t,
                         [&](const std::vector<int>& v) { s += xn_rec(m, k, trimmed(v)); });
    return s;
}

BigNat xnb_vec(int m, int k, const std::vector<int>& t) {
    if (m < 3) throw UnsupportedRange("xnb requires m >= 3");
    require(k >= 0, "degree must be >= 0");
    return xnb_rec(m, k, trimmed(t));
}

BigNat xnb(int m, int k, long t) {
    if (m < 3) throw UnsupportedRange("xnb requires m >= 3");
    require(k >= 0, "degree must be >= 0");
    if (t == 0) return 1;
    if (t < 0) return 0;
    BigNat s = 0;
    for_each_composition(m, k, t, [&](const std::vector<int>& v) {
        if (!v.empty() && v[0] >= 1) s += xnb_rec(m, k, trimmed(v));
    });
    return s;
}

BigNat pm_card(int m, int k) {
    check_mk(m, k);
    BigNat s = 0;
    for (int u = 0; u * m <= k; ++u)
        for (int l = 0; l * m <= k; ++l)
            s += pn(m, k, (long)m * u) * pn(m, k, (long)m * l) *
                 pt_rec(m, k - m * u, k - m * l);
    return s;
}

BigNat apsis_card(int m, int k) {
    if (m < 3 || k < m)
        throw UnsupportedRange("apsis cardinality requires 3 <= m <= k");
    BigNat s = 1;
    for (int u = 1; u * m <= k; ++u)
        for (int l = 1; l * m <= k; ++l)
            s += pnb(m, k, (long)m * u) * pnb(m, k, (long)m * l) *
                 pt_rec(m, k - m * u, k - m * l);
    return s;
}

BigNat mod_card(int m, int k) {
    check_mk(m, k);
    BigNat s = 0;
    for (int u = 0; u * m <= k; ++u)
        for (int l = 0; l * m <= k; ++l)
            s += xn(m, k, (long)m * u) * xn(m, k, (long)m * l) *
                 xt_rec(m, k - m * u, k - m * l);
    return s;
}

BigNat xapsis_card(int m, int k) {
    if (m < 3 || k < m)
        throw UnsupportedRange("crossed apsis cardinality requires 3 <= m <= k");
    BigNat s = factorial(k);
    for (int u = 1; u * m <= k; ++u)
        for (int l = 1; l * m <= k; ++l)
            s += xnb(m, k, (long)m * u) * xnb(m, k, (long)m * l) *
                 xt_rec(m, k - m * u, k - m * l);
    return s;
}

BigNat bell(int n) {
    require(n >= 0, "bell of negative argument");
    static std::vector<BigNat> memo{1};
    while ((int)memo.size() <= n) {
        int sz = (int)memo.size();
        BigNat s = 0;
        for (int i = 0; i < sz; ++i) s += binomial(sz - 1, i) * memo[i];
        memo.push_back(s);
    }
    return memo[n];
}

BigNat catalan(int n) {
    require(n >= 0, "catalan of negative argument");
    return binomial(2L * n, n) / (n + 1);
}

BigNat fibonacci(int n) {
    require(n >= 0, "fibonacci of negative argument");
    BigNat out;
    mpz_fib_ui(out.get_mpz_t(), (unsigned long)n);
    return out;
}

BigNat p_parts_bounded(int m, int k) {
    require(m >= 0, "part bound must be >= 0");
    if (k < 0) return 0;
    if (m == 0) return k == 0 ? 1 : 0;
    if (k == 0) return 1;
    static std::map<std::pair<int, int>, BigNat> memo;
    auto key = std::make_pair(m, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigNat s = p_parts_bounded(m - 1, k) + p_parts_bounded(m, k - m);
    memo.emplace(key, s);
    return s;
}

BigNat o_parts(int k) {
    require(k >= 0, "composition count of negative argument");
    return power_of_two(std::max(0, k - 1));
}

BigNat o_parts_bounded(int m, int k) {
    require(m >= 1, "part bound must be >= 1");
    if (k < 0) return 0;
    if (m >= k) return power_of_two(std::max(0, k - 1));
    static std::map<std::pair<int, int>, BigNat> memo;
    auto key = std::make_pair(m, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigNat s = 0;
    for (int i = 1; i <= m; ++i) s += o_parts_bounded(m, k - i);
    memo.emplace(key, s);
    return s;
}

BigNat d_classes_pmod(int m, int k) {
    check_mk(m, k);
    if (k == 0) return 1;
    if (m > k) return power_of_two(std::max(0, k - 1));
    return d_classes_pmod(m, k - m) + o_parts_bounded(m, k);
}

BigNat d_classes_mod(int m, int k) {
    check_mk(m, k);
    if (k == 0) return 1;
    if (m > k) return p_parts_bounded(m, k);
    return d_classes_mod(m, k - m) + p_parts_bounded(m, k);
}

BigNat r_classes_pmod(int m, int k) {
    check_mk(m, k);
    if (m > k) return power_of_two(std::max(0, k - 1));
    BigNat s = 0;
    for (int u = 0; u * m <= k; ++u)
        s += pn(m, k, (long)m * u) * power_of_two(std::max(0, k - m * u - 1));
    return s;
}

BigNat r_classes_mod(int m, int k) {
    check_mk(m, k);
    if (m > k) return bell(k);
    BigNat s = 0;
    for (int u = 0; u * m <= k; ++u)
        s += xn(m, k, (long)m * u) * bell(k - m * u);
    return s;
}

BigNat catalan_triangle_R(int j, int i) {
    require(j >= 1 && i >= 1, "triangle indices start at 1");
    return ballot(j, i - 1);
}

BigNat family_cardinality(const Family& f, int k) {
    require(k >= 0, "degree must be >= 0");
    switch (f.kind) {
        case FamilyKind::Partition:
            return bell(2 * k);
        case FamilyKind::PlanarPartition:
            return catalan(2 * k);
        case FamilyKind::Symmetric:
            return factorial(k);
        case FamilyKind::Jones:
            return catalan(k);
        case FamilyKind::Brauer:
            return double_factorial(2L * k - 1);
        case FamilyKind::SymInv:
            return syminv_card(k);
        case FamilyKind::PlanarSymInv:
            return binomial(2L * k, k);
        case FamilyKind::UBB:
            return ubb_card(k);
        case FamilyKind::PlanarUBB:
            return power_of_two(std::max(0, k - 1));
        case FamilyKind::Mod:
            require(f.m >= 1, "modulus must be >= 1");
            return mod_card(f.m, k);
        case FamilyKind::PMod:
            require(f.m >= 1, "modulus must be >= 1");
            return pm_card(f.m, k);
        case FamilyKind::Apsis:
            require(f.m >= 1, "modulus must be >= 1");
            if (f.m == 1) return power_of_two(k);
            if (f.m == 2) return catalan(k);
            if (k < f.m) return 1;
            return apsis_card(f.m, k);
        case FamilyKind::CrossedApsis:
            require(f.m >= 1, "modulus must be >= 1");
            if (f.m == 1) return syminv_card(k);
            if (f.m == 2) return double_factorial(2L * k - 1);
            if (k < f.m) return factorial(k);
            return xapsis_card(f.m, k);
    }
    throw UnsupportedFamily("unknown family kind");
}

}  // namespace diagsemi
