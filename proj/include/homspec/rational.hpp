#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace homspec {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

// Rising factorial (a)_k = a (a+1) ... (a+k-1).
inline Int pochhammer(long a, int k) {
    Int p = 1;
    for (int i = 0; i < k; ++i) p *= Int(a + i);
    return p;
}

inline std::string rat_string(const Rat& q) { return q.get_str(); }

// Fixed six decimal places, round half to even.
inline std::string rat_decimal6(const Rat& q) {
    Int num = q.get_num(), den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int scaled = num * 1000000;
    Int quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    Int twice = rem * 2;
    if (twice > den || (twice == den && mpz_odd_p(quo.get_mpz_t()))) quo += 1;
    Int ip = quo / 1000000, fp = quo % 1000000;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), 6 - frac.size(), '0');
    std::string out = ip.get_str() + "." + frac;
    if (neg && quo != 0) out.insert(out.begin(), '-');
    return out;
}

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat norm_sq(const std::vector<Rat>& a) { return dot(a, a); }

}  // namespace homspec
