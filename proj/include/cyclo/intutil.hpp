#ifndef CYCLO_INTUTIL_HPP
#define CYCLO_INTUTIL_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclo/errors.hpp"

namespace cyclo {

// All exact arithmetic in this library runs on GMP integers.  Power sums of
// reduced periods reach magnitudes around q^e, far past any fixed width.
using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow_ui(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Exact division; throws if the quotient would not be integral.
inline Int div_exact(const Int& a, const Int& b, const char* what) {
    if (b == 0) throw InconsistencyError(std::string(what) + ": division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw InconsistencyError(std::string(what) + ": " + a.get_str() +
                                 " not divisible by " + b.get_str());
    return q;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline bool is_prime_u64(uint64_t n) {
    return is_prime(Int(static_cast<unsigned long>(n)));
}

inline bool fits_u64(const Int& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 63;
}

inline uint64_t to_u64(const Int& n) {
    if (!fits_u64(n)) throw BudgetError("value too large for 64-bit indexing: " + n.get_str());
    return static_cast<uint64_t>(mpz_get_ui(n.get_mpz_t()));
}

inline int64_t to_i64(const Int& n) {
    if (!mpz_fits_slong_p(n.get_mpz_t()))
        throw BudgetError("value too large for int64: " + n.get_str());
    return mpz_get_si(n.get_mpz_t());
}

// Largest r with r*r <= n, for 64-bit n.
inline uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n && (r + 1) != 0) ++r;
    return r;
}

inline bool is_perfect_square_u64(uint64_t n, uint64_t& root) {
    // cheap residue filter first: squares mod 16 are {0,1,4,9}
    static constexpr uint16_t kSquareMask16 = 0x0213; // bits 0,1,4,9
    if (!((kSquareMask16 >> (n & 15)) & 1)) return false;
    root = isqrt_u64(n);
    return root * root == n;
}

// 2-adic valuation of a positive integer.
inline unsigned ord2_u64(uint64_t n) {
    if (n == 0) throw InvalidInputError("ord2 of zero");
    unsigned v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    return v;
}

inline unsigned ord2(const Int& n) {
    if (n == 0) throw InvalidInputError("ord2 of zero");
    return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

// Distinct prime factors by trial division; fine at desk scale.
std::vector<uint64_t> distinct_prime_factors_u64(uint64_t n);

// a^e mod m without overflow (m < 2^63).
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
uint64_t multiplicative_order_u64(uint64_t a, uint64_t m);

uint64_t gcd_u64(uint64_t a, uint64_t b);

} // namespace cyclo

#endif
