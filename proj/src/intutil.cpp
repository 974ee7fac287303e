#include "cyclo/intutil.hpp"

namespace cyclo {

std::vector<uint64_t> distinct_prime_factors_u64(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t multiplicative_order_u64(uint64_t a, uint64_t m) {
    if (m == 1) return 1;
    a %= m;
    if (gcd_u64(a, m) != 1) throw InvalidInputError("multiplicative order: arguments not coprime");
    // Order divides the group exponent; walk down from a multiple.
    uint64_t ord = 1;
    uint64_t cur = a;
    while (cur != 1) {
        cur = mulmod_u64(cur, a, m);
        ++ord;
        if (ord > m) throw InconsistencyError("multiplicative order search overran the modulus");
    }
    return ord;
}

} // namespace cyclo
