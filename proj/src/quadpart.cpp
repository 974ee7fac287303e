#include "cyclo/quadpart.hpp"

namespace cyclo {

namespace {

uint64_t checked_prime_power(uint64_t p, unsigned k, const char* what) {
    if (k == 0) throw InvalidInputError(std::string(what) + ": k must be positive");
    Int pk = int_pow_ui(static_cast<unsigned long>(p), k);
    if (mpz_sizeinbase(pk.get_mpz_t(), 2) > 62)
        throw BudgetError(std::string(what) + ": p^k too large for exhaustive search");
    return to_u64(pk);
}

// Normalized sign: of +a/-a (a odd), exactly one is = -1 (mod 4).
int64_t normalize_mod4(uint64_t a) {
    return (a % 4 == 3) ? static_cast<int64_t>(a) : -static_cast<int64_t>(a);
}

} // namespace

Partition2B2 solve_2B2(uint64_t p, unsigned k) {
    if (p % 8 != 3) throw InvalidInputError("solve_2B2: requires p = 3 (mod 8)");
    const uint64_t pk = checked_prime_power(p, k, "solve_2B2");
    // A is odd, so scanning odd a covers every candidate |A| exactly once.
    Partition2B2 found;
    unsigned survivors = 0;
    uint64_t a_mod_p = 1;
    for (uint64_t a = 1; a * a <= pk; a += 2) {
        if (a_mod_p != 0) {
            uint64_t rem = pk - a * a; // even: odd minus odd
            uint64_t b2 = rem / 2, b = 0;
            if (is_perfect_square_u64(b2, b)) {
                ++survivors;
                found = Partition2B2{p, k, normalize_mod4(a), static_cast<int64_t>(b)};
            }
        }
        a_mod_p += 2;
        if (a_mod_p >= p) a_mod_p -= p;
    }
    if (survivors == 0)
        throw NoRepresentationError("solve_2B2: no representation p^k = A^2 + 2B^2 found");
    if (survivors > 1)
        throw UniquenessViolationError("solve_2B2: normalized representation is not unique");
    return found;
}

PartitionD2 solve_D2(uint64_t p, unsigned k) {
    if (p % 8 != 5) throw InvalidInputError("solve_D2: requires p = 5 (mod 8)");
    const uint64_t pk = checked_prime_power(p, k, "solve_D2");
    // C is odd (p^k is 1 or 5 mod 8, so the odd member of the pair is C).
    PartitionD2 found;
    unsigned survivors = 0;
    uint64_t c_mod_p = 1;
    for (uint64_t c = 1; c * c <= pk; c += 2) {
        if (c_mod_p != 0) {
            uint64_t d2 = pk - c * c, d = 0;
            if (is_perfect_square_u64(d2, d)) {
                ++survivors;
                found = PartitionD2{p, k, normalize_mod4(c), static_cast<int64_t>(d)};
            }
        }
        c_mod_p += 2;
        if (c_mod_p >= p) c_mod_p -= p;
    }
    if (survivors == 0)
        throw NoRepresentationError("solve_D2: no representation p^k = C^2 + D^2 found");
    if (survivors > 1)
        throw UniquenessViolationError("solve_D2: normalized representation is not unique");
    return found;
}

const Partition2B2& PartitionSet::A(unsigned r) const {
    auto it = ab.find(r);
    if (it == ab.end())
        throw InconsistencyError("partition A_" + std::to_string(r) + " missing from set");
    return it->second;
}

const PartitionD2& PartitionSet::C(unsigned r) const {
    auto it = cd.find(r);
    if (it == cd.end())
        throw InconsistencyError("partition C_" + std::to_string(r) + " missing from set");
    return it->second;
}

PartitionSet partitions_for_instance(uint64_t p, unsigned s, unsigned m, CaseTag tag) {
    PartitionSet out;
    auto exact_exponent = [&](unsigned shift) -> unsigned {
        // s / 2^shift, which the case classification must have made integral
        if (shift >= 32 || s % (1u << shift) != 0)
            throw InconsistencyError("partitions_for_instance: exponent s/2^" +
                                     std::to_string(shift) + " not integral (case bug)");
        return s >> shift;
    };
    switch (tag) {
    case CaseTag::P3LinearSplit:
    case CaseTag::P3HalfSplit:
    case CaseTag::P3Exact4M4:
        for (unsigned r = 3; r <= m; ++r) out.ab.emplace(r, solve_2B2(p, exact_exponent(r - 2)));
        break;
    case CaseTag::P3Order8Div4:
    case CaseTag::P3Order8Exact2:
        out.ab.emplace(3, solve_2B2(p, exact_exponent(1)));
        break;
    case CaseTag::P5LinearSplit:
    case CaseTag::P5HalfSplit:
        for (unsigned r = 2; r <= m; ++r) out.cd.emplace(r, solve_D2(p, exact_exponent(r - 1)));
        break;
    case CaseTag::P5QuarterSplit:
        for (unsigned r = 2; r <= m - 1; ++r)
            out.cd.emplace(r, solve_D2(p, exact_exponent(r - 1)));
        break;
    case CaseTag::P5Order4Div4:
        for (unsigned r = 2; r <= 2; ++r) out.cd.emplace(r, solve_D2(p, exact_exponent(1)));
        break;
    case CaseTag::P5Order4Exact2:
        out.cd.emplace(2, solve_D2(p, exact_exponent(1)));
        break;
    case CaseTag::P5Order4Odd:
        break; // no closed form, nothing to solve
    }
    return out;
}

} // namespace cyclo
