#include "cyclo/codes.hpp"

#include <random>
#include <sstream>

namespace cyclo {

CodeSpec build_code(const FieldDesc& f, unsigned ell, uint64_t N) {
    const uint64_t p = f.p();
    const unsigned s = f.s();
    if (p % 8 != 3 && p % 8 != 5)
        throw InvalidInstanceError("build_code: requires p = 3 or 5 (mod 8)");
    if (ell == 0 || s % ell != 0)
        throw InvalidInstanceError("build_code: ell must divide s");
    const uint64_t q = f.q_u64();
    if (N == 0 || N == 1 || (q - 1) % N != 0)
        throw InvalidInstanceError("build_code: N must be a divisor of q-1 greater than 1");
    Int pl = int_pow_ui(static_cast<unsigned long>(p), ell);
    uint64_t ratio = to_u64(div_exact(f.q() - 1, pl - 1, "build_code"));
    uint64_t e = gcd_u64(N, ratio);
    if (e < 8 || (e & (e - 1)) != 0)
        throw InvalidInstanceError("build_code: gcd(N, (q-1)/(p^ell-1)) = " + std::to_string(e) +
                                   " is not a power of two with m >= 3");
    unsigned m = ord2_u64(e);
    // s/ell must be the multiplicative order of p^ell modulo (q-1)/N;
    // checked computationally rather than assumed.
    uint64_t modulus = (q - 1) / N;
    uint64_t pl64 = to_u64(pl);
    if (modulus > 1) {
        uint64_t ord = multiplicative_order_u64(pl64 % modulus, modulus);
        if (ord != s / ell)
            throw InvalidInstanceError("build_code: s/ell is not the multiplicative order of "
                                       "p^ell mod (q-1)/N");
    }
    CodeSpec c;
    c.p = p;
    c.ell = ell;
    c.s = s;
    c.N = N;
    c.length = (q - 1) / N;
    c.dim = s / ell;
    c.e = e;
    c.m = m;
    c.theta = f.pow(f.gamma(), N);
    return c;
}

uint64_t codeword_weight(const FieldDesc& f, const CodeSpec& c, const FieldElem& beta) {
    RelTraceMap rt(f, c.ell);
    uint64_t w = 0;
    FieldElem cur = beta;
    for (uint64_t i = 0; i < c.length; ++i) {
        if (rt.is_nonzero_at(cur)) ++w;
        cur = f.mul(cur, c.theta);
    }
    return w;
}

uint64_t weight_from_period(const CodeSpec& c, const Int& eta_star) {
    Int pl = int_pow_ui(static_cast<unsigned long>(c.p), c.ell);
    Int q = int_pow_ui(static_cast<unsigned long>(c.p), c.s);
    Int numer = (pl - 1) * (q - eta_star);
    Int w = div_exact(numer, pl * Int(static_cast<unsigned long>(c.N)),
                      "weight_from_period: weight not integral");
    if (w < 0) throw InconsistencyError("weight_from_period: negative weight");
    return to_u64(w);
}

uint64_t coset_index(const FieldDesc& f, const CodeSpec& c, const FieldElem& beta) {
    if (beta.is_zero()) throw InvalidInputError("coset_index: beta must be nonzero");
    const uint64_t exp = (f.q_u64() - 1) / c.e;
    FieldElem gamma_inv = f.inverse(f.gamma());
    FieldElem cur = beta;
    for (uint64_t j = 0; j < c.e; ++j) {
        if (f.pow(cur, exp).c == f.one().c) return j;
        cur = f.mul(cur, gamma_inv);
    }
    throw InconsistencyError("coset_index: no coset matched; e-th power structure broken");
}

Int WeightEnumerator::total() const {
    Int t = 0;
    for (const auto& [w, a] : counts) t += a;
    return t;
}

std::string WeightEnumerator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, a] : counts) {
        if (a == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (w == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "X";
        if (w > 1) os << "^" << w;
    }
    if (first) os << "0";
    return os.str();
}

WeightEnumerator weight_distribution_bruteforce(const FieldDesc& f, const CodeSpec& c,
                                                const BruteForceOptions& opt) {
    const uint64_t q = f.q_u64();
    const bool in_budget =
        static_cast<unsigned __int128>(q) * c.length <= static_cast<unsigned __int128>(opt.budget);
    BruteForceMode mode = opt.mode;
    if (mode == BruteForceMode::Auto)
        mode = in_budget ? BruteForceMode::Full : BruteForceMode::Representative;
    if (mode == BruteForceMode::Full && !in_budget)
        throw BudgetError("weight_distribution_bruteforce: q*length exceeds the budget");

    RelTraceMap rt(f, c.ell);
    // theta powers for one pass over the positions
    std::vector<FieldElem> positions;
    positions.reserve(c.length);
    {
        FieldElem cur = f.one();
        for (uint64_t i = 0; i < c.length; ++i) {
            positions.push_back(cur);
            cur = f.mul(cur, c.theta);
        }
    }
    auto weight_of = [&](const FieldElem& beta) {
        uint64_t w = 0;
        for (const auto& pos : positions) {
            if (rt.is_nonzero_at(f.mul(beta, pos))) ++w;
        }
        return w;
    };

    WeightEnumerator out;
    if (mode == BruteForceMode::Full) {
        for (uint64_t idx = 0; idx < q; ++idx) out.counts[weight_of(f.from_index(idx))] += 1;
        return out;
    }

    // representative mode: one representative per coset gamma^j H, plus a few
    // random members to confirm the weight is constant on the coset
    out.sampled = true;
    std::mt19937_64 rng(opt.seed);
    const uint64_t coset_size = (q - 1) / c.e;
    FieldElem ge = f.pow(f.gamma(), c.e);
    FieldElem rep = f.one();
    out.counts[0] = 1; // the zero codeword
    for (uint64_t j = 0; j < c.e; ++j) {
        uint64_t w = weight_of(rep);
        for (unsigned t = 0; t < opt.samples_per_coset; ++t) {
            uint64_t k = rng() % coset_size;
            FieldElem sample = f.mul(rep, f.pow(ge, k));
            if (weight_of(sample) != w)
                throw InconsistencyError(
                    "weight_distribution_bruteforce: weight not constant on a coset");
        }
        out.counts[w] += Int(static_cast<unsigned long>(coset_size));
        rep = f.mul(rep, f.gamma());
    }
    return out;
}

WeightEnumerator enumerator_closed_form(const CodeSpec& c, const PartitionSet& parts) {
    Spectrum sp = spectrum(c.p, c.s, c.m, parts);
    // code instances always land in an all-rational family: the gcd condition
    // forces 2^{m-1} | s (p = 3 mod 8) or 2^m | s (p = 5 mod 8)
    WeightEnumerator out;
    out.counts[0] = 1;
    Int coset_count = div_exact(int_pow_ui(static_cast<unsigned long>(c.p), c.s) - 1,
                                Int(static_cast<unsigned long>(c.e)), "enumerator_closed_form");
    for (const auto& e : sp.entries) {
        if (!e.value.is_rational_integer())
            throw InconsistencyError("enumerator_closed_form: spectrum value not rational; "
                                     "instance outside the code families");
        uint64_t w = weight_from_period(c, e.value.rational_value());
        out.counts[w] += Int(e.multiplicity) * coset_count;
    }
    return out;
}

} // namespace cyclo
