#include "cyclo/periods.hpp"

namespace cyclo {

PeriodCounts period_counts_with_generator(const FieldDesc& f, const FieldElem& g, uint64_t e) {
    const uint64_t q = f.q_u64();
    if (e == 0 || (q - 1) % e != 0)
        throw InvalidInputError("period_counts: e must divide q-1");

    const uint64_t qm1 = q - 1;
    const uint64_t fcos = qm1 / e; // coset size
    std::vector<uint8_t> tr = f.trace_power_table(g);

    PeriodCounts pc;
    pc.p = f.p();
    pc.e = e;
    pc.m.assign(e, std::vector<uint64_t>(f.p(), 0));
    // As t runs over Z_{q-1}, t*e hits each multiple of e exactly e times,
    // so counting over one coset and scaling by e gives the x-loop exactly.
    for (uint64_t j = 0; j < e; ++j) {
        auto& row = pc.m[j];
        row[0] += 1; // x = 0
        uint64_t idx = j % qm1;
        for (uint64_t h = 0; h < fcos; ++h) {
            row[tr[idx]] += e;
            idx += e;
            if (idx >= qm1) idx -= qm1;
        }
    }
    return pc;
}

PeriodCounts period_counts(const FieldDesc& f, uint64_t e) {
    return period_counts_with_generator(f, f.gamma(), e);
}

std::vector<CycloInt> reduced_periods(const PeriodCounts& pc) {
    std::vector<CycloInt> out;
    out.reserve(pc.m.size());
    for (const auto& row : pc.m) {
        // sum_c row[c] zeta^c with zeta^{p-1} eliminated
        std::vector<Int> coords(pc.p - 1);
        for (uint64_t c = 0; c + 1 < pc.p; ++c)
            coords[c] = Int(static_cast<unsigned long>(row[c])) -
                        Int(static_cast<unsigned long>(row[pc.p - 1]));
        out.emplace_back(pc.p, std::move(coords));
    }
    return out;
}

std::vector<CycloInt> ordinary_periods(const PeriodCounts& pc) {
    std::vector<CycloInt> out;
    out.reserve(pc.m.size());
    const Int e(static_cast<unsigned long>(pc.e));
    for (const auto& rp : reduced_periods(pc)) {
        CycloInt shifted = cyc_sub(rp, CycloInt::from_integer(pc.p, 1));
        out.push_back(cyc_div_exact(shifted, e, "ordinary_periods: eta* - 1 not divisible by e"));
    }
    return out;
}

std::vector<Int> power_sums(const std::vector<CycloInt>& periods, size_t upto) {
    if (periods.empty()) throw InvalidInputError("power_sums: empty period list");
    if (upto == 0) upto = periods.size();
    const uint64_t p = periods.front().p();
    std::vector<Int> out(upto);
    std::vector<CycloInt> acc(periods); // acc[j] = periods[j]^n
    for (size_t n = 1; n <= upto; ++n) {
        if (n > 1)
            for (size_t j = 0; j < acc.size(); ++j) acc[j] = cyc_mul(acc[j], periods[j]);
        CycloInt sum(p);
        for (const auto& a : acc) sum = cyc_add(sum, a);
        if (!sum.is_rational_integer())
            throw InconsistencyError("power sum s_" + std::to_string(n) +
                                     " is not a rational integer");
        out[n - 1] = sum.rational_value();
    }
    return out;
}

IntPoly oracle_period_poly(const FieldDesc& f, uint64_t e) {
    auto sums = power_sums(reduced_periods(period_counts(f, e)));
    return newton_from_power_sums(sums);
}

IntPoly reduced_to_ordinary_poly(const IntPoly& pstar, uint64_t e) {
    if (!pstar.is_monic()) throw InvalidInputError("reduced_to_ordinary_poly: polynomial not monic");
    const auto deg = static_cast<unsigned>(pstar.degree());
    if (deg != e) throw InvalidInputError("reduced_to_ordinary_poly: degree must equal e");
    IntPoly shifted = pstar.compose_linear(Int(static_cast<unsigned long>(e)), Int(1));
    Int ee = int_pow_ui(static_cast<unsigned long>(e), static_cast<unsigned long>(e));
    std::vector<Int> coeffs;
    coeffs.reserve(shifted.coeffs().size());
    for (const auto& c : shifted.coeffs())
        coeffs.push_back(div_exact(c, ee, "reduced_to_ordinary_poly: P*(eX+1) not divisible by e^e"));
    return IntPoly(std::move(coeffs));
}

Int count_diagonal_charsum(const FieldDesc& f, uint64_t e, unsigned n,
                          const std::vector<CycloInt>& periods) {
    if (n < 1) throw InvalidInputError("count_diagonal_charsum: n must be positive");
    if (periods.size() != e)
        throw InvalidInputError("count_diagonal_charsum: need exactly e periods");
    CycloInt sum(f.p());
    for (const auto& eta : periods) sum = cyc_add(sum, cyc_pow(eta, n));
    if (!sum.is_rational_integer())
        throw InconsistencyError("count_diagonal_charsum: power sum not rational");
    const Int& q = f.q();
    Int total = int_pow(q, n - 1) * (e * q) + (q - 1) * sum.rational_value();
    return div_exact(total, Int(static_cast<unsigned long>(e)) * q,
                     "count_diagonal_charsum: count not integral");
}

namespace {

// u(a) = #{x : x^e = a} as a dense vector over element indices.
std::vector<Int> eth_power_distribution(const FieldDesc& f, uint64_t e) {
    const uint64_t q = f.q_u64();
    std::vector<Int> u(q, 0);
    u[0] = 1;
    FieldElem ge = f.pow(f.gamma(), e);
    FieldElem cur = f.one();
    const uint64_t fcos = (q - 1) / e;
    for (uint64_t k = 0; k < fcos; ++k) {
        u[f.index_of(cur)] += static_cast<unsigned long>(e);
        cur = f.mul(cur, ge);
    }
    return u;
}

} // namespace

std::vector<Int> count_diagonal_convolution_range(const FieldDesc& f, uint64_t e,
                                                  unsigned max_n, uint64_t budget) {
    const uint64_t q = f.q_u64();
    if (q > budget)
        throw BudgetError("count_diagonal_convolution: q exceeds the convolution budget");
    if (max_n < 1) throw InvalidInputError("count_diagonal_convolution: n must be positive");
    if (e == 0 || (q - 1) % e != 0)
        throw InvalidInputError("count_diagonal_convolution: e must divide q-1");

    const uint64_t p = f.p();
    std::vector<Int> u = eth_power_distribution(f, e);
    // sparse support of u keeps each convolution step at q * (q/e + 1) work
    std::vector<std::pair<uint64_t, Int>> support;
    for (uint64_t a = 0; a < q; ++a)
        if (u[a] != 0) support.emplace_back(a, u[a]);

    // additive index shift in (Z_p)^s, digitwise
    auto add_idx = [&](uint64_t a, uint64_t b) {
        uint64_t out = 0, mult = 1;
        for (unsigned i = 0; i < f.s(); ++i) {
            uint64_t d = a % p + b % p;
            if (d >= p) d -= p;
            out += d * mult;
            mult *= p;
            a /= p;
            b /= p;
        }
        return out;
    };

    std::vector<Int> counts(max_n);
    counts[0] = u[0];
    std::vector<Int> v = u; // v = u^{*k}
    for (unsigned k = 2; k <= max_n; ++k) {
        std::vector<Int> w(q, 0);
        for (uint64_t a = 0; a < q; ++a) {
            if (v[a] == 0) continue;
            for (const auto& [b, ub] : support) {
                Int& slot = w[add_idx(a, b)];
                mpz_addmul(slot.get_mpz_t(), v[a].get_mpz_t(), ub.get_mpz_t());
            }
        }
        v = std::move(w);
        counts[k - 1] = v[0];
    }
    return counts;
}

Int count_diagonal_convolution(const FieldDesc& f, uint64_t e, unsigned n, uint64_t budget) {
    return count_diagonal_convolution_range(f, e, n, budget).back();
}

} // namespace cyclo
