#include "cyclo/closedform.hpp"

#include <algorithm>

namespace cyclo {

std::string to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::P3LinearSplit: return "p3-linear-split";
    case CaseTag::P3HalfSplit: return "p3-half-split";
    case CaseTag::P3Exact4M4: return "p3-order16-exact4";
    case CaseTag::P3Order8Div4: return "p3-order8-4div";
    case CaseTag::P3Order8Exact2: return "p3-order8-exact2";
    case CaseTag::P5LinearSplit: return "p5-linear-split";
    case CaseTag::P5HalfSplit: return "p5-half-split";
    case CaseTag::P5QuarterSplit: return "p5-quarter-split";
    case CaseTag::P5Order4Div4: return "p5-order4-4div";
    case CaseTag::P5Order4Exact2: return "p5-order4-exact2";
    case CaseTag::P5Order4Odd: return "p5-order4-odd-irreducible";
    }
    return "?";
}

CaseTag classify(uint64_t p, unsigned s, unsigned m) {
    if (!is_prime_u64(p)) throw InvalidInputError("classify: p must be prime");
    if (s == 0) throw InvalidInputError("classify: s must be positive");
    if (m < 2) throw InvalidInputError("classify: m must be at least 2");
    const unsigned o2 = ord2_u64(s);
    const unsigned pm8 = static_cast<unsigned>(p % 8);
    if (pm8 != 3 && pm8 != 5)
        throw InvalidInstanceError("classify: requires p = 3 or 5 (mod 8)");
    // ord2(q-1) = ord2(s) + 2 in these residue classes
    if (o2 + 2 < m)
        throw InvalidInstanceError("classify: 2^m does not divide q-1 (ord2(q-1) = ord2(s)+2 = " +
                                   std::to_string(o2 + 2) + " < m)");
    if (pm8 == 3) {
        if (m >= 4) {
            if (o2 >= m - 1) return CaseTag::P3LinearSplit;
            if (o2 == m - 2) return m == 4 ? CaseTag::P3Exact4M4 : CaseTag::P3HalfSplit;
            throw InconsistencyError("classify: ord2(s) >= m-2 is forced by 2^m | q-1");
        }
        if (m == 3) return o2 >= 2 ? CaseTag::P3Order8Div4 : CaseTag::P3Order8Exact2;
        throw InvalidInstanceError("classify: no closed form for p = 3 (mod 8), m = 2");
    }
    // pm8 == 5
    if (m >= 3) {
        if (o2 >= m) return CaseTag::P5LinearSplit;
        if (o2 == m - 1) return CaseTag::P5HalfSplit;
        if (o2 == m - 2) return CaseTag::P5QuarterSplit;
        throw InconsistencyError("classify: ord2(s) >= m-2 is forced by 2^m | q-1");
    }
    // m == 2
    if (o2 >= 2) return CaseTag::P5Order4Div4;
    if (o2 == 1) return CaseTag::P5Order4Exact2;
    return CaseTag::P5Order4Odd;
}

namespace {

Int two_pow(unsigned k) { return Int(1) << k; }

// One table row: a rational base plus an optional +- delta term.
struct SpecRow {
    std::vector<SymTerm> base;
    std::optional<SymTerm> delta;
    unsigned mult = 1;      // multiplicity of each signed entry
    bool nested = false;    // delta carries a nested radical
};

SymTerm term(Int c, long num, long den, bool imag = false, int radical = 0) {
    return SymTerm{std::move(c), num, den, imag, radical};
}

// sum_{r=3}^{t} 2^{r-1} A_r q^{(2^{r-2}-1)/2^{r-1}}
std::vector<SymTerm> sum_a(const PartitionSet& parts, unsigned t) {
    std::vector<SymTerm> out;
    for (unsigned r = 3; r <= t; ++r)
        out.push_back(term(two_pow(r - 1) * parts.A(r).A, (1L << (r - 2)) - 1, 1L << (r - 1)));
    return out;
}

// sum_{r=2}^{t} 2^{r-1} C_r q^{(2^{r-1}-1)/2^r}
std::vector<SymTerm> sum_c(const PartitionSet& parts, unsigned t) {
    std::vector<SymTerm> out;
    for (unsigned r = 2; r <= t; ++r)
        out.push_back(term(two_pow(r - 1) * parts.C(r).C, (1L << (r - 1)) - 1, 1L << r));
    return out;
}

std::vector<SymTerm> with(std::vector<SymTerm> base, SymTerm extra) {
    base.push_back(std::move(extra));
    return base;
}

std::vector<SpecRow> spectrum_rows(uint64_t /*p*/, unsigned /*s*/, unsigned m, CaseTag tag,
                                   const PartitionSet& parts) {
    std::vector<SpecRow> rows;
    auto row = [&](std::vector<SymTerm> base, std::optional<SymTerm> delta, unsigned mult,
                   bool nested = false) {
        rows.push_back(SpecRow{std::move(base), std::move(delta), mult, nested});
    };
    const SymTerm half_q = term(Int(1), 1, 2);       //  q^{1/2}
    const SymTerm minus_half_q = term(Int(-1), 1, 2);
    const SymTerm minus_3half_q = term(Int(-3), 1, 2);

    switch (tag) {
    case CaseTag::P3LinearSplit: {
        row({half_q}, term(4 * parts.A(3).B, 1, 4), 1u << (m - 2));
        row({half_q}, term(8 * parts.A(4).B, 3, 8), 1u << (m - 3));
        for (unsigned t = 2; t + 3 <= m; ++t)
            row(with(with(sum_a(parts, t), minus_3half_q),
                     term(-two_pow(t) * parts.A(t + 1).A, (1L << (t - 1)) - 1, 1L << t)),
                term(two_pow(t + 2) * parts.A(t + 3).B, (1L << (t + 1)) - 1, 1L << (t + 2)),
                1u << (m - t - 2));
        row(with(with(sum_a(parts, m - 2), minus_3half_q),
                 term(-two_pow(m - 2) * parts.A(m - 1).A, (1L << (m - 3)) - 1, 1L << (m - 2))),
            std::nullopt, 2);
        row(with(sum_a(parts, m - 1), minus_3half_q),
            term(two_pow(m - 1) * parts.A(m).A, (1L << (m - 2)) - 1, 1L << (m - 1)), 1);
        break;
    }
    case CaseTag::P3HalfSplit: {
        row({half_q}, term(4 * parts.A(3).B, 1, 4), 1u << (m - 2));
        row({half_q}, term(8 * parts.A(4).B, 3, 8), 1u << (m - 3));
        for (unsigned t = 2; t + 4 <= m; ++t)
            row(with(with(sum_a(parts, t), minus_3half_q),
                     term(-two_pow(t) * parts.A(t + 1).A, (1L << (t - 1)) - 1, 1L << t)),
                term(two_pow(t + 2) * parts.A(t + 3).B, (1L << (t + 1)) - 1, 1L << (t + 2)),
                1u << (m - t - 2));
        row(with(with(sum_a(parts, m - 3), minus_3half_q),
                 term(-two_pow(m - 3) * parts.A(m - 2).A, (1L << (m - 4)) - 1, 1L << (m - 3))),
            term(two_pow(m - 1) * parts.A(m).B, (1L << (m - 2)) - 1, 1L << (m - 1), true), 2);
        row(with(with(sum_a(parts, m - 2), minus_3half_q),
                 term(-two_pow(m - 2) * parts.A(m - 1).A, (1L << (m - 3)) - 1, 1L << (m - 2))),
            std::nullopt, 2);
        row(with(sum_a(parts, m - 1), minus_3half_q),
            term(two_pow(m - 1) * parts.A(m).A, (1L << (m - 2)) - 1, 1L << (m - 1), true), 1);
        break;
    }
    case CaseTag::P3Exact4M4: {
        row({half_q}, term(4 * parts.A(3).B, 1, 4), 4);
        row({half_q}, term(8 * parts.A(4).B, 3, 8, true), 2);
        row({minus_3half_q, term(-4 * parts.A(3).A, 1, 4)}, std::nullopt, 2);
        row({minus_3half_q, term(4 * parts.A(3).A, 1, 4)},
            term(8 * parts.A(4).A, 3, 8, true), 1);
        break;
    }
    case CaseTag::P3Order8Div4: {
        row({half_q}, std::nullopt, 2);
        row({half_q}, term(4 * parts.A(3).B, 1, 4), 2);
        row({minus_3half_q}, term(4 * parts.A(3).A, 1, 4), 1);
        break;
    }
    case CaseTag::P3Order8Exact2: {
        row({term(Int(3), 1, 2)}, std::nullopt, 2);
        row({minus_half_q}, term(4 * parts.A(3).A, 1, 4, true), 1);
        row({minus_half_q}, term(4 * parts.A(3).B, 1, 4, true), 2);
        break;
    }
    case CaseTag::P5LinearSplit:
    case CaseTag::P5HalfSplit:
    case CaseTag::P5Order4Div4: {
        row({half_q}, term(2 * parts.C(2).D, 1, 4), 1u << (m - 2));
        for (unsigned t = 1; t + 2 <= m; ++t)
            row(with(with(sum_c(parts, t), minus_half_q),
                     term(-two_pow(t) * parts.C(t + 1).C, (1L << t) - 1, 1L << (t + 1))),
                term(two_pow(t + 1) * parts.C(t + 2).D, (1L << (t + 1)) - 1, 1L << (t + 2)),
                1u << (m - t - 2));
        row(with(sum_c(parts, m - 1), minus_half_q),
            term(two_pow(m - 1) * parts.C(m).C, (1L << (m - 1)) - 1, 1L << m), 1);
        break;
    }
    case CaseTag::P5QuarterSplit: {
        row({half_q}, term(2 * parts.C(2).D, 1, 4), 1u << (m - 2));
        for (unsigned t = 1; t + 3 <= m; ++t)
            row(with(with(sum_c(parts, t), minus_half_q),
                     term(-two_pow(t) * parts.C(t + 1).C, (1L << t) - 1, 1L << (t + 1))),
                term(two_pow(t + 1) * parts.C(t + 2).D, (1L << (t + 1)) - 1, 1L << (t + 2)),
                1u << (m - t - 2));
        // the two conjugate families with nested radicals
        row(with(with(sum_c(parts, m - 2), minus_half_q),
                 term(two_pow(m - 2) * parts.C(m - 1).C, (1L << (m - 2)) - 1, 1L << (m - 1))),
            term(two_pow(m - 2), (1L << (m - 1)) - 1, 1L << m, true, -1), 1, true);
        row(with(with(sum_c(parts, m - 2), minus_half_q),
                 term(-two_pow(m - 2) * parts.C(m - 1).C, (1L << (m - 2)) - 1, 1L << (m - 1))),
            term(two_pow(m - 2), (1L << (m - 1)) - 1, 1L << m, true, +1), 1, true);
        break;
    }
    case CaseTag::P5Order4Exact2: {
        row({minus_half_q}, term(2 * parts.C(2).C, 1, 4), 1);
        row({half_q}, term(2 * parts.C(2).D, 1, 4), 1);
        break;
    }
    case CaseTag::P5Order4Odd:
        throw InvalidInstanceError(
            "no closed-form spectrum: the order-4 polynomial is irreducible for odd s");
    }
    return rows;
}

bool term_is_rational(unsigned s, const SymTerm& t) {
    return !t.imag && t.radical == 0 && (static_cast<long>(s) * t.num) % t.den == 0;
}

Int rational_term_value(uint64_t p, unsigned s, const SymTerm& t) {
    return t.c * q_power_int(p, s, t.num, t.den);
}

Int rational_base_value(uint64_t p, unsigned s, const std::vector<SymTerm>& base) {
    Int v = 0;
    for (const auto& t : base) {
        if (!term_is_rational(s, t))
            throw InconsistencyError("closed form: base value expected to be rational");
        v += rational_term_value(p, s, t);
    }
    return v;
}

} // namespace

unsigned Spectrum::total_multiplicity() const {
    unsigned t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

std::string Spectrum::entry_display(const SpectrumEntry& e) const {
    return e.display.display(p, s, radical_C, radical_knum, radical_kden);
}

Spectrum spectrum(uint64_t p, unsigned s, unsigned m, const PartitionSet& parts) {
    const CaseTag tag = classify(p, s, m);
    auto rows = spectrum_rows(p, s, m, tag, parts);

    Spectrum sp;
    sp.p = p;
    sp.s = s;
    sp.m = m;
    sp.tag = tag;
    if (tag == CaseTag::P5QuarterSplit) {
        const auto& part = parts.C(m - 1);
        long e4 = 4L * s * ((1L << (m - 1)) - 1) / (1L << m);
        if ((4L * s * ((1L << (m - 1)) - 1)) % (1L << m) != 0)
            throw InconsistencyError("spectrum: bundled radical exponent off the quarter grid");
        long k4 = 4L * s / (1L << (m - 1));
        sp.ctx = std::make_shared<SymContext>(p, e4, k4, Int(part.C), Int(part.D));
        sp.radical_C = part.C;
        sp.radical_knum = 1;
        sp.radical_kden = 1L << (m - 1);
    } else {
        sp.ctx = std::make_shared<SymContext>(p);
    }

    for (const auto& row : rows) {
        if (!row.delta) {
            SymbolicPeriodValue disp{row.base};
            SymValue val = SymValue::from_terms(sp.ctx, s, row.base);
            sp.entries.push_back({std::move(disp), std::move(val), row.mult});
            continue;
        }
        for (int sign : {+1, -1}) {
            SymTerm d = *row.delta;
            d.c *= sign;
            auto terms = with(row.base, d);
            SymValue val = SymValue::from_terms(sp.ctx, s, terms);
            sp.entries.push_back({SymbolicPeriodValue{std::move(terms)}, std::move(val), row.mult});
        }
    }

    if (sp.total_multiplicity() != (1u << m))
        throw InconsistencyError("spectrum: multiplicities do not total 2^m");
    SymValue zero_sum = SymValue::from_integer(sp.ctx, 0);
    for (const auto& e : sp.entries)
        zero_sum = zero_sum + e.value * SymValue::from_integer(sp.ctx, Int(e.multiplicity));
    if (!zero_sum.is_zero())
        throw InconsistencyError("spectrum: weighted sum of periods is not zero");
    return sp;
}

std::optional<std::vector<CycloInt>> spectrum_as_cycloints(const Spectrum& sp) {
    std::vector<CycloInt> out;
    for (const auto& e : sp.entries) {
        auto z = e.value.to_cycloint();
        if (!z) return std::nullopt;
        for (unsigned i = 0; i < e.multiplicity; ++i) out.push_back(*z);
    }
    return out;
}

FactoredPoly factorization(uint64_t p, unsigned s, unsigned m, const PartitionSet& parts) {
    const CaseTag tag = classify(p, s, m);
    if (tag == CaseTag::P5Order4Odd)
        throw InvalidInstanceError("factorization: irreducible order-4 case has no closed "
                                   "coefficient formula; use factorization_with_oracle");
    auto rows = spectrum_rows(p, s, m, tag, parts);

    FactoredPoly out;
    bool saw_nested = false;
    for (const auto& row : rows) {
        if (row.nested) {
            saw_nested = true;
            continue;
        }
        Int base = rational_base_value(p, s, row.base);
        if (!row.delta) {
            out.factors.emplace_back(IntPoly::linear_root(base), row.mult);
            continue;
        }
        const SymTerm& d = *row.delta;
        if (term_is_rational(s, d)) {
            Int dv = rational_term_value(p, s, d);
            out.factors.emplace_back(IntPoly::linear_root(base + dv), row.mult);
            out.factors.emplace_back(IntPoly::linear_root(base - dv), row.mult);
        } else {
            // conjugate pair: (X - base)^2 - delta^2, with delta^2 rational
            Int d2 = d.c * d.c * q_power_int(p, s, 2 * d.num, d.den);
            if (d.imag) d2 = -d2;
            IntPoly quad(std::vector<Int>{base * base - d2, -2 * base, Int(1)});
            out.factors.emplace_back(std::move(quad), row.mult);
        }
    }

    if (saw_nested) {
        // the four nested-radical roots assemble into one rational quartic:
        //   ((X + q^{1/2} - SC)^2 + 2^{2(m-2)} C^2 q^{(2^{m-2}-1)/2^{m-2}} + 2^{2m-3} q)^2
        //   - 2^{2(m-1)} C^2 q^{(2^{m-2}-1)/2^{m-2}} (X + (2^{m-2}+1) q^{1/2} - SC)^2
        const Int C(parts.C(m - 1).C);
        Int sqrtq = q_power_int(p, s, 1, 2);
        Int sc = 0;
        for (const auto& t : sum_c(parts, m - 2)) sc += rational_term_value(p, s, t);
        Int qq = q_power_int(p, s, 1, 1);
        Int qpow = q_power_int(p, s, (1L << (m - 2)) - 1, 1L << (m - 2));
        IntPoly inner(std::vector<Int>{sqrtq - sc, Int(1)});
        IntPoly a = inner * inner +
                    IntPoly::constant(two_pow(2 * (m - 2)) * C * C * qpow + two_pow(2 * m - 3) * qq);
        IntPoly b(std::vector<Int>{(two_pow(m - 2) + 1) * sqrtq - sc, Int(1)});
        IntPoly quartic = a * a - poly_scale(b * b, two_pow(2 * (m - 1)) * C * C * qpow);
        out.factors.emplace_back(std::move(quartic), 1);
    }

    out.canonicalize();
    if (out.total_degree() != (1u << m))
        throw InconsistencyError("factorization: total degree is not 2^m");
    return out;
}

FactoredPoly factorization_with_oracle(uint64_t p, unsigned s, unsigned m,
                                       const PartitionSet& parts, const IntPoly& oracle) {
    const CaseTag tag = classify(p, s, m);
    if (tag != CaseTag::P5Order4Odd) return factorization(p, s, m, parts);
    if (oracle.degree() != 4 || !oracle.is_monic())
        throw InvalidInputError("factorization_with_oracle: oracle must be monic of degree 4");
    FactoredPoly out;
    out.factors.emplace_back(oracle, 1);
    return out;
}

Int counts_formula(uint64_t p, unsigned s, unsigned m, unsigned n, const PartitionSet& parts) {
    if (n < 1) throw InvalidInputError("counts_formula: n must be positive");
    Spectrum sp = spectrum(p, s, m, parts);
    SymValue total = SymValue::from_integer(sp.ctx, 0);
    for (const auto& e : sp.entries)
        total = total + e.value.pow(n) * SymValue::from_integer(sp.ctx, Int(e.multiplicity));
    if (!total.is_rational_integer())
        throw InconsistencyError("counts_formula: power sum is not a rational integer");
    Int sums = total.rational_value();
    Int q = int_pow_ui(static_cast<unsigned long>(p), s);
    Int e(1);
    e <<= m;
    Int numer = int_pow(q, n - 1) * (e * q) + (q - 1) * sums;
    return div_exact(numer, e * q, "counts_formula: count not integral");
}

Int splitting_count(uint64_t p, unsigned s, unsigned m) {
    Int q = int_pow_ui(static_cast<unsigned long>(p), s);
    Int ratio = div_exact(q - 1, Int(static_cast<unsigned long>(p)) - 1, "splitting_count");
    Int e(1);
    e <<= m;
    Int g;
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), ratio.get_mpz_t());
    return g;
}

FactoredPoly semiprimitive_poly(uint64_t p, unsigned s, uint64_t e) {
    if (!is_prime_u64(p)) throw InvalidInputError("semiprimitive_poly: p must be prime");
    if (e <= 2) throw InvalidInputError("semiprimitive_poly: requires e > 2");
    Int q = int_pow_ui(static_cast<unsigned long>(p), s);
    Int qm1 = q - 1;
    if (qm1 % static_cast<unsigned long>(e) != 0)
        throw InvalidInputError("semiprimitive_poly: e must divide q-1");
    // minimal v with p^v = -1 (mod e); the powers of p mod e cycle, so if 1
    // recurs before -1 shows up there is no such v
    uint64_t v = 0;
    {
        uint64_t cur = 1;
        for (uint64_t i = 1; i <= 2 * e; ++i) {
            cur = mulmod_u64(cur, p % e, e);
            if (cur == e - 1) {
                v = i;
                break;
            }
            if (cur == 1) break;
        }
    }
    if (v == 0)
        throw NotSemiprimitiveError("semiprimitive_poly: e does not divide p^v + 1 for any v");
    if (s % (2 * v) != 0)
        throw InconsistencyError("semiprimitive_poly: 2v should divide s when e | q-1");
    const bool negative = ((s / (2 * v)) % 2) == 1; // sign (-1)^{s/2v}
    Int sqrtq = int_pow_ui(static_cast<unsigned long>(p), s / 2);
    Int signed_sqrtq = negative ? Int(-sqrtq) : sqrtq;
    FactoredPoly out;
    out.factors.emplace_back(IntPoly::linear_root(-Int(static_cast<unsigned long>(e - 1)) * signed_sqrtq), 1);
    out.factors.emplace_back(IntPoly::linear_root(signed_sqrtq), static_cast<unsigned>(e - 1));
    out.canonicalize();
    return out;
}

FactoredPoly example1_poly(unsigned s, uint64_t f) {
    if (s == 0 || s > 40) throw BudgetError("example1_poly: s out of supported range");
    if (!is_prime_u64(f)) throw InvalidInstanceError("example1_poly: f must be prime");
    Int q = int_pow_ui(2, s);
    Int qm1 = q - 1;
    if (qm1 % static_cast<unsigned long>(f) != 0)
        throw InvalidInstanceError("example1_poly: f must divide 2^s - 1");
    if (multiplicative_order_u64(2, f) != f - 1)
        throw InvalidInstanceError("example1_poly: 2 must be a primitive root mod f");
    Int e = div_exact(qm1, Int(static_cast<unsigned long>(f)), "example1_poly");
    // 2^{s-f+1}; the order condition gives (f-1) | s, so the exponent is >= 0
    if (s + 1 < f) throw InconsistencyError("example1_poly: s - f + 1 negative");
    Int w = int_pow_ui(2, s - static_cast<unsigned>(f) + 1);
    const Int fI(static_cast<unsigned long>(f));
    if (w % fI != 1)
        throw InconsistencyError("example1_poly: 2^{s-f+1} is not 1 mod f");
    FactoredPoly out;
    Int lead_mult = div_exact(w - 1, fI, "example1_poly: leading exponent");
    if (lead_mult > 0)
        out.factors.emplace_back(IntPoly::linear_root(q),
                                 static_cast<unsigned>(to_u64(lead_mult)));
    for (uint64_t j = 1; j <= (f - 1) / 2; ++j) {
        Int mult = div_exact(w * binomial(f, 2 * j), fI, "example1_poly: factor exponent");
        Int root = q - 4 * Int(static_cast<unsigned long>(j)) * e;
        out.factors.emplace_back(IntPoly::linear_root(root), static_cast<unsigned>(to_u64(mult)));
    }
    out.canonicalize();
    if (out.total_degree() != to_u64(e))
        throw InconsistencyError("example1_poly: total degree != e");
    return out;
}

FactoredPoly example2_poly(uint64_t p, unsigned s, unsigned ell) {
    if (!is_prime_u64(p)) throw InvalidInputError("example2_poly: p must be prime");
    if (ell == 0 || s % ell != 0) throw InvalidInputError("example2_poly: ell must divide s");
    Int q = int_pow_ui(static_cast<unsigned long>(p), s);
    Int pl = int_pow_ui(static_cast<unsigned long>(p), ell);
    Int e = div_exact(q - 1, pl - 1, "example2_poly: e");
    Int exp1 = div_exact(e - 1, pl, "example2_poly: (e-1)/p^ell");
    Int exp2 = int_pow_ui(static_cast<unsigned long>(p), s - ell);
    FactoredPoly out;
    if (exp1 > 0) out.factors.emplace_back(IntPoly::linear_root(q), static_cast<unsigned>(to_u64(exp1)));
    out.factors.emplace_back(IntPoly::linear_root(-(e - 1)), static_cast<unsigned>(to_u64(exp2)));
    out.canonicalize();
    if (Int(out.total_degree()) != e)
        throw InconsistencyError("example2_poly: total degree != e");
    return out;
}

} // namespace cyclo
