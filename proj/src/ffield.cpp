#include "cyclo/ffield.hpp"

#include <algorithm>
#include <sstream>

namespace cyclo {

namespace {

// Dense polynomial arithmetic over Z_p for modulus search and Frobenius
// towers.  Coefficients constant-first; vectors trimmed of leading zeros.
using ZpPoly = std::vector<uint64_t>;

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& mod, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    // reduce by the monic modulus
    const size_t d = mod.size() - 1;
    for (size_t k = c.size(); k-- > d;) {
        uint64_t lead = c[k];
        if (!lead) continue;
        c[k] = 0;
        for (size_t j = 0; j < d; ++j) {
            uint64_t sub = (lead * mod[j]) % p;
            c[k - d + j] = (c[k - d + j] + p - sub) % p;
        }
    }
    c.resize(std::min(c.size(), d));
    zp_trim(c);
    return c;
}

ZpPoly zp_powmod(ZpPoly base, Int e, const ZpPoly& mod, uint64_t p) {
    ZpPoly r{1};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = zp_mulmod(r, base, mod, p);
        e >>= 1;
        if (e > 0) base = zp_mulmod(base, base, mod, p);
    }
    return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, uint64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        uint64_t inv_lead = powmod_u64(b.back(), p - 2, p);
        ZpPoly r = a;
        while (r.size() >= b.size() && !r.empty()) {
            uint64_t factor = (r.back() * inv_lead) % p;
            size_t shift = r.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                r[shift + j] = (r[shift + j] + p - (factor * b[j]) % p) % p;
            zp_trim(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test: f of degree s is irreducible over Z_p iff x^{p^s} == x (mod f)
// and gcd(x^{p^{s/r}} - x, f) = 1 for every prime r | s.
bool zp_irreducible(const ZpPoly& f, uint64_t p, unsigned s) {
    // x reduced into Z_p[x]/(f); for s = 1 this is already a constant
    ZpPoly x = zp_mulmod(ZpPoly{0, 1}, ZpPoly{1}, f, p);
    // iterate Frobenius: frob[k] = x^{p^k} mod f
    ZpPoly cur = x;
    std::vector<ZpPoly> frob(s + 1);
    frob[0] = x;
    for (unsigned k = 1; k <= s; ++k) {
        cur = zp_powmod(cur, Int(static_cast<unsigned long>(p)), f, p);
        frob[k] = cur;
    }
    if (frob[s] != x) return false;
    for (uint64_t r : distinct_prime_factors_u64(s)) {
        // gcd(x^{p^{s/r}} - x, f) must be trivial
        ZpPoly diff = frob[s / r];
        size_t need = std::max<size_t>(diff.size(), x.size());
        diff.resize(need, 0);
        for (size_t i = 0; i < x.size(); ++i) diff[i] = (diff[i] + p - x[i]) % p;
        zp_trim(diff);
        ZpPoly g = zp_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

FieldElem FieldDesc::one() const {
    FieldElem a = zero();
    a.c[0] = 1 % p_;
    return a;
}

FieldElem FieldDesc::from_integer(uint64_t n) const {
    FieldElem a = zero();
    a.c[0] = static_cast<Residue>(n % p_);
    return a;
}

FieldElem FieldDesc::from_index(uint64_t idx) const {
    FieldElem a = zero();
    for (unsigned i = 0; i < s_; ++i) {
        a.c[i] = static_cast<Residue>(idx % p_);
        idx /= p_;
    }
    if (idx != 0) throw InvalidInputError("from_index: index out of range");
    return a;
}

uint64_t FieldDesc::index_of(const FieldElem& a) const {
    uint64_t idx = 0;
    for (unsigned i = s_; i-- > 0;) idx = idx * p_ + a.c[i];
    return idx;
}

FieldElem FieldDesc::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = a;
    for (unsigned i = 0; i < s_; ++i) {
        r.c[i] += b.c[i];
        if (r.c[i] >= p_) r.c[i] -= static_cast<Residue>(p_);
    }
    return r;
}

FieldElem FieldDesc::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = a;
    for (unsigned i = 0; i < s_; ++i) {
        r.c[i] = static_cast<Residue>((r.c[i] + p_ - b.c[i]) % p_);
    }
    return r;
}

FieldElem FieldDesc::neg(const FieldElem& a) const { return sub(zero(), a); }

FieldElem FieldDesc::mul(const FieldElem& a, const FieldElem& b) const {
    // schoolbook product, then reduction by the monic modulus
    std::vector<uint64_t> c(2 * s_ - 1, 0);
    for (unsigned i = 0; i < s_; ++i) {
        if (!a.c[i]) continue;
        uint64_t ai = a.c[i];
        for (unsigned j = 0; j < s_; ++j) c[i + j] += ai * b.c[j];
    }
    for (size_t k = c.size(); k-- > s_;) {
        uint64_t lead = c[k] % p_;
        c[k] = 0;
        if (!lead) continue;
        for (unsigned j = 0; j < s_; ++j) c[k - s_ + j] += lead * (p_ - modulus_[j]);
    }
    FieldElem r = zero();
    for (unsigned i = 0; i < s_; ++i) r.c[i] = static_cast<Residue>(c[i] % p_);
    return r;
}

FieldElem FieldDesc::pow(const FieldElem& a, const Int& n) const {
    if (n < 0) throw InvalidInputError("pow: negative exponent");
    FieldElem result = one();
    FieldElem base = a;
    Int e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

FieldElem FieldDesc::pow(const FieldElem& a, uint64_t n) const {
    return pow(a, Int(static_cast<unsigned long>(n)));
}

FieldElem FieldDesc::inverse(const FieldElem& a) const {
    if (a.is_zero()) throw InvalidInputError("inverse of zero");
    return pow(a, q_ - 2);
}

Residue FieldDesc::trace(const FieldElem& a) const {
    uint64_t acc = 0;
    for (unsigned i = 0; i < s_; ++i) acc += static_cast<uint64_t>(a.c[i]) * basis_trace_[i];
    return static_cast<Residue>(acc % p_);
}

bool FieldDesc::rel_trace_nonzero(unsigned ell, const FieldElem& a) const {
    if (ell == 0 || s_ % ell != 0)
        throw InvalidInputError("rel_trace_nonzero: ell must divide s");
    FieldElem acc = a;
    FieldElem cur = a;
    uint64_t step = 1;
    for (unsigned i = 0; i < ell; ++i) step *= p_; // p^ell; s <= 63/log2(p) by q guard
    for (unsigned i = 1; i < s_ / ell; ++i) {
        cur = pow(cur, step);
        acc = add(acc, cur);
    }
    return !acc.is_zero();
}

bool FieldDesc::is_generator(const FieldElem& a) const {
    if (a.is_zero()) return false;
    Int qm1 = q_ - 1;
    for (uint64_t r : qm1_factors_) {
        if (pow(a, div_exact(qm1, Int(static_cast<unsigned long>(r)), "is_generator")).c ==
            one().c)
            return false;
    }
    return true;
}

FieldElem FieldDesc::next_generator_after(const FieldElem& a) const {
    for (uint64_t idx = index_of(a) + 1; idx < q64_; ++idx) {
        FieldElem cand = from_index(idx);
        if (is_generator(cand)) return cand;
    }
    throw InconsistencyError("no further generator found; the search started past the last one");
}

std::vector<uint8_t> FieldDesc::trace_power_table(const FieldElem& g) const {
    if (p_ > 255) throw BudgetError("trace table requires p < 256");
    if (!is_generator(g))
        throw InconsistencyError("trace table requires a multiplicative generator");
    std::vector<uint8_t> table(q64_ - 1);
    FieldElem cur = one();
    for (uint64_t t = 0; t < q64_ - 1; ++t) {
        table[t] = static_cast<uint8_t>(trace(cur));
        cur = mul(cur, g);
    }
    return table;
}

std::string FieldDesc::elem_to_string(const FieldElem& a) const {
    std::ostringstream os;
    bool printed = false;
    for (unsigned i = 0; i < s_; ++i) {
        if (!a.c[i]) continue;
        if (printed) os << "+";
        if (a.c[i] != 1 || i == 0) os << a.c[i];
        if (i >= 1) {
            if (a.c[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        printed = true;
    }
    if (!printed) os << "0";
    return os.str();
}

FieldDesc FieldDesc::build(uint64_t p, unsigned s) {
    if (p < 2 || !is_prime_u64(p)) throw InvalidInputError("build_field: p must be prime");
    if (s == 0) throw InvalidInputError("build_field: s must be positive");

    FieldDesc f;
    f.p_ = p;
    f.s_ = s;
    f.q_ = int_pow_ui(static_cast<unsigned long>(p), s);
    if (!fits_u64(f.q_))
        throw BudgetError("build_field: q = p^s too large for explicit enumeration");
    f.q64_ = to_u64(f.q_);

    // Lexicographically smallest monic irreducible modulus, constant term
    // compared first: enumerate the s low coefficients as base-p digits.
    {
        bool found = false;
        for (uint64_t k = 0; k < f.q64_ && !found; ++k) {
            ZpPoly cand(s + 1, 0);
            uint64_t t = k;
            for (unsigned i = 0; i < s; ++i) {
                cand[i] = t % p;
                t /= p;
            }
            cand[s] = 1;
            if (zp_irreducible(cand, p, s)) {
                f.modulus_.assign(cand.begin(), cand.end());
                found = true;
            }
        }
        if (!found) throw InconsistencyError("no irreducible modulus found"); // cannot happen
    }

    // Basis traces Tr(x^i) straight from the definition, summing the
    // Frobenius orbit of each basis monomial.
    {
        ZpPoly mod(f.modulus_.begin(), f.modulus_.end());
        f.basis_trace_.resize(s);
        for (unsigned i = 0; i < s; ++i) {
            ZpPoly xi(i + 1, 0);
            xi[i] = 1;
            if (i == 0) xi = ZpPoly{1};
            ZpPoly cur = xi;
            ZpPoly acc = xi;
            for (unsigned j = 1; j < s; ++j) {
                cur = zp_powmod(cur, Int(static_cast<unsigned long>(p)), mod, p);
                // acc += cur
                if (acc.size() < cur.size()) acc.resize(cur.size(), 0);
                for (size_t k2 = 0; k2 < cur.size(); ++k2) acc[k2] = (acc[k2] + cur[k2]) % p;
                zp_trim(acc);
            }
            if (acc.size() > 1)
                throw InconsistencyError("basis trace is not in the prime field");
            f.basis_trace_[i] = static_cast<Residue>(acc.empty() ? 0 : acc[0]);
        }
    }

    f.qm1_factors_ = distinct_prime_factors_u64(f.q64_ - 1);

    // First generator in enumeration order.
    {
        bool found = false;
        for (uint64_t idx = 1; idx < f.q64_; ++idx) {
            FieldElem cand = f.from_index(idx);
            if (f.is_generator(cand)) {
                f.gamma_ = cand;
                found = true;
                break;
            }
        }
        if (!found) throw InconsistencyError("no generator found"); // cannot happen
    }

    return f;
}

RelTraceMap::RelTraceMap(const FieldDesc& f, unsigned ell) : f_(&f), ell_(ell) {
    if (ell == 0 || f.s() % ell != 0)
        throw InvalidInputError("RelTraceMap: ell must divide s");
    const unsigned s = f.s();
    rows_.assign(s, std::vector<Residue>(s, 0));
    uint64_t step = 1;
    for (unsigned i = 0; i < ell; ++i) step *= f.p();
    for (unsigned j = 0; j < s; ++j) {
        FieldElem xj = f.zero();
        xj.c[j] = 1;
        FieldElem acc = xj;
        FieldElem cur = xj;
        for (unsigned i = 1; i < s / ell; ++i) {
            cur = f.pow(cur, step);
            acc = f.add(acc, cur);
        }
        for (unsigned i = 0; i < s; ++i) rows_[i][j] = acc.c[i];
    }
}

bool RelTraceMap::is_nonzero_at(const FieldElem& a) const {
    const unsigned s = f_->s();
    const uint64_t p = f_->p();
    for (unsigned i = 0; i < s; ++i) {
        uint64_t acc = 0;
        const auto& row = rows_[i];
        for (unsigned j = 0; j < s; ++j) acc += static_cast<uint64_t>(row[j]) * a.c[j];
        if (acc % p != 0) return true;
    }
    return false;
}

} // namespace cyclo
