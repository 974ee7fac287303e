#include "cyclo/symbolic.hpp"

#include <numeric>
#include <sstream>

namespace cyclo {

namespace {

// p^{j/2} as an element of Z[sqrt p], j >= 0.
SqrtPExt sqrtp_power(uint64_t p, long j) {
    if (j < 0) throw InconsistencyError("sqrtp_power: negative exponent");
    Int whole = int_pow_ui(static_cast<unsigned long>(p), static_cast<unsigned long>(j / 2));
    if (j % 2 == 0) return {whole, Int(0)};
    return {Int(0), whole};
}

std::string exponent_str(unsigned s, long num, long den) {
    long n = static_cast<long>(s) * num;
    long d = den;
    long g = std::gcd(n, d);
    if (g) {
        n /= g;
        d /= g;
    }
    std::ostringstream os;
    if (d == 1) os << n;
    else os << "(" << n << "/" << d << ")";
    return os.str();
}

} // namespace

std::string SymbolicPeriodValue::display(uint64_t p, unsigned s, const Int& radical_C, long knum,
                                         long kden) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (t.c == 0) continue;
        Int mag = abs(t.c);
        if (first) {
            if (t.c < 0) os << "-";
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        bool wrote = false;
        bool exponent_zero = t.num == 0;
        if (mag != 1 || (exponent_zero && !t.imag && t.radical == 0)) {
            os << mag.get_str();
            wrote = true;
        }
        if (!exponent_zero) {
            if (wrote) os << "*";
            os << p << "^" << exponent_str(s, t.num, t.den);
            wrote = true;
        }
        if (t.imag) {
            if (wrote) os << "*";
            os << "i";
            wrote = true;
        }
        if (t.radical != 0) {
            if (wrote) os << "*";
            // render 2*(p^K -+ C) with the sign of C folded in
            Int c_eff = (t.radical < 0) ? -radical_C : radical_C;
            os << "sqrt(2*(" << p << "^" << exponent_str(s, knum, kden);
            if (c_eff >= 0) os << " + " << c_eff.get_str();
            else os << " - " << Int(abs(c_eff)).get_str();
            os << "))";
        }
    }
    if (first) os << "0";
    return os.str();
}

SymContext::SymContext(uint64_t p) : p_(p) {}

SymContext::SymContext(uint64_t p, long e4, long k4, const Int& C, const Int& D)
    : p_(p), has_radical_(true), e4_(e4), k4_(k4), C_(C) {
    if (k4 % 2 != 0) throw InconsistencyError("SymContext: K must be half-integral");
    long two_e_plus_k_times2 = e4 + k4 / 2; // = 2(2E+K) in half-units
    if (two_e_plus_k_times2 % 2 != 0)
        throw InconsistencyError("SymContext: 2E+K must be integral");
    if (k4 <= 0) throw InconsistencyError("SymContext: 2K must be a positive integer");
    // partition consistency: C^2 + D^2 = p^{2K}
    Int pk = int_pow_ui(static_cast<unsigned long>(p), static_cast<unsigned long>(k4 / 2));
    if (C * C + D * D != pk)
        throw InconsistencyError("SymContext: C^2 + D^2 != p^{2K}");

    SqrtPExt lead = sqrtp_power(p, two_e_plus_k_times2); // p^{2E+K}
    SqrtPExt tail = sqrtp_power(p, e4);                  // p^{2E}
    tm_sq_ = {2 * lead.a - 2 * C * tail.a, 2 * lead.b - 2 * C * tail.b};
    tp_sq_ = {2 * lead.a + 2 * C * tail.a, 2 * lead.b + 2 * C * tail.b};
    Int absD = abs(D);
    cross_ = {2 * absD * tail.a, 2 * absD * tail.b};
}

SymValue::SymValue(SymContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw InvalidInputError("SymValue: null context");
}

SymValue SymValue::from_integer(SymContextPtr ctx, Int n) {
    SymValue v(std::move(ctx));
    v.accumulate(std::move(n), 0, 0, 0, 0);
    v.prune();
    return v;
}

SymValue SymValue::from_term(SymContextPtr ctx, unsigned s, const SymTerm& t) {
    SymValue v(ctx);
    long num4 = 4 * static_cast<long>(s) * t.num;
    if (num4 % t.den != 0)
        throw InconsistencyError("symbolic term: exponent not on the quarter grid");
    long e4 = num4 / t.den; // exponent of p in quarter units
    if (e4 < 0) throw InconsistencyError("symbolic term: negative exponent");
    if (t.radical == 0) {
        if (e4 % 2 != 0)
            throw InconsistencyError("symbolic term: plain exponent must be half-integral");
        SqrtPExt w = sqrtp_power(ctx->p(), e4 / 2);
        v.accumulate(t.c * w.a, 0, t.imag ? 1 : 0, 0, 0);
        v.accumulate(t.c * w.b, 1, t.imag ? 1 : 0, 0, 0);
    } else {
        if (!ctx->has_radical())
            throw InconsistencyError("symbolic term: radical term without radical context");
        if (e4 != ctx->e4())
            throw InconsistencyError("symbolic term: radical exponent differs from context");
        v.accumulate(t.c, 0, t.imag ? 1 : 0, t.radical < 0 ? 1 : 0, t.radical > 0 ? 1 : 0);
    }
    v.prune();
    return v;
}

SymValue SymValue::from_terms(SymContextPtr ctx, unsigned s, const std::vector<SymTerm>& ts) {
    SymValue v(ctx);
    for (const auto& t : ts) v = v + from_term(ctx, s, t);
    return v;
}

void SymValue::accumulate(Int c, unsigned h, unsigned im, unsigned tm, unsigned tp) {
    if (c == 0) return;
    if (im >= 2) {
        c = -c;
        im -= 2;
    }
    const Int p(static_cast<unsigned long>(ctx_->p()));
    while (h >= 2) {
        c *= p;
        h -= 2;
    }
    if (tm >= 1 && tp >= 1) {
        const SqrtPExt& r = ctx_->t_cross();
        accumulate(c * r.a, h, im, tm - 1, tp - 1);
        accumulate(c * r.b, h + 1, im, tm - 1, tp - 1);
        return;
    }
    if (tm >= 2) {
        const SqrtPExt& r = ctx_->t_minus_sq();
        accumulate(c * r.a, h, im, tm - 2, tp);
        accumulate(c * r.b, h + 1, im, tm - 2, tp);
        return;
    }
    if (tp >= 2) {
        const SqrtPExt& r = ctx_->t_plus_sq();
        accumulate(c * r.a, h, im, tm, tp - 2);
        accumulate(c * r.b, h + 1, im, tm, tp - 2);
        return;
    }
    terms_[Mono{static_cast<uint8_t>(h), static_cast<uint8_t>(im), static_cast<uint8_t>(tm),
                static_cast<uint8_t>(tp)}] += c;
}

void SymValue::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

bool SymValue::is_zero() const { return terms_.empty(); }

bool SymValue::is_rational_integer() const {
    for (const auto& [mono, c] : terms_) {
        if (mono != Mono{}) return false;
    }
    return true;
}

Int SymValue::rational_value() const {
    if (!is_rational_integer())
        throw InconsistencyError("symbolic value is not a rational integer");
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Int(0) : it->second;
}

static void check_compatible(const SymValue& a, const SymValue& b) {
    if (a.ctx() != b.ctx())
        throw InvalidInputError("symbolic values from different contexts");
}

SymValue SymValue::operator+(const SymValue& o) const {
    check_compatible(*this, o);
    SymValue r = *this;
    for (const auto& [mono, c] : o.terms_) r.terms_[mono] += c;
    r.prune();
    return r;
}

SymValue SymValue::operator-(const SymValue& o) const {
    check_compatible(*this, o);
    SymValue r = *this;
    for (const auto& [mono, c] : o.terms_) r.terms_[mono] -= c;
    r.prune();
    return r;
}

SymValue SymValue::operator*(const SymValue& o) const {
    check_compatible(*this, o);
    SymValue r(ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.accumulate(ca * cb, ma.h + mb.h, ma.im + mb.im, ma.tm + mb.tm, ma.tp + mb.tp);
    r.prune();
    return r;
}

SymValue SymValue::pow(unsigned n) const {
    SymValue result = from_integer(ctx_, 1);
    SymValue base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

std::optional<CycloInt> SymValue::to_cycloint() const {
    const uint64_t p = ctx_->p();
    CycloInt out(p);
    // the quadratic Gauss sum realizes sqrt(p) (p = 1 mod 4) or i*sqrt(p)
    // (p = 3 mod 4) inside Z[zeta_p]
    CycloInt g = CycloInt::gauss_sum(p);
    for (const auto& [mono, c] : terms_) {
        if (mono.tm || mono.tp) return std::nullopt;
        if (mono.h == 0 && mono.im == 0) {
            out = cyc_add(out, CycloInt::from_integer(p, c));
        } else if (p % 4 == 1 && mono.h == 1 && mono.im == 0) {
            out = cyc_add(out, cyc_scale(g, c));
        } else if (p % 4 == 3 && mono.h == 1 && mono.im == 1) {
            out = cyc_add(out, cyc_scale(g, c));
        } else {
            return std::nullopt; // i alone, or sqrt(p)/i*sqrt(p) in the wrong class
        }
    }
    return out;
}

Int q_power_int(uint64_t p, unsigned s, long num, long den) {
    long n = static_cast<long>(s) * num;
    if (den == 0 || n % den != 0)
        throw InconsistencyError("q_power_int: exponent s*" + std::to_string(num) + "/" +
                                 std::to_string(den) + " not integral");
    long e = n / den;
    if (e < 0) throw InconsistencyError("q_power_int: negative exponent");
    return int_pow_ui(static_cast<unsigned long>(p), static_cast<unsigned long>(e));
}

} // namespace cyclo
