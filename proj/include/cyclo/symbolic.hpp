#ifndef CYCLO_SYMBOLIC_HPP
#define CYCLO_SYMBOLIC_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/cycloint.hpp"
#include "cyclo/intutil.hpp"

namespace cyclo {

// One displayed term of a closed-form period value:
//   c * p^{s*num/den} [* i] [* sqrt(2*(p^{s*knum/kden} -+ C))]
// Exponents are carried as exact fractions of s with power-of-two
// denominators, exactly as the spectra state them.
struct SymTerm {
    Int c;
    long num = 0;
    long den = 1;
    bool imag = false;
    int radical = 0; // 0: none, -1: sqrt(2(u - C)), +1: sqrt(2(u + C))
};

struct SymbolicPeriodValue {
    std::vector<SymTerm> terms;

    std::string display(uint64_t p, unsigned s, const Int& radical_C = Int(0), long knum = 0,
                        long kden = 1) const;
};

// a + b*sqrt(p)
struct SqrtPExt {
    Int a, b;
};

// Shared evaluation context for the exact value ring of one instance:
// Z[sqrt(p), i] extended, when the quarter-split case is in play, by the two
// bundled radicals
//   T-+ = p^E * sqrt(2(p^K -+ C)),
// whose squares and cross product reduce back into Z[sqrt(p)]:
//   T-+^2 = 2 p^{2E+K} -+ 2C p^{2E},     T- * T+ = 2|D| p^{2E}.
class SymContext {
public:
    explicit SymContext(uint64_t p);
    // E and K given in quarter-exponents of p (E = e4/4, K = k4/4).
    // Requires 2E half-integral or integral, K half-integral, 2E+K integral,
    // and C^2 + D^2 = p^{2K}.
    SymContext(uint64_t p, long e4, long k4, const Int& C, const Int& D);

    uint64_t p() const { return p_; }
    bool has_radical() const { return has_radical_; }
    long e4() const { return e4_; }
    long k4() const { return k4_; }
    const Int& radical_C() const { return C_; }
    const SqrtPExt& t_minus_sq() const { return tm_sq_; }
    const SqrtPExt& t_plus_sq() const { return tp_sq_; }
    const SqrtPExt& t_cross() const { return cross_; }

private:
    uint64_t p_;
    bool has_radical_ = false;
    long e4_ = 0, k4_ = 0;
    Int C_;
    SqrtPExt tm_sq_{}, tp_sq_{}, cross_{};
};

using SymContextPtr = std::shared_ptr<const SymContext>;

// Exact ring element over the monomial basis
//   (sqrt p)^h * i^b * T-^tm * T+^tp,  all flags in {0,1}.
// Closed under multiplication via the context's reduction table; the
// representation is canonical as long as T- and T+ never meet in one
// product, which holds for powers of single spectrum values.
class SymValue {
public:
    explicit SymValue(SymContextPtr ctx);

    static SymValue from_integer(SymContextPtr ctx, Int n);
    // c * p^{s*num/den} * i^imag with an optional radical flag (+-1), built
    // from a display term.  The exponent must be integral, half-integral, or
    // (with a radical) match the context's bundled exponent E.
    static SymValue from_term(SymContextPtr ctx, unsigned s, const SymTerm& t);
    static SymValue from_terms(SymContextPtr ctx, unsigned s, const std::vector<SymTerm>& ts);

    const SymContextPtr& ctx() const { return ctx_; }

    bool is_zero() const;
    bool is_rational_integer() const;
    Int rational_value() const;

    SymValue operator+(const SymValue& o) const;
    SymValue operator-(const SymValue& o) const;
    SymValue operator*(const SymValue& o) const;
    SymValue pow(unsigned n) const;

    bool operator==(const SymValue& o) const { return terms_ == o.terms_; }

    // Exact embedding into Z[zeta_p] when the value only involves monomials
    // the cyclotomic field contains: rational terms always; sqrt(p) for
    // p = 1 (mod 4); i*sqrt(p) for p = 3 (mod 4).  Nested radicals have no
    // such embedding and yield nullopt.
    std::optional<CycloInt> to_cycloint() const;

private:
    struct Mono {
        uint8_t h = 0, im = 0, tm = 0, tp = 0;
        auto operator<=>(const Mono&) const = default;
    };
    SymContextPtr ctx_;
    std::map<Mono, Int> terms_;

    void accumulate(Int c, unsigned h, unsigned im, unsigned tm, unsigned tp);
    void prune();
};

// p^{s*num/den} as a plain integer; throws when the exponent is fractional.
Int q_power_int(uint64_t p, unsigned s, long num, long den);

} // namespace cyclo

#endif
