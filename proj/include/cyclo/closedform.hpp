#ifndef CYCLO_CLOSEDFORM_HPP
#define CYCLO_CLOSEDFORM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclo/casetag.hpp"
#include "cyclo/cycloint.hpp"
#include "cyclo/quadpart.hpp"
#include "cyclo/symbolic.hpp"

namespace cyclo {

// Selects the closed-form family for reduced periods of order 2^m over
// F_{p^s}.  Verifies 2^m | q-1 through the identity ord2(q-1) = ord2(s) + 2,
// which holds for p = 3, 5 (mod 8).
CaseTag classify(uint64_t p, unsigned s, unsigned m);

// The closed-form multiset of the 2^m reduced periods, with +- variants
// expanded into separate entries.  Entries carry both a display form and an
// exact ring value; the multiset sums to zero, which is checked here.
struct SpectrumEntry {
    SymbolicPeriodValue display;
    SymValue value;
    unsigned multiplicity;
};

struct Spectrum {
    uint64_t p = 0;
    unsigned s = 0, m = 0;
    CaseTag tag{};
    SymContextPtr ctx;
    std::vector<SpectrumEntry> entries;
    // radicand data for rendering nested radicals (quarter-split case only)
    Int radical_C = 0;
    long radical_knum = 0, radical_kden = 1;

    unsigned total_multiplicity() const;
    std::string entry_display(const SpectrumEntry& e) const;
};

Spectrum spectrum(uint64_t p, unsigned s, unsigned m, const PartitionSet& parts);

// Exact embedding of the whole spectrum into Z[zeta_p], multiplicities
// expanded; nullopt when nested radicals are present (those values are
// only checked through factor roots).
std::optional<std::vector<CycloInt>> spectrum_as_cycloints(const Spectrum& sp);

// The closed-form decomposition of the reduced period polynomial of degree
// 2^m into irreducible factors.  Throws InvalidInstanceError for the odd-s
// order-4 family, where the polynomial is irreducible and no coefficient
// formula exists; factorization_with_oracle covers that case by wrapping the
// externally computed polynomial as the single factor.
FactoredPoly factorization(uint64_t p, unsigned s, unsigned m, const PartitionSet& parts);
FactoredPoly factorization_with_oracle(uint64_t p, unsigned s, unsigned m,
                                       const PartitionSet& parts, const IntPoly& oracle);

// N[x_1^{2^m} + ... + x_n^{2^m} = 0] from the closed-form spectrum:
//   q^{n-1} + (q-1)/(2^m q) * sum multiplicity * value^n,
// evaluated in the exact symbolic ring; the total must come out rational.
Int counts_formula(uint64_t p, unsigned s, unsigned m, unsigned n, const PartitionSet& parts);

// delta = gcd(2^m, (q-1)/(p-1)): the number of rational-irreducible factor
// slots the period polynomial splits into.
Int splitting_count(uint64_t p, unsigned s, unsigned m);

// Two-value closed form when e | p^v + 1 for minimal v (requires e | q-1):
//   P*_e(X) = (X + (-1)^{s/2v}(e-1) q^{1/2}) (X - (-1)^{s/2v} q^{1/2})^{e-1}.
FactoredPoly semiprimitive_poly(uint64_t p, unsigned s, uint64_t e);

// Characteristic-2 family: q = 2^s, f prime with 2 a primitive root mod f,
// e = (q-1)/f:
//   P*_e(X) = (X-q)^{(2^{s-f+1}-1)/f} prod_j (X-q+4je)^{2^{s-f+1} C(f,2j)/f}.
FactoredPoly example1_poly(unsigned s, uint64_t f);

// Subfield-norm family: e = (q-1)/(p^ell - 1):
//   P*_e(X) = (X-q)^{(e-1)/p^ell} (X+e-1)^{p^{s-ell}}.
FactoredPoly example2_poly(uint64_t p, unsigned s, unsigned ell);

} // namespace cyclo

#endif
