#ifndef CYCLO_PERIODS_HPP
#define CYCLO_PERIODS_HPP

#include <cstdint>
#include <vector>

#include "cyclo/cycloint.hpp"
#include "cyclo/ffield.hpp"

namespace cyclo {

// Raw brute-force data for the reduced periods of order e:
//   m[j][c] = #{ x in F_q : Tr(gamma^j x^e) = c },   j = 0..e-1, c = 0..p-1.
// Every row sums to q and eta*_j = sum_c m[j][c] zeta_p^c.
struct PeriodCounts {
    uint64_t p = 0;
    uint64_t e = 0;
    std::vector<std::vector<uint64_t>> m;

    bool operator==(const PeriodCounts&) const = default;
};

// Counts by one pass over F_q^* as powers of the generator, using a
// precomputed trace table; x = 0 contributes 1 to every m[j][0].
PeriodCounts period_counts(const FieldDesc& f, uint64_t e);
// Same, with respect to an explicitly chosen generator (the spectra must be
// independent of this choice; tests rely on that).
PeriodCounts period_counts_with_generator(const FieldDesc& f, const FieldElem& g, uint64_t e);

// eta*_j as exact cyclotomic integers.
std::vector<CycloInt> reduced_periods(const PeriodCounts& pc);
// eta_j = (eta*_j - 1)/e, exact in Z[zeta_p].
std::vector<CycloInt> ordinary_periods(const PeriodCounts& pc);

// s_n = sum_j periods[j]^n for n = 1..upto (default: e itself), with each s_n
// checked to be a rational integer.
std::vector<Int> power_sums(const std::vector<CycloInt>& periods, size_t upto = 0);

// The reduced period polynomial prod_j (X - eta*_j), reconstructed from the
// power sums by Newton's identities.  Monic of degree e over Z.
IntPoly oracle_period_poly(const FieldDesc& f, uint64_t e);

// P_e(X) = P*_e(eX + 1) / e^e; all coefficient divisions must be exact.
IntPoly reduced_to_ordinary_poly(const IntPoly& pstar, uint64_t e);

// N[x_1^e + ... + x_n^e = 0] via the character-sum identity
//   N = q^{n-1} + (q-1)/(e q) * sum_j (eta*_j)^n.
Int count_diagonal_charsum(const FieldDesc& f, uint64_t e, unsigned n,
                          const std::vector<CycloInt>& periods);

// Independent counter: n-fold additive convolution of u(a) = #{x : x^e = a}
// over the group (Z_p)^s, evaluated at 0.  Exact and oblivious to the
// character-sum route.  Requires q <= budget.
Int count_diagonal_convolution(const FieldDesc& f, uint64_t e, unsigned n,
                               uint64_t budget = 10000);
// All counts for n = 1..max_n in one sweep (the convolutions are shared).
std::vector<Int> count_diagonal_convolution_range(const FieldDesc& f, uint64_t e,
                                                  unsigned max_n, uint64_t budget = 10000);

} // namespace cyclo

#endif
