#ifndef CYCLO_CODES_HPP
#define CYCLO_CODES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "cyclo/closedform.hpp"
#include "cyclo/ffield.hpp"
#include "cyclo/periods.hpp"

namespace cyclo {

// Irreducible cyclic [(q-1)/N, s/ell] code over F_{p^ell}: codewords are
// the relative-trace evaluations (Tr(beta), Tr(beta*theta), ...) with
// theta = gamma^N.  Scope: e = gcd(N, (q-1)/(p^ell-1)) = 2^m with m >= 3.
struct CodeSpec {
    uint64_t p = 0;
    unsigned ell = 0;
    unsigned s = 0;
    uint64_t N = 0;
    uint64_t length = 0; // (q-1)/N
    unsigned dim = 0;    // s/ell
    uint64_t e = 0;      // gcd(N, (q-1)/(p^ell-1)) = 2^m
    unsigned m = 0;
    FieldElem theta; // gamma^N
};

CodeSpec build_code(const FieldDesc& f, unsigned ell, uint64_t N);

// Hamming weight of the codeword generated by beta, counted position by
// position.
uint64_t codeword_weight(const FieldDesc& f, const CodeSpec& c, const FieldElem& beta);

// Weight from a reduced period value: w = (p^ell - 1)(q - eta*) / (p^ell N),
// which must come out a nonnegative integer.
uint64_t weight_from_period(const CodeSpec& c, const Int& eta_star);

// Index j of the e-th power coset gamma^j H containing beta, found without
// discrete logs: beta * gamma^{-j} is an e-th power iff its (q-1)/e power
// is 1.
uint64_t coset_index(const FieldDesc& f, const CodeSpec& c, const FieldElem& beta);

struct WeightEnumerator {
    std::map<uint64_t, Int> counts; // weight -> number of codewords
    bool sampled = false;           // true when built in representative mode

    bool operator==(const WeightEnumerator&) const = default;
    Int total() const;
    std::string to_string() const; // 1 + a_1 X^{w_1} + ... display
};

enum class BruteForceMode { Auto, Full, Representative };

struct BruteForceOptions {
    uint64_t budget = 100000000; // max elementary trace tests for full mode
    BruteForceMode mode = BruteForceMode::Auto;
    unsigned samples_per_coset = 3; // extra random checks in representative mode
    uint64_t seed = 12345;
};

// Ground truth: full mode enumerates every beta in F_q; representative mode
// (above budget) evaluates one representative per coset, verifies the
// sampled betas agree, and extrapolates multiplicities (q-1)/e per coset.
WeightEnumerator weight_distribution_bruteforce(const FieldDesc& f, const CodeSpec& c,
                                                const BruteForceOptions& opt = {});

// Closed-form enumerator assembled from the period spectrum; weights that
// collide are merged by summing counts.
WeightEnumerator enumerator_closed_form(const CodeSpec& c, const PartitionSet& parts);

} // namespace cyclo

#endif
