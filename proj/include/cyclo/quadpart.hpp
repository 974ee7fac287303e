#ifndef CYCLO_QUADPART_HPP
#define CYCLO_QUADPART_HPP

#include <cstdint>
#include <map>

#include "cyclo/casetag.hpp"
#include "cyclo/intutil.hpp"

namespace cyclo {

// p^k = A^2 + 2B^2 with A = -1 (mod 4), p not dividing A, B >= 0.
// These conditions pin A and |B| uniquely for p = 3 (mod 8); the solver
// verifies uniqueness by exhausting the whole search range.
struct Partition2B2 {
    uint64_t p = 0;
    unsigned k = 0;
    int64_t A = 0;
    int64_t B = 0;
};

// p^k = C^2 + D^2 with C = -1 (mod 4), p not dividing C, D >= 0,
// for p = 5 (mod 8).
struct PartitionD2 {
    uint64_t p = 0;
    unsigned k = 0;
    int64_t C = 0;
    int64_t D = 0;
};

Partition2B2 solve_2B2(uint64_t p, unsigned k);
PartitionD2 solve_D2(uint64_t p, unsigned k);

// The family of partition parameters a closed-form instance consumes,
// indexed by the subscript r used in the spectra:
//   p = 3 (mod 8): A_r, B_r from p^{s/2^{r-2}}, r = 3..m;
//   p = 5 (mod 8): C_r, D_r from p^{s/2^{r-1}}, r = 2..m-1, and also r = m
//                  when 2^{m-1} | s.
struct PartitionSet {
    std::map<unsigned, Partition2B2> ab;
    std::map<unsigned, PartitionD2> cd;

    const Partition2B2& A(unsigned r) const;
    const PartitionD2& C(unsigned r) const;
};

PartitionSet partitions_for_instance(uint64_t p, unsigned s, unsigned m, CaseTag tag);

} // namespace cyclo

#endif
