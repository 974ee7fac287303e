#ifndef CYCLO_CASETAG_HPP
#define CYCLO_CASETAG_HPP

#include <string>

#include "cyclo/errors.hpp"

namespace cyclo {

// Which closed-form family an instance (p, s, m) of order e = 2^m falls in.
// The split is driven by p mod 8 and by how ord_2(s) compares with m; each
// family has its own spectrum table and factorization shape.
enum class CaseTag {
    // p = 3 (mod 8), m >= 4
    P3LinearSplit,  // 2^{m-1} | s : all periods rational, linear factors only
    P3HalfSplit,    // 2^{m-2} || s, m >= 5 : two conjugate pairs, quadratics
    P3Exact4M4,     // 4 || s, m = 4 : order-16 family with imaginary pairs
    // p = 3 (mod 8), m = 3
    P3Order8Div4,   // 4 | s : five rational period values
    P3Order8Exact2, // 2 || s : one rational value plus imaginary pairs
    // p = 5 (mod 8), m >= 3
    P5LinearSplit,   // 2^m | s : all periods rational (valid down to m = 2)
    P5HalfSplit,     // 2^{m-1} || s : real quadratic surds (valid down to m = 3)
    P5QuarterSplit,  // 2^{m-2} || s : nested radicals, one quartic factor
    // p = 5 (mod 8), m = 2
    P5Order4Div4,   // 4 | s : four rational period values
    P5Order4Exact2, // 2 || s : two real-surd quadratic factors
    P5Order4Odd,    // s odd : the quartic is irreducible; no closed coefficients
};

std::string to_string(CaseTag tag);

} // namespace cyclo

#endif
