#ifndef CYCLO_FFIELD_HPP
#define CYCLO_FFIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/intutil.hpp"

namespace cyclo {

using Residue = uint32_t;

// Element of F_{p^s} in the polynomial basis: coefficient i is the
// coordinate of x^i, each in [0, p-1].
struct FieldElem {
    std::vector<Residue> c;

    bool operator==(const FieldElem&) const = default;
    bool is_zero() const {
        for (Residue v : c)
            if (v) return false;
        return true;
    }
};

// Deterministic explicit model of F_{p^s}:
//   * modulus = the lexicographically smallest monic irreducible of degree s
//     over Z_p, coefficients compared constant term first;
//   * gamma   = the first multiplicative generator in element-enumeration
//     order (coordinates read as base-p digits, ascending).
// Two builds with the same (p, s) produce identical objects, so results are
// reproducible across runs and implementations.  Immutable after build.
class FieldDesc {
public:
    static FieldDesc build(uint64_t p, unsigned s);

    uint64_t p() const { return p_; }
    unsigned s() const { return s_; }
    const Int& q() const { return q_; }
    uint64_t q_u64() const { return q64_; }
    // modulus coefficients, constant first, length s+1, monic
    const std::vector<Residue>& modulus() const { return modulus_; }
    const FieldElem& gamma() const { return gamma_; }
    const std::vector<uint64_t>& group_prime_factors() const { return qm1_factors_; }

    FieldElem zero() const { return FieldElem{std::vector<Residue>(s_, 0)}; }
    FieldElem one() const;
    FieldElem from_integer(uint64_t n) const; // n mod p as a constant

    // Element <-> enumeration index (coordinates as base-p digits).
    FieldElem from_index(uint64_t idx) const;
    uint64_t index_of(const FieldElem& a) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem pow(const FieldElem& a, const Int& n) const;
    FieldElem pow(const FieldElem& a, uint64_t n) const;
    FieldElem inverse(const FieldElem& a) const;
    FieldElem frobenius(const FieldElem& a) const { return pow(a, p_); }

    // Absolute trace Tr(a) = a + a^p + ... + a^{p^{s-1}}, an element of Z_p.
    // Evaluated as a Z_p-linear form from precomputed basis traces.
    Residue trace(const FieldElem& a) const;

    // True iff Tr_{F_q / F_{p^ell}}(a) = sum_{i < s/ell} a^{p^{ell i}} != 0.
    // Requires ell | s.
    bool rel_trace_nonzero(unsigned ell, const FieldElem& a) const;

    bool is_generator(const FieldElem& a) const;
    // First generator strictly after `a` in enumeration order (used by the
    // generator-independence checks).
    FieldElem next_generator_after(const FieldElem& a) const;

    // Tr(g^t) for t = 0..q-2, built by incremental multiplication by g.
    // One byte per element; this is what makes large-q period counting a
    // single O(q) pass.
    std::vector<uint8_t> trace_power_table(const FieldElem& g) const;

    std::string elem_to_string(const FieldElem& a) const;

private:
    FieldDesc() = default;

    uint64_t p_ = 0;
    unsigned s_ = 0;
    std::vector<Residue> modulus_;
    FieldElem gamma_;
    Int q_;
    uint64_t q64_ = 0;
    std::vector<Residue> basis_trace_; // Tr(x^i), i = 0..s-1
    std::vector<uint64_t> qm1_factors_;
};

// Z_p-linear zero test for the relative trace onto F_{p^ell}, precomputed as
// an s x s matrix so bulk codeword loops avoid per-element Frobenius towers.
class RelTraceMap {
public:
    RelTraceMap(const FieldDesc& f, unsigned ell);

    unsigned ell() const { return ell_; }
    bool is_nonzero_at(const FieldElem& a) const;

private:
    const FieldDesc* f_;
    unsigned ell_;
    // rows_[i][j] = coordinate i of RelTrace(x^j)
    std::vector<std::vector<Residue>> rows_;
};

} // namespace cyclo

#endif
