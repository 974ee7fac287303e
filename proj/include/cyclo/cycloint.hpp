#ifndef CYCLO_CYCLOINT_HPP
#define CYCLO_CYCLOINT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/intutil.hpp"

namespace cyclo {

// Element of Z[zeta_p], zeta_p = exp(2*pi*i/p), stored on the integral basis
// 1, zeta, ..., zeta^{p-2}.  zeta^{p-1} is rewritten as -(1 + zeta + ... +
// zeta^{p-2}), so coordinates are unique.  p = 2 degenerates to plain integers
// (zeta_2 = -1).
class CycloInt {
public:
    explicit CycloInt(uint64_t p);
    CycloInt(uint64_t p, std::vector<Int> coords); // must have length p-1

    static CycloInt from_integer(uint64_t p, Int n);
    static CycloInt zeta_power(uint64_t p, uint64_t k);
    // Quadratic Gauss sum sum_t legendre(t|p) zeta^t; squares to
    // (-1)^{(p-1)/2} p.  Used to embed sqrt(p) / i*sqrt(p) exactly.
    static CycloInt gauss_sum(uint64_t p);

    uint64_t p() const { return p_; }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational_integer() const;
    Int rational_value() const; // throws InconsistencyError if not rational

    bool operator==(const CycloInt&) const = default;

    std::string to_string() const;

private:
    uint64_t p_;
    std::vector<Int> coords_;
};

CycloInt cyc_add(const CycloInt& a, const CycloInt& b);
CycloInt cyc_sub(const CycloInt& a, const CycloInt& b);
CycloInt cyc_neg(const CycloInt& a);
CycloInt cyc_mul(const CycloInt& a, const CycloInt& b);
CycloInt cyc_pow(const CycloInt& a, uint64_t n);
CycloInt cyc_scale(const CycloInt& a, const Int& c);
// Divides every coordinate exactly by d; throws on remainder.
CycloInt cyc_div_exact(const CycloInt& a, const Int& d, const char* what);

// Dense integer polynomial, constant term first, no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(Int c);
    static IntPoly x(); // the monomial X
    // X - r
    static IntPoly linear_root(const Int& r);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& coeff(size_t i) const; // 0 for i > degree
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly&) const = default;

    IntPoly pow(unsigned e) const;
    Int eval_int(const Int& x) const;
    // P(a*X + b)
    IntPoly compose_linear(const Int& a, const Int& b) const;

    std::string to_string(const std::string& var = "X") const;

private:
    std::vector<Int> c_;
    void trim();
    friend IntPoly operator+(const IntPoly&, const IntPoly&);
    friend IntPoly operator-(const IntPoly&, const IntPoly&);
    friend IntPoly operator*(const IntPoly&, const IntPoly&);
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const IntPoly& a, const Int& c);

// Exact Horner evaluation of an integer polynomial at a cyclotomic integer.
CycloInt eval_intpoly_at(const IntPoly& poly, const CycloInt& z);

// Reconstructs the monic polynomial X^e - s1 X^{e-1} + ... from the power
// sums s_n = sum_j y_j^n, n = 1..e, via Newton's identities
//   n*sigma_n = s_1 sigma_{n-1} - s_2 sigma_{n-2} + ... + (-1)^{n-1} s_n.
// Throws InconsistencyError when some n*sigma_n is not divisible by n, which
// means the input was not a genuine power-sum sequence of algebraic integers.
IntPoly newton_from_power_sums(std::span<const Int> s);

// Monic polynomial factors with multiplicities.
struct FactoredPoly {
    std::vector<std::pair<IntPoly, unsigned>> factors;

    unsigned total_degree() const;
    IntPoly expand() const;
    // Sorts factors (degree, then coefficients) and merges duplicates.
    void canonicalize();

    std::string to_string(const std::string& var = "X") const;
};

} // namespace cyclo

#endif
