#include "cyclo/cycloint.hpp"

#include <algorithm>
#include <sstream>

namespace cyclo {

CycloInt::CycloInt(uint64_t p) : p_(p), coords_(p >= 2 ? p - 1 : 0) {
    if (p < 2) throw InvalidInputError("CycloInt: p must be at least 2");
}

CycloInt::CycloInt(uint64_t p, std::vector<Int> coords) : p_(p), coords_(std::move(coords)) {
    if (p < 2) throw InvalidInputError("CycloInt: p must be at least 2");
    if (coords_.size() != p - 1)
        throw InvalidInputError("CycloInt: coordinate vector must have length p-1");
}

CycloInt CycloInt::from_integer(uint64_t p, Int n) {
    CycloInt z(p);
    z.coords_[0] = std::move(n);
    return z;
}

CycloInt CycloInt::zeta_power(uint64_t p, uint64_t k) {
    CycloInt z(p);
    k %= p;
    if (k < p - 1) {
        z.coords_[k] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& c : z.coords_) c = -1;
    }
    return z;
}

CycloInt CycloInt::gauss_sum(uint64_t p) {
    if (p == 2) throw InvalidInputError("gauss_sum: p must be odd");
    CycloInt g(p);
    for (uint64_t t = 1; t < p; ++t) {
        uint64_t ls = powmod_u64(t, (p - 1) / 2, p); // 1 or p-1
        CycloInt zt = zeta_power(p, t);
        g = (ls == 1) ? cyc_add(g, zt) : cyc_sub(g, zt);
    }
    return g;
}

bool CycloInt::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

bool CycloInt::is_rational_integer() const {
    for (size_t k = 1; k < coords_.size(); ++k)
        if (coords_[k] != 0) return false;
    return true;
}

Int CycloInt::rational_value() const {
    if (!is_rational_integer())
        throw InconsistencyError("CycloInt value is not a rational integer: " + to_string());
    return coords_[0];
}

std::string CycloInt::to_string() const {
    if (is_rational_integer()) return coords_[0].get_str();
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < coords_.size(); ++k) {
        if (k) os << ", ";
        os << coords_[k].get_str();
    }
    os << ")";
    return os.str();
}

static void check_same_p(const CycloInt& a, const CycloInt& b, const char* op) {
    if (a.p() != b.p())
        throw InvalidInputError(std::string(op) + ": operands from different cyclotomic rings");
}

CycloInt cyc_add(const CycloInt& a, const CycloInt& b) {
    check_same_p(a, b, "cyc_add");
    std::vector<Int> c(a.coords());
    for (size_t k = 0; k < c.size(); ++k) c[k] += b.coords()[k];
    return {a.p(), std::move(c)};
}

CycloInt cyc_sub(const CycloInt& a, const CycloInt& b) {
    check_same_p(a, b, "cyc_sub");
    std::vector<Int> c(a.coords());
    for (size_t k = 0; k < c.size(); ++k) c[k] -= b.coords()[k];
    return {a.p(), std::move(c)};
}

CycloInt cyc_neg(const CycloInt& a) {
    std::vector<Int> c(a.coords());
    for (auto& x : c) x = -x;
    return {a.p(), std::move(c)};
}

CycloInt cyc_scale(const CycloInt& a, const Int& c) {
    std::vector<Int> v(a.coords());
    for (auto& x : v) x *= c;
    return {a.p(), std::move(v)};
}

CycloInt cyc_mul(const CycloInt& a, const CycloInt& b) {
    check_same_p(a, b, "cyc_mul");
    const uint64_t p = a.p();
    const size_t n = p - 1;
    // Convolution with exponents folded mod p (zeta^p = 1), then one
    // elimination of zeta^{p-1} via the vanishing sum of all p-th roots.
    std::vector<Int> full(p); // coordinates on 1, zeta, ..., zeta^{p-1}
    for (size_t i = 0; i < n; ++i) {
        if (a.coords()[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b.coords()[j] == 0) continue;
            full[(i + j) % p] += a.coords()[i] * b.coords()[j];
        }
    }
    std::vector<Int> c(n);
    for (size_t k = 0; k < n; ++k) c[k] = full[k] - full[n];
    return {p, std::move(c)};
}

CycloInt cyc_pow(const CycloInt& a, uint64_t n) {
    CycloInt result = CycloInt::from_integer(a.p(), 1);
    CycloInt base = a;
    while (n) {
        if (n & 1) result = cyc_mul(result, base);
        n >>= 1;
        if (n) base = cyc_mul(base, base);
    }
    return result;
}

CycloInt cyc_div_exact(const CycloInt& a, const Int& d, const char* what) {
    std::vector<Int> c(a.coords());
    for (auto& x : c) x = div_exact(x, d, what);
    return {a.p(), std::move(c)};
}

// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) { return IntPoly(std::vector<Int>{std::move(c)}); }

IntPoly IntPoly::x() { return IntPoly(std::vector<Int>{Int(0), Int(1)}); }

IntPoly IntPoly::linear_root(const Int& r) { return IntPoly(std::vector<Int>{-r, Int(1)}); }

const Int& IntPoly::coeff(size_t i) const {
    static const Int zero(0);
    return i < c_.size() ? c_[i] : zero;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly poly_scale(const IntPoly& a, const Int& c) {
    std::vector<Int> v(a.coeffs());
    for (auto& x : v) x *= c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = IntPoly::constant(1);
    IntPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Int IntPoly::eval_int(const Int& x) const {
    Int acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly IntPoly::compose_linear(const Int& a, const Int& b) const {
    // Horner: P(aX+b) built from the top coefficient down.
    IntPoly lin(std::vector<Int>{b, a});
    IntPoly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + IntPoly::constant(c_[i]);
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) {
            os << mag.get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

CycloInt eval_intpoly_at(const IntPoly& poly, const CycloInt& z) {
    CycloInt acc(z.p());
    for (size_t i = poly.coeffs().size(); i-- > 0;) {
        acc = cyc_mul(acc, z);
        acc = cyc_add(acc, CycloInt::from_integer(z.p(), poly.coeffs()[i]));
    }
    return acc;
}

IntPoly newton_from_power_sums(std::span<const Int> s) {
    const size_t e = s.size();
    if (e == 0) throw InvalidInputError("newton_from_power_sums: empty power-sum sequence");
    // sigma[0] = 1; sigma[n] from Newton's identity.
    std::vector<Int> sigma(e + 1);
    sigma[0] = 1;
    for (size_t n = 1; n <= e; ++n) {
        Int acc(0);
        for (size_t i = 1; i <= n; ++i) {
            Int term = s[i - 1] * sigma[n - i];
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        sigma[n] = div_exact(acc, Int(static_cast<unsigned long>(n)),
                             "newton_from_power_sums: inconsistent power sums");
    }
    std::vector<Int> coeffs(e + 1);
    for (size_t n = 0; n <= e; ++n) {
        // coefficient of X^{e-n} is (-1)^n sigma_n
        coeffs[e - n] = (n % 2 == 0) ? sigma[n] : -sigma[n];
    }
    return IntPoly(std::move(coeffs));
}

unsigned FactoredPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [f, mult] : factors) d += mult * static_cast<unsigned>(f.degree());
    return d;
}

IntPoly FactoredPoly::expand() const {
    IntPoly r = IntPoly::constant(1);
    for (const auto& [f, mult] : factors) r = r * f.pow(mult);
    return r;
}

void FactoredPoly::canonicalize() {
    auto key_less = [](const std::pair<IntPoly, unsigned>& a, const std::pair<IntPoly, unsigned>& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        const auto& ca = a.first.coeffs();
        const auto& cb = b.first.coeffs();
        for (size_t i = ca.size(); i-- > 0;) {
            if (ca[i] != cb[i]) return ca[i] < cb[i];
        }
        return false;
    };
    std::sort(factors.begin(), factors.end(), key_less);
    std::vector<std::pair<IntPoly, unsigned>> merged;
    for (auto& fm : factors) {
        if (fm.second == 0) continue;
        if (!merged.empty() && merged.back().first == fm.first) merged.back().second += fm.second;
        else merged.push_back(std::move(fm));
    }
    factors = std::move(merged);
}

// Quadratics X^2 + 2uX + c print in completed-square form when possible,
// matching the shape the closed forms are stated in.
static std::string factor_to_string(const IntPoly& f, const std::string& var) {
    auto inner_linear = [&](const Int& shift) {
        std::ostringstream os;
        os << var;
        if (shift > 0) os << "+" << shift.get_str();
        else if (shift < 0) os << "-" << Int(abs(shift)).get_str();
        return os.str();
    };
    if (f.degree() == 1 && f.is_monic()) return "(" + inner_linear(f.coeff(0)) + ")";
    if (f.degree() == 2 && f.is_monic() && f.coeff(1) % 2 == 0) {
        Int u = f.coeff(1) / 2;
        Int rest = f.coeff(0) - u * u;
        if (rest != 0) {
            std::ostringstream os;
            os << "((" << inner_linear(u) << ")^2" << (rest > 0 ? "+" : "-")
               << Int(abs(rest)).get_str() << ")";
            return os.str();
        }
    }
    return "(" + f.to_string(var) + ")";
}

std::string FactoredPoly::to_string(const std::string& var) const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, mult] : factors) {
        if (!first) os << " ";
        first = false;
        os << factor_to_string(f, var);
        if (mult != 1) os << "^" << mult;
    }
    return os.str();
}

} // namespace cyclo
